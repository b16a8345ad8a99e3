use clap::Parser;
use kepcorr_cli::scenario::Args;

fn main() {
    let args = Args::parse();
    std::process::exit(kepcorr_cli::main_impl(args));
}
