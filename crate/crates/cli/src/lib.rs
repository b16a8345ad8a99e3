//! Orchestration for the `kepcorr` binary: resolve a scenario, run the
//! correlator pipeline, emit plot data plus a metadata record.
//!
//! Exit codes: 0 success, 2 usage/validation error, 3 quadrature convergence
//! failure, 4 I/O failure.

pub mod output;
pub mod scenario;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use kepcorr::correlators::{correlation_series, spectrum, CorrelationKind, TauGrid};
use kepcorr::Error as CoreError;

use output::{
    kind_name, write_metadata, write_series_csv, write_series_json, write_spectrum_csv,
    write_spectrum_json, MetaDoc, QuadratureDoc, SeriesDoc, SpectrumDoc,
};
use scenario::{Args, FormatArg, GridSpec, Scenario};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Convergence(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Convergence(_) => 3,
            CliError::Io(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Convergence(m) | CliError::Io(m) => m,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(format!("i/o failure: {e}"))
    }
}

fn core_error(e: CoreError) -> CliError {
    match e {
        CoreError::Convergence { .. } => CliError::Convergence(format!("{e}")),
        other => CliError::Usage(format!("{other}")),
    }
}

fn sidecar_path(output: &Path) -> PathBuf {
    let mut name = output.file_name().unwrap_or_default().to_os_string();
    name.push(".meta.json");
    output.with_file_name(name)
}

/// Runs a resolved scenario end to end.
pub fn run(scn: &Scenario) -> Result<(), CliError> {
    let quad_doc = QuadratureDoc {
        phi_nodes: scn.quad.phi_nodes(),
        convergence_tol: scn.quad.convergence_tol(),
        kmax: scn.quad.kmax(),
    };
    let epsilon = scn.orbit.eccentricity();

    let mut body: Vec<u8> = Vec::new();
    let meta = match scn.series {
        Some((kind, grid)) => {
            let tau_grid =
                TauGrid::linspace(grid.tau_min, grid.tau_max, grid.points).map_err(core_error)?;
            let series =
                correlation_series(kind, &scn.orbit, &tau_grid, &scn.quad).map_err(core_error)?;
            match scn.format {
                FormatArg::Csv => write_series_csv(&mut body, &series)?,
                FormatArg::Json => {
                    let doc = SeriesDoc {
                        kind: kind_name(kind),
                        epsilon,
                        normalization: series.normalization,
                        omega_tau: series.tau_scaled.clone(),
                        value: series.values.clone(),
                        quadrature: quad_doc,
                    };
                    write_series_json(&mut body, &doc)?;
                }
            }
            metadata(scn, kind_name(kind), Some(grid), Some(series.normalization))
        }
        None => {
            let lines = spectrum(&scn.orbit, scn.quad.kmax()).map_err(core_error)?;
            match scn.format {
                FormatArg::Csv => write_spectrum_csv(&mut body, &lines)?,
                FormatArg::Json => {
                    let doc = SpectrumDoc {
                        kind: "spectrum",
                        epsilon,
                        k: lines.iter().map(|l| l.k).collect(),
                        weight: lines.iter().map(|l| l.weight).collect(),
                        quadrature: quad_doc,
                    };
                    write_spectrum_json(&mut body, &doc)?;
                }
            }
            metadata(scn, "spectrum", None, None)
        }
    };

    match &scn.output {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            file.write_all(&body)?;
            file.flush()?;
            let mut side = BufWriter::new(File::create(sidecar_path(path))?);
            write_metadata(&mut side, &meta)?;
            side.flush()?;
        }
        None => {
            let stdout = std::io::stdout();
            stdout.lock().write_all(&body)?;
            let stderr = std::io::stderr();
            write_metadata(&mut stderr.lock(), &meta)?;
        }
    }
    Ok(())
}

fn metadata(
    scn: &Scenario,
    kind: &'static str,
    grid: Option<GridSpec>,
    normalization: Option<f64>,
) -> MetaDoc {
    MetaDoc {
        scenario: scn.name.as_str(),
        kind,
        epsilon: scn.orbit.eccentricity(),
        omega: scn.orbit.angular_frequency(),
        a: scn.orbit.semi_major_axis(),
        phi_nodes: scn.quad.phi_nodes(),
        convergence_tol: scn.quad.convergence_tol(),
        kmax: scn.quad.kmax(),
        tau_min: grid.map(|g| g.tau_min),
        tau_max: grid.map(|g| g.tau_max),
        points: grid.map(|g| g.points),
        normalization,
        format: match scn.format {
            FormatArg::Csv => "csv",
            FormatArg::Json => "json",
        },
        library_version: kepcorr::VERSION,
    }
}

/// Parses flags, runs, and maps failures to exit codes. Returns the code.
pub fn main_impl(args: Args) -> i32 {
    match Scenario::resolve(&args).and_then(|scn| run(&scn)) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("kepcorr: {}", e.message());
            e.exit_code()
        }
    }
}

/// What a [`CorrelationKind`] flag resolves to; re-exported for tests.
pub fn correlation_kind_name(kind: CorrelationKind) -> &'static str {
    kind_name(kind)
}
