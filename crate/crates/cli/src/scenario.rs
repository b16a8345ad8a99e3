//! Flag parsing and scenario resolution. Named scenarios pre-fill the orbit,
//! quadrature, and grid; explicit flags override any of them. `custom`
//! requires the eccentricity and the grid to be spelled out.

use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use kepcorr::correlators::CorrelationKind;
use kepcorr::{OrbitParams64, QuadratureConfig64};

use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "kepcorr",
    version,
    about = "Correlation functions and spectra of radiation from a classical Kepler orbit",
    after_help = "Named scenarios: fig1 (first-order correlation, two periods), \
fig2a (second-order, one period), fig2b (second-order, short-lag zoom), \
spectrum (harmonic line weights). All use eccentricity 0.8 unless overridden."
)]
pub struct Args {
    /// Scenario preset.
    #[arg(long, value_enum)]
    pub scenario: ScenarioName,

    /// Orbit eccentricity in [0, 1).
    #[arg(long)]
    pub epsilon: Option<f64>,

    /// Semi-major axis (atomic units).
    #[arg(long = "a")]
    pub a: Option<f64>,

    /// Orbital angular frequency (atomic units).
    #[arg(long)]
    pub omega: Option<f64>,

    /// Grid start, in scaled units omega*tau.
    #[arg(long = "tau-min")]
    pub tau_min: Option<f64>,

    /// Grid end, in scaled units omega*tau.
    #[arg(long = "tau-max")]
    pub tau_max: Option<f64>,

    /// Number of grid points.
    #[arg(long)]
    pub points: Option<usize>,

    /// Uniform phi-quadrature nodes (power of two, >= 64).
    #[arg(long = "phi-nodes")]
    pub phi_nodes: Option<usize>,

    /// Harmonic cutoff for Fourier-sum methods and spectra.
    #[arg(long)]
    pub kmax: Option<usize>,

    /// Correlator kind for custom runs (named scenarios fix it).
    #[arg(long, value_enum)]
    pub kind: Option<KindArg>,

    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,

    /// Output path; standard output when omitted (metadata then goes to
    /// standard error instead of a sidecar file).
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScenarioName {
    Fig1,
    Fig2a,
    Fig2b,
    Spectrum,
    Custom,
}

impl ScenarioName {
    pub fn as_str(&self) -> &'static str {
        match self {
            ScenarioName::Fig1 => "fig1",
            ScenarioName::Fig2a => "fig2a",
            ScenarioName::Fig2b => "fig2b",
            ScenarioName::Spectrum => "spectrum",
            ScenarioName::Custom => "custom",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

/// Grid request in scaled units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub tau_min: f64,
    pub tau_max: f64,
    pub points: usize,
}

/// What to compute and where to put it.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub name: ScenarioName,
    pub orbit: OrbitParams64,
    pub quad: QuadratureConfig64,
    /// `Some` for correlation series, `None` for the spectrum table.
    pub series: Option<(CorrelationKind, GridSpec)>,
    pub format: FormatArg,
    pub output: Option<PathBuf>,
}

const DEFAULT_EPSILON: f64 = 0.8;
const DEFAULT_TOL: f64 = 1e-8;

impl Scenario {
    pub fn resolve(args: &Args) -> Result<Self, CliError> {
        let usage = |msg: String| CliError::Usage(msg);

        let epsilon = match (args.scenario, args.epsilon) {
            (ScenarioName::Custom, None) => {
                return Err(usage("--epsilon is required for --scenario custom".into()))
            }
            (_, given) => given.unwrap_or(DEFAULT_EPSILON),
        };
        let a = args.a.unwrap_or(1.0);
        let omega = args.omega.unwrap_or(1.0);
        let orbit = OrbitParams64::new(a, omega, epsilon)
            .map_err(|e| usage(format!("invalid orbit: {e}")))?;

        let quad = QuadratureConfig64::new(
            args.phi_nodes.unwrap_or(2048),
            DEFAULT_TOL,
            args.kmax.unwrap_or(200),
        )
        .map_err(|e| usage(format!("invalid quadrature configuration: {e}")))?;

        let preset = match args.scenario {
            ScenarioName::Fig1 => Some((
                CorrelationKind::FirstOrder,
                GridSpec {
                    tau_min: 0.0,
                    tau_max: 4.0 * std::f64::consts::PI,
                    points: 1601,
                },
            )),
            ScenarioName::Fig2a => Some((
                CorrelationKind::SecondOrder,
                GridSpec {
                    tau_min: 0.0,
                    tau_max: 2.0 * std::f64::consts::PI,
                    points: 1601,
                },
            )),
            ScenarioName::Fig2b => Some((
                CorrelationKind::SecondOrder,
                GridSpec {
                    tau_min: 0.0,
                    tau_max: 0.6,
                    points: 601,
                },
            )),
            ScenarioName::Spectrum => None,
            ScenarioName::Custom => {
                let (Some(tau_min), Some(tau_max), Some(points)) =
                    (args.tau_min, args.tau_max, args.points)
                else {
                    return Err(usage(
                        "--scenario custom requires --tau-min, --tau-max and --points".into(),
                    ));
                };
                let kind = match args.kind.unwrap_or(KindArg::First) {
                    KindArg::First => CorrelationKind::FirstOrder,
                    KindArg::Second => CorrelationKind::SecondOrder,
                };
                Some((
                    kind,
                    GridSpec {
                        tau_min,
                        tau_max,
                        points,
                    },
                ))
            }
        };

        // Explicit grid flags override the preset grids.
        let series = preset.map(|(kind, grid)| {
            let kind = match args.kind {
                Some(KindArg::First) => CorrelationKind::FirstOrder,
                Some(KindArg::Second) => CorrelationKind::SecondOrder,
                None => kind,
            };
            (
                kind,
                GridSpec {
                    tau_min: args.tau_min.unwrap_or(grid.tau_min),
                    tau_max: args.tau_max.unwrap_or(grid.tau_max),
                    points: args.points.unwrap_or(grid.points),
                },
            )
        });

        Ok(Scenario {
            name: args.scenario,
            orbit,
            quad,
            series,
            format: args.format,
            output: args.output.clone(),
        })
    }
}
