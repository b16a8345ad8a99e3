//! Radiation correlation functions of a classical Kepler orbit — the
//! semiclassical model of a highly excited (Rydberg) electron.
//!
//! The crate computes, in atomic units and normalized figure units:
//!
//! - integer-order Bessel functions ([`specfun`]),
//! - Kepler orbit kinematics and accelerations ([`kepler`]),
//! - the orbit's Fourier harmonics ([`fourier`]),
//! - harmonic-oscillator reference correlators ([`oscillator`]),
//! - classical-limit hydrogenic matrix elements ([`semiclassical`]),
//! - first- and second-order correlation functions of the radiated field
//!   and the discrete radiation spectrum ([`correlators`]).
//!
//! Everything numerical is generic over the scalar type through
//! [`Real`]; the aliases below fix `f64`, the precision at which the
//! documented tolerances hold.

pub mod correlators;
pub mod error;
pub mod float;
pub mod fourier;
pub mod kepler;
pub mod oscillator;
pub mod semiclassical;
pub mod specfun;

pub use error::{Error, Result};
pub use float::Real;

/// Library version, recorded in emitted metadata.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub type OrbitParams64 = kepler::OrbitParams<f64>;
pub type PhaseSample64 = kepler::PhaseSample<f64>;
pub type PlaneVector64 = kepler::PlaneVector<f64>;
pub type HarmonicCoefficient64 = fourier::HarmonicCoefficient<f64>;
pub type OscillatorState64 = oscillator::OscillatorState<f64>;
pub type OrbitCorrespondence64 = semiclassical::OrbitCorrespondence<f64>;
pub type QuadratureConfig64 = correlators::QuadratureConfig<f64>;
pub type TauGrid64 = correlators::TauGrid<f64>;
pub type CorrelationSeries64 = correlators::CorrelationSeries<f64>;
pub type SpectrumLine64 = correlators::SpectrumLine<f64>;
