//! Crate-wide error type. Diagnostic values are carried as `f64` so the
//! error enum stays independent of the scalar type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument must be finite, got {value}")]
    NonFinite { value: f64 },

    #[error("eccentricity must lie in [0, 1), got {value}")]
    Eccentricity { value: f64 },

    #[error("semi-major axis must be positive, got {value}")]
    SemiMajorAxis { value: f64 },

    #[error("angular frequency must be positive, got {value}")]
    AngularFrequency { value: f64 },

    #[error("Bessel order |{k}| exceeds the supported bound {max}")]
    OrderTooLarge { k: i64, max: i64 },

    #[error("harmonic index k = 0 has no dynamic Fourier coefficient")]
    ZeroHarmonic,

    #[error("quadrature needs at least {required} nodes for harmonic {k}, got {got}")]
    InsufficientNodes { k: i64, required: usize, got: usize },

    #[error("quadrature did not converge: doubling nodes changed the result by {change:e} (tolerance {tol:e}) at tau = {tau}")]
    Convergence { tau: f64, change: f64, tol: f64 },

    #[error("no transition between equal principal quantum numbers n = n' = {n}")]
    EqualQuantumNumbers { n: u32 },

    #[error("quantum numbers must satisfy n >= 1 and l < n, got n = {n}, l = {l}")]
    QuantumNumbers { n: u32, l: u32 },

    #[error("angular factor is defined for l >= 1")]
    ZeroAngularMomentum,

    #[error("large-n form requires n >= 10, got n = {n}")]
    QuantumNumberTooSmall { n: u32 },

    #[error("oscillator state requires omega > 0 and x0 > 0")]
    OscillatorState,

    #[error("phi node count must be a power of two >= 64, got {got}")]
    PhiNodes { got: usize },

    #[error("harmonic cutoff kmax must be >= 1")]
    KmaxRange,

    #[error("convergence tolerance must be positive, got {value}")]
    ToleranceRange { value: f64 },

    #[error("tau grid must be non-empty and strictly increasing")]
    Grid,
}

pub type Result<T> = std::result::Result<T, Error>;
