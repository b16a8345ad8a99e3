//! Radiation correlators of the harmonic oscillator, the exactly solvable
//! reference for the correlator machinery.
//!
//! Field quantities are reported in units where `e / (4 pi eps0 R) = 1` and
//! retardation is absorbed into the time argument, so the dimensional
//! prefactors of the published observables drop out.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::float::{cast, Real};

/// Oscillator energy eigenstate together with its length scales.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorState<T> {
    n: u32,
    omega: T,
    x0: T,
    amplitude: T,
}

impl<T: Real> OscillatorState<T> {
    /// `n >= 0`, `omega > 0`, `x0 > 0`; `amplitude` is the classical length.
    pub fn new(n: u32, omega: T, x0: T, amplitude: T) -> Result<Self> {
        if !(omega.is_finite() && omega > T::zero() && x0.is_finite() && x0 > T::zero()) {
            return Err(Error::OscillatorState);
        }
        Ok(Self {
            n,
            omega,
            x0,
            amplitude,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn omega(&self) -> T {
        self.omega
    }

    pub fn x0(&self) -> T {
        self.x0
    }

    pub fn amplitude(&self) -> T {
        self.amplitude
    }
}

/// Classical dipole field of `x_cl(t) = A cos(omega t)`: returns
/// `-omega^2 A cos(omega t)`.
pub fn classical_field_x<T: Real>(t: T, amplitude: T, omega: T) -> T {
    -omega * omega * amplitude * (omega * t).cos()
}

/// Exact first-order field correlation of the eigenstate `|n>`:
/// `(1/2) omega^4 x0^2 [n e^{i omega tau} + (n + 1/2) e^{-i omega tau}]`.
pub fn first_corr_exact<T: Real>(tau: T, state: &OscillatorState<T>) -> Complex<T> {
    let w = state.omega;
    let pre = cast::<T>(0.5) * w.powi(4) * state.x0 * state.x0;
    let n = cast::<T>(f64::from(state.n));
    let (s, c) = (w * tau).sin_cos();
    let half = cast::<T>(0.5);
    // n e^{i w tau} + (n + 1/2) e^{-i w tau}
    let re = (n + n + half) * c;
    let im = -half * s;
    Complex::new(pre * re, pre * im)
}

/// Large-n second-order correlation, `n^2 [1 + cos(2 omega tau)]`, as
/// printed: the dimensional prefactor of the first-order forms is omitted.
///
/// The large-n form is only meaningful well above the ground state; inputs
/// below `n = 10` are rejected rather than silently extrapolated.
pub fn second_corr_large_n<T: Real>(tau: T, state: &OscillatorState<T>) -> Result<T> {
    if state.n < 10 {
        return Err(Error::QuantumNumberTooSmall { n: state.n });
    }
    let n = cast::<T>(f64::from(state.n));
    let two = cast::<T>(2.0);
    Ok(n * n * (T::one() + (two * state.omega * tau).cos()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn state(n: u32, omega: f64, x0: f64) -> OscillatorState<f64> {
        OscillatorState::new(n, omega, x0, 1.0).unwrap()
    }

    #[test]
    fn state_validation() {
        assert!(OscillatorState::new(1, 0.0, 1.0, 1.0).is_err());
        assert!(OscillatorState::new(1, 1.0, -1.0, 1.0).is_err());
        assert!(OscillatorState::new(0, 2.0, 0.5, 0.0).is_ok());
    }

    #[test]
    fn classical_field_quarter_points() {
        assert_eq!(classical_field_x(0.0, 1.0, 1.0), -1.0);
        let w = 2.0;
        assert!((classical_field_x(PI / w, 1.0, w) - w * w).abs() < 1e-14);
        assert!(classical_field_x(FRAC_PI_2, 1.0, 1.0).abs() < 1e-16);
    }

    #[test]
    fn first_corr_vacuum_and_excited_at_zero() {
        let s0 = state(0, 1.0, 1.0);
        let v = first_corr_exact(0.0, &s0);
        assert_eq!(v.re, 0.25);
        assert_eq!(v.im, 0.0);

        let s10 = state(10, 1.0, 1.0);
        let v = first_corr_exact(0.0, &s10);
        // (1/2)(n + n + 1/2) = n + 1/4
        assert_eq!(v.re, 10.25);
        assert_eq!(v.im, 0.0);
    }

    #[test]
    fn first_corr_classical_limit() {
        // Relative deviation from omega^4 x0^2 n cos(omega tau) is <= 1/(2n)
        // at tau = 0 and stays O(1/n) elsewhere.
        let n = 1000u32;
        let s = state(n, 1.0, 1.0);
        let at0 = first_corr_exact(0.0, &s).re;
        let classical = n as f64;
        assert!((at0 - classical).abs() / classical <= 1.0 / (2.0 * n as f64));
        for i in 1..8 {
            let tau = 0.7 * i as f64;
            let v = first_corr_exact(tau, &s);
            let cl = classical * tau.cos();
            assert!((v.re - cl).abs() <= 1.0 / (2.0 * n as f64) * classical + 1e-12);
        }
    }

    #[test]
    fn second_corr_values() {
        let s = state(10, 1.0, 1.0);
        assert_eq!(second_corr_large_n(0.0, &s).unwrap(), 200.0);
        // omega tau = pi/2 => 1 + cos(pi) = 0 exactly
        assert_eq!(second_corr_large_n(FRAC_PI_2, &s).unwrap(), 0.0);
        // period pi/omega
        let a = second_corr_large_n(0.31, &s).unwrap();
        let b = second_corr_large_n(0.31 + PI, &s).unwrap();
        assert!((a - b).abs() <= 1e-12 * 200.0);
        assert!(a >= 0.0);
    }

    #[test]
    fn second_corr_small_n_rejected() {
        let s = state(3, 1.0, 1.0);
        assert!(matches!(
            second_corr_large_n(0.0, &s),
            Err(Error::QuantumNumberTooSmall { n: 3 })
        ));
    }
}
