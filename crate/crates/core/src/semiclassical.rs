//! Classical-limit hydrogenic matrix elements and the energy linearization
//! that maps quantum transition sums onto classical Fourier coefficients.
//!
//! Atomic units throughout: `E_n = -1/(2 n^2)`, orbital frequency
//! `omega_0 = 1/n_0^3`, Bohr-correspondence length `a = n_0^2 a_0`. Only the
//! planar `m = l` ladder is treated.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::float::{cast, Real};
use crate::fourier::coeff_x;
use crate::kepler::OrbitParams;
use crate::specfun::bessel_j;

/// Hydrogenic state `|n, l, m = l>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RydbergState {
    n: u32,
    l: u32,
}

impl RydbergState {
    pub fn new(n: u32, l: u32) -> Result<Self> {
        if n == 0 || l >= n {
            return Err(Error::QuantumNumbers { n, l });
        }
        Ok(Self { n, l })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// Exact Rydberg energy `-1/(2 n^2)`.
    pub fn energy<T: Real>(&self) -> T {
        -(cast::<T>(2.0) * cast::<T>(f64::from(self.n)).powi(2)).recip()
    }

    /// Orbit eccentricity of this state, `sqrt(1 - (l/n)^2)`.
    pub fn eccentricity<T: Real>(&self) -> T {
        let ratio = cast::<T>(f64::from(self.l)) / cast::<T>(f64::from(self.n));
        (T::one() - ratio * ratio).max(T::zero()).sqrt()
    }
}

/// Which classical orbit a transition is mapped onto.
///
/// `InitialState` fixes the eccentricity from `(n, l)` of the initial state;
/// `AverageEnergy` uses the orbit at the mean of the initial and final
/// energies (and the mean angular momentum). For `|n - n'| << n` the two
/// differ at order `1/n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EccentricityConvention {
    #[default]
    InitialState,
    AverageEnergy,
}

/// Bohr correspondence data for a reference state: `omega_0 = 1/n_0^3` and
/// the trajectory eccentricity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitCorrespondence<T> {
    n0: u32,
    omega0: T,
    epsilon: T,
}

impl<T: Real> OrbitCorrespondence<T> {
    /// Correspondence for a single state (initial-state convention).
    pub fn from_state(state: &RydbergState) -> Self {
        let n0 = cast::<T>(f64::from(state.n));
        Self {
            n0: state.n,
            omega0: n0.powi(3).recip(),
            epsilon: state.eccentricity(),
        }
    }

    /// Correspondence for a transition under the chosen eccentricity
    /// convention; `omega_0` always linearizes around the initial state.
    pub fn from_transition(
        initial: &RydbergState,
        final_state: &RydbergState,
        convention: EccentricityConvention,
    ) -> Result<Self> {
        if initial.n == final_state.n {
            return Err(Error::EqualQuantumNumbers { n: initial.n });
        }
        let mut c = Self::from_state(initial);
        if convention == EccentricityConvention::AverageEnergy {
            // Effective n from the mean energy, effective l from the mean of
            // the two angular momenta.
            let e_avg = (initial.energy::<T>() + final_state.energy::<T>()) / cast(2.0);
            let n_eff = (-(cast::<T>(2.0) * e_avg)).recip().sqrt();
            let l_eff =
                (cast::<T>(f64::from(initial.l)) + cast::<T>(f64::from(final_state.l))) / cast(2.0);
            let ratio = l_eff / n_eff;
            c.epsilon = (T::one() - ratio * ratio).max(T::zero()).sqrt();
        }
        Ok(c)
    }

    pub fn n0(&self) -> u32 {
        self.n0
    }

    pub fn omega0(&self) -> T {
        self.omega0
    }

    pub fn epsilon(&self) -> T {
        self.epsilon
    }

    /// Classical orbit of this correspondence: `a = n_0^2` (Bohr radii),
    /// `omega = 1/n_0^3`.
    pub fn orbit(&self) -> OrbitParams<T> {
        let n0 = cast::<T>(f64::from(self.n0));
        OrbitParams::new(n0 * n0, self.omega0, self.epsilon)
            .expect("correspondence parameters are valid by construction")
    }
}

/// Energy linearized around `n_0`: `-1/(2 n_0^2) + (n - n_0)/n_0^3`.
pub fn linearized_energy<T: Real>(n: u32, n0: u32) -> T {
    let n0t = cast::<T>(f64::from(n0));
    let dn = cast::<T>(i64::from(n) as f64 - i64::from(n0) as f64);
    -(cast::<T>(2.0) * n0t * n0t).recip() + dn / n0t.powi(3)
}

/// Classical limit of the radial matrix element `<n', l'| r |n, l>` in Bohr
/// radii:
/// `(n^2 / 2(n - n')) [J_{n-n'+1}((n-n') eps) - J_{n-n'-1}((n-n') eps)]`.
pub fn radial_matelem_classical<T: Real>(n: u32, n_prime: u32, epsilon: T) -> Result<T> {
    if n == n_prime {
        return Err(Error::EqualQuantumNumbers { n });
    }
    if !(epsilon.is_finite() && epsilon >= T::zero() && epsilon < T::one()) {
        return Err(Error::Eccentricity {
            value: epsilon.to_f64().unwrap_or(f64::NAN),
        });
    }
    let k = i64::from(n) - i64::from(n_prime);
    let kt = cast::<T>(k as f64);
    let arg = kt * epsilon;
    let bracket = bessel_j(k + 1, arg)? - bessel_j(k - 1, arg)?;
    let n2 = cast::<T>(f64::from(n)).powi(2);
    Ok(n2 / (cast::<T>(2.0) * kt) * bracket)
}

/// Summed `x` transition element of the two `l' = l +- 1` branches, which in
/// the classical limit is the Fourier coefficient `x_{n - n'}`.
pub fn x_transition_element<T: Real>(n: u32, n_prime: u32, orbit: &OrbitParams<T>) -> Result<T> {
    if n == n_prime {
        return Err(Error::EqualQuantumNumbers { n });
    }
    coeff_x(i64::from(n) - i64::from(n_prime), orbit)
}

/// Acceleration matrix element
/// `-(n - n')^2 omega_0^2 exp(-i (n - n') omega_0 t) x_{n - n'}`.
pub fn accel_matelem<T: Real>(
    n: u32,
    n_prime: u32,
    t: T,
    correspondence: &OrbitCorrespondence<T>,
    orbit: &OrbitParams<T>,
) -> Result<Complex<T>> {
    if n == n_prime {
        return Err(Error::EqualQuantumNumbers { n });
    }
    let k = i64::from(n) - i64::from(n_prime);
    let kt = cast::<T>(k as f64);
    let xk = coeff_x(k, orbit)?;
    let magnitude = -(kt * correspondence.omega0).powi(2) * xk;
    let (s, c) = (-kt * correspondence.omega0 * t).sin_cos();
    Ok(Complex::new(magnitude * c, magnitude * s))
}

/// Angular overlap `<Y_{l,l}| sin(theta) e^{i phi} |Y_{l-1,l-1}>` for the
/// maximal-m ladder. With Condon-Shortley phases the factorial ratios
/// collapse to `-sqrt(2l / (2l + 1))`, which tends to -1 for large `l`.
pub fn angular_factor<T: Real>(l: u32) -> Result<T> {
    if l == 0 {
        return Err(Error::ZeroAngularMomentum);
    }
    let two_l = cast::<T>(2.0 * f64::from(l));
    Ok(-(two_l / (two_l + T::one())).sqrt())
}
