//! Two-time correlation functions of the radiated field: first order
//! (spectrum) and second order (photon coincidences), for the random-phase
//! trajectory ensemble.
//!
//! The orientation average over `chi` is done in closed form
//! ([`chi_avg_second`], [`chi_avg_fourth`]); the phase average over `phi`
//! uses the periodic trapezoidal rule, which converges spectrally because
//! the integrand is analytic in `phi` for eccentricity below one. Every
//! averaged value is validated by a node-doubling check against the
//! configured tolerance.
//!
//! All `1/R` and `e/(4 pi eps0)` prefactors are dropped; series are reported
//! in the normalization of the published figures (first order divided by its
//! value at zero lag, second order by the square of that constant).

use crate::error::{Error, Result};
use crate::float::{cast, kahan_sum, tau, Real};
use crate::fourier::{coeff_x, coeff_y};
use crate::kepler::{acceleration, OrbitParams};

/// Which correlation function a series holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorrelationKind {
    FirstOrder,
    SecondOrder,
}

/// Node counts and tolerances for the numerical `phi` average.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig<T> {
    phi_nodes: usize,
    convergence_tol: T,
    kmax: usize,
}

impl<T: Real> QuadratureConfig<T> {
    /// `phi_nodes` must be a power of two of at least 64 (so node-doubling
    /// checks stay aligned), `kmax >= 1`, tolerance positive.
    pub fn new(phi_nodes: usize, convergence_tol: T, kmax: usize) -> Result<Self> {
        if phi_nodes < 64 || !phi_nodes.is_power_of_two() {
            return Err(Error::PhiNodes { got: phi_nodes });
        }
        if kmax == 0 {
            return Err(Error::KmaxRange);
        }
        if !(convergence_tol.is_finite() && convergence_tol > T::zero()) {
            return Err(Error::ToleranceRange {
                value: convergence_tol.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self {
            phi_nodes,
            convergence_tol,
            kmax,
        })
    }

    pub fn phi_nodes(&self) -> usize {
        self.phi_nodes
    }

    pub fn convergence_tol(&self) -> T {
        self.convergence_tol
    }

    pub fn kmax(&self) -> usize {
        self.kmax
    }
}

impl<T: Real> Default for QuadratureConfig<T> {
    fn default() -> Self {
        Self {
            phi_nodes: 2048,
            convergence_tol: cast(1e-8),
            kmax: 200,
        }
    }
}

/// Strictly increasing grid of scaled time differences `omega * tau`.
#[derive(Debug, Clone, PartialEq)]
pub struct TauGrid<T> {
    values: Vec<T>,
}

impl<T: Real> TauGrid<T> {
    pub fn from_values(values: Vec<T>) -> Result<Self> {
        if values.is_empty()
            || values.iter().any(|v| !v.is_finite())
            || values.windows(2).any(|w| w[1] <= w[0])
        {
            return Err(Error::Grid);
        }
        Ok(Self { values })
    }

    /// `points` equally spaced values on `[min, max]`, endpoints included.
    pub fn linspace(min: T, max: T, points: usize) -> Result<Self> {
        if points == 0 || !min.is_finite() || !max.is_finite() || (points > 1 && max <= min) {
            return Err(Error::Grid);
        }
        let span = max - min;
        let denom = cast::<T>((points.max(2) - 1) as f64);
        let values = (0..points)
            .map(|i| {
                if i + 1 == points && points > 1 {
                    max
                } else {
                    min + span * cast::<T>(i as f64) / denom
                }
            })
            .collect();
        Ok(Self { values })
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Grid of correlation values together with the constant divided out.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationSeries<T> {
    pub kind: CorrelationKind,
    pub tau_scaled: Vec<T>,
    pub values: Vec<T>,
    pub normalization: T,
}

/// One line of the radiation spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumLine<T> {
    pub k: usize,
    pub weight: T,
}

/// Exact average over `chi` of `[u cos + v sin][p cos + q sin]`.
pub fn chi_avg_second<T: Real>(u: T, v: T, p: T, q: T) -> T {
    (u * p + v * q) / cast(2.0)
}

/// Exact average over `chi` of `[u cos + v sin]^2 [p cos + q sin]^2`, from
/// the moments `<cos^4> = <sin^4> = 3/8` and `<cos^2 sin^2> = 1/8`.
pub fn chi_avg_fourth<T: Real>(u: T, v: T, p: T, q: T) -> T {
    let c38 = cast::<T>(0.375);
    let c18 = cast::<T>(0.125);
    c38 * (u * u * p * p + v * v * q * q)
        + c18 * (u * u * q * q + v * v * p * p + cast::<T>(4.0) * u * v * p * q)
}

/// Planar accelerations at time `t` over the uniform `phi` grid.
fn accel_table<T: Real>(orbit: &OrbitParams<T>, t: T, nodes: usize) -> Vec<(T, T)> {
    let step = tau::<T>() / cast(nodes as f64);
    (0..nodes)
        .map(|j| {
            let phi = step * cast::<T>(j as f64);
            let a = acceleration(t, orbit, phi);
            (a.x, a.y)
        })
        .collect()
}

fn phi_mean<T: Real>(base: &[(T, T)], at: &[(T, T)], kernel: impl Fn(T, T, T, T) -> T) -> T {
    debug_assert_eq!(base.len(), at.len());
    let sum = kahan_sum(
        base.iter()
            .zip(at.iter())
            .map(|(&(u, v), &(p, q))| kernel(u, v, p, q)),
    );
    sum / cast(base.len() as f64)
}

/// Exact zero-lag first-order value, used as the magnitude scale for
/// convergence checks: `omega^4 a^2 (1 + eps^2/2) / (2 (1 - eps^2)^{5/2})`.
fn first_order_magnitude<T: Real>(orbit: &OrbitParams<T>) -> T {
    let e2 = orbit.eccentricity() * orbit.eccentricity();
    let w = orbit.angular_frequency();
    let a = orbit.semi_major_axis();
    w.powi(4) * a * a * (T::one() + e2 / cast(2.0))
        / (cast::<T>(2.0) * (T::one() - e2).powf(cast(2.5)))
}

struct Averager<'a, T> {
    orbit: &'a OrbitParams<T>,
    quad: &'a QuadratureConfig<T>,
    base_coarse: Vec<(T, T)>,
    base_fine: Vec<(T, T)>,
    scale_first: T,
}

impl<'a, T: Real> Averager<'a, T> {
    fn new(orbit: &'a OrbitParams<T>, quad: &'a QuadratureConfig<T>) -> Self {
        let n = quad.phi_nodes;
        Self {
            orbit,
            quad,
            base_coarse: accel_table(orbit, T::zero(), n),
            base_fine: accel_table(orbit, T::zero(), 2 * n),
            scale_first: first_order_magnitude(orbit),
        }
    }

    /// Phase-averaged correlator at lag `tau`, validated by doubling the
    /// node count; returns the value at the configured node count.
    fn eval(&self, tau: T, kind: CorrelationKind) -> Result<T> {
        let at_coarse = accel_table(self.orbit, tau, self.quad.phi_nodes);
        let at_fine = accel_table(self.orbit, tau, 2 * self.quad.phi_nodes);
        let (coarse, fine, scale) = match kind {
            CorrelationKind::FirstOrder => (
                phi_mean(&self.base_coarse, &at_coarse, chi_avg_second),
                phi_mean(&self.base_fine, &at_fine, chi_avg_second),
                self.scale_first,
            ),
            CorrelationKind::SecondOrder => (
                phi_mean(&self.base_coarse, &at_coarse, chi_avg_fourth),
                phi_mean(&self.base_fine, &at_fine, chi_avg_fourth),
                self.scale_first * self.scale_first,
            ),
        };
        if !(coarse.is_finite() && fine.is_finite()) {
            return Err(Error::NonFinite {
                value: coarse.to_f64().unwrap_or(f64::NAN),
            });
        }
        let change = (fine - coarse).abs();
        let denom = coarse.abs().max(fine.abs()).max(scale);
        if change > self.quad.convergence_tol * denom {
            return Err(Error::Convergence {
                tau: tau.to_f64().unwrap_or(f64::NAN),
                change: change.to_f64().unwrap_or(f64::NAN),
                tol: (self.quad.convergence_tol * denom)
                    .to_f64()
                    .unwrap_or(f64::NAN),
            });
        }
        Ok(coarse)
    }
}

/// First-order acceleration correlation `<a_X(t + tau) a_X(t)>` averaged
/// over both random phases. Even in `tau` and periodic with the orbit.
pub fn first_order<T: Real>(
    tau: T,
    orbit: &OrbitParams<T>,
    quad: &QuadratureConfig<T>,
) -> Result<T> {
    Averager::new(orbit, quad).eval(tau, CorrelationKind::FirstOrder)
}

/// Second-order correlation `<a_X(t)^2 a_X(t + tau)^2>` averaged over both
/// random phases; non-negative and maximal at zero lag.
pub fn second_order<T: Real>(
    tau: T,
    orbit: &OrbitParams<T>,
    quad: &QuadratureConfig<T>,
) -> Result<T> {
    Averager::new(orbit, quad).eval(tau, CorrelationKind::SecondOrder)
}

/// Fourier-sum route to the first-order correlation:
/// `sum_{k=1..kmax} (k omega)^4 (|x_k|^2 + |y_k|^2) cos(k omega tau)`.
pub fn first_order_fourier<T: Real>(
    tau: T,
    orbit: &OrbitParams<T>,
    quad: &QuadratureConfig<T>,
) -> T {
    let w = orbit.angular_frequency();
    let terms = (1..=quad.kmax as i64).map(|k| {
        let kw = cast::<T>(k as f64) * w;
        let xk = coeff_x(k, orbit).expect("k >= 1");
        let yk = coeff_y(k, orbit).expect("k >= 1").im;
        kw.powi(4) * (xk * xk + yk * yk) * (kw * tau).cos()
    });
    kahan_sum(terms)
}

/// Discrete radiation spectrum: line `k` carries
/// `(k omega)^4 (|x_k|^2 + |y_k|^2)`, the folded weight of the `+-k` pair,
/// so the line weights sum to the zero-lag first-order value.
pub fn spectrum<T: Real>(orbit: &OrbitParams<T>, kmax: usize) -> Result<Vec<SpectrumLine<T>>> {
    if kmax == 0 {
        return Err(Error::KmaxRange);
    }
    let w = orbit.angular_frequency();
    (1..=kmax as i64)
        .map(|k| {
            let kw = cast::<T>(k as f64) * w;
            let xk = coeff_x(k, orbit)?;
            let yk = coeff_y(k, orbit)?.im;
            Ok(SpectrumLine {
                k: k as usize,
                weight: kw.powi(4) * (xk * xk + yk * yk),
            })
        })
        .collect()
}

/// Evaluates the chosen correlator over a grid of scaled lags and divides by
/// the figure normalization: the zero-lag first-order value for first order,
/// its square for second order.
pub fn correlation_series<T: Real>(
    kind: CorrelationKind,
    orbit: &OrbitParams<T>,
    grid: &TauGrid<T>,
    quad: &QuadratureConfig<T>,
) -> Result<CorrelationSeries<T>> {
    let averager = Averager::new(orbit, quad);
    let first_zero = averager.eval(T::zero(), CorrelationKind::FirstOrder)?;
    let normalization = match kind {
        CorrelationKind::FirstOrder => first_zero,
        CorrelationKind::SecondOrder => first_zero * first_zero,
    };
    let w = orbit.angular_frequency();
    let mut values = Vec::with_capacity(grid.len());
    for &tau_scaled in grid.values() {
        let raw = averager.eval(tau_scaled / w, kind)?;
        values.push(raw / normalization);
    }
    Ok(CorrelationSeries {
        kind,
        tau_scaled: grid.values().to_vec(),
        values,
        normalization,
    })
}
