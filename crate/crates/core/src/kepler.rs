//! Classical Kepler orbit in the plane: the transcendental anomaly equation,
//! positions, radii, accelerations, and rotated/phase-shifted trajectories.
//!
//! The orbit is parameterized by the eccentric anomaly `xi`:
//!
//! ```text
//! x(t) = a (cos xi - eps),   y(t) = a sqrt(1 - eps^2) sin xi,
//! omega t + phi = xi - eps sin xi,   r = a (1 - eps cos xi).
//! ```
//!
//! Acceleration comes from the central-force law `-omega^2 a^3 r_vec / r^3`,
//! which is the exact second time derivative of the trajectory and stays
//! finite for eps < 1.

use crate::error::{Error, Result};
use crate::float::{cast, tau, wrap_angle, Real};

const MAX_NEWTON: usize = 60;
const MAX_BISECT: usize = 200;

/// Classical orbit parameters: semi-major axis, angular frequency,
/// eccentricity (all in atomic units).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitParams<T> {
    a: T,
    omega: T,
    epsilon: T,
}

impl<T: Real> OrbitParams<T> {
    /// Validates `a > 0`, `omega > 0`, `0 <= epsilon < 1`.
    pub fn new(a: T, omega: T, epsilon: T) -> Result<Self> {
        if !(a.is_finite() && a > T::zero()) {
            return Err(Error::SemiMajorAxis {
                value: a.to_f64().unwrap_or(f64::NAN),
            });
        }
        if !(omega.is_finite() && omega > T::zero()) {
            return Err(Error::AngularFrequency {
                value: omega.to_f64().unwrap_or(f64::NAN),
            });
        }
        check_eccentricity(epsilon)?;
        Ok(Self { a, omega, epsilon })
    }

    /// Unit orbit `a = 1`, `omega = 1` with the given eccentricity; all
    /// published observables are normalized, so this is the default scale.
    pub fn unit(epsilon: T) -> Result<Self> {
        Self::new(T::one(), T::one(), epsilon)
    }

    pub fn semi_major_axis(&self) -> T {
        self.a
    }

    pub fn angular_frequency(&self) -> T {
        self.omega
    }

    pub fn eccentricity(&self) -> T {
        self.epsilon
    }

    /// Orbital period `2 pi / omega`.
    pub fn period(&self) -> T {
        tau::<T>() / self.omega
    }
}

/// The two random phases of the trajectory ensemble: phase of motion `phi`
/// and in-plane orientation `chi`, each reduced to `[0, 2 pi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseSample<T> {
    phi: T,
    chi: T,
}

impl<T: Real> PhaseSample<T> {
    pub fn new(phi: T, chi: T) -> Self {
        Self {
            phi: wrap_angle(phi),
            chi: wrap_angle(chi),
        }
    }

    pub fn phi(&self) -> T {
        self.phi
    }

    pub fn chi(&self) -> T {
        self.chi
    }
}

/// Vector in the orbital plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneVector<T> {
    pub x: T,
    pub y: T,
}

impl<T: Real> PlaneVector<T> {
    pub fn norm(&self) -> T {
        self.x.hypot(self.y)
    }
}

fn check_eccentricity<T: Real>(epsilon: T) -> Result<()> {
    if !(epsilon.is_finite() && epsilon >= T::zero() && epsilon < T::one()) {
        return Err(Error::Eccentricity {
            value: epsilon.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(())
}

/// Solves the Kepler equation `xi - eps sin(xi) = M` for the eccentric
/// anomaly.
///
/// The mean anomaly is reduced to `[0, 2 pi)` before solving and the removed
/// winding is restored afterwards, so the result is continuous in `M`.
pub fn solve_kepler<T: Real>(mean_anomaly: T, epsilon: T) -> Result<T> {
    check_eccentricity(epsilon)?;
    if !mean_anomaly.is_finite() {
        return Err(Error::NonFinite {
            value: mean_anomaly.to_f64().unwrap_or(f64::NAN),
        });
    }
    let two_pi = tau::<T>();
    let winding = (mean_anomaly / two_pi).floor();
    let mut reduced = mean_anomaly - winding * two_pi;
    if reduced < T::zero() {
        reduced = T::zero();
    } else if reduced >= two_pi {
        reduced = two_pi;
    }
    Ok(solve_reduced(reduced, epsilon) + winding * two_pi)
}

/// Newton iteration from `xi0 = M + eps sin M`, with a bisection fallback on
/// `[0, 2 pi]` should Newton stall (the residual is monotone in `xi`).
fn solve_reduced<T: Real>(m: T, epsilon: T) -> T {
    let accept = T::epsilon() * cast(64.0);
    let mut xi = m + epsilon * m.sin();
    let mut residual = T::max_value();
    for _ in 0..MAX_NEWTON {
        let (s, c) = xi.sin_cos();
        residual = xi - epsilon * s - m;
        if residual.abs() <= accept {
            return xi;
        }
        xi -= residual / (T::one() - epsilon * c);
    }
    if residual.abs() <= cast::<T>(512.0) * T::epsilon() {
        return xi;
    }

    let mut lo = T::zero();
    let mut hi = tau::<T>();
    for _ in 0..MAX_BISECT {
        let mid = (lo + hi) / cast(2.0);
        if mid == lo || mid == hi {
            return mid;
        }
        let f = mid - epsilon * mid.sin() - m;
        if f.abs() <= accept {
            return mid;
        }
        if f > T::zero() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo + hi) / cast(2.0)
}

/// Position, radius and eccentric-anomaly trig for one epoch; internal so the
/// public operations share a single Kepler solve.
fn orbit_state<T: Real>(t: T, orbit: &OrbitParams<T>, phi: T) -> (PlaneVector<T>, T) {
    let m = orbit.omega * t + phi;
    let xi = solve_kepler(m, orbit.epsilon).expect("orbit validated at construction");
    let (s, c) = xi.sin_cos();
    let pos = PlaneVector {
        x: orbit.a * (c - orbit.epsilon),
        y: orbit.a * (T::one() - orbit.epsilon * orbit.epsilon).sqrt() * s,
    };
    let r = orbit.a * (T::one() - orbit.epsilon * c);
    (pos, r)
}

/// Trajectory position at time `t` with phase of motion `phi`.
pub fn position<T: Real>(t: T, orbit: &OrbitParams<T>, phi: T) -> PlaneVector<T> {
    orbit_state(t, orbit, phi).0
}

/// Orbital radius `a (1 - eps cos xi)`; equals the norm of [`position`].
pub fn radius<T: Real>(t: T, orbit: &OrbitParams<T>, phi: T) -> T {
    orbit_state(t, orbit, phi).1
}

/// Acceleration from the central-force law `-omega^2 a^3 r_vec / r^3`.
pub fn acceleration<T: Real>(t: T, orbit: &OrbitParams<T>, phi: T) -> PlaneVector<T> {
    let (pos, r) = orbit_state(t, orbit, phi);
    let scale = -orbit.omega * orbit.omega * orbit.a.powi(3) / r.powi(3);
    PlaneVector {
        x: scale * pos.x,
        y: scale * pos.y,
    }
}

/// Second time derivative of the rotated coordinate
/// `X(t) = x(t) cos(chi) + y(t) sin(chi)`.
pub fn rotated_x_accel<T: Real>(t: T, orbit: &OrbitParams<T>, sample: &PhaseSample<T>) -> T {
    let acc = acceleration(t, orbit, sample.phi);
    let (s, c) = sample.chi.sin_cos();
    acc.x * c + acc.y * s
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn close(a: f64, b: f64, tol: f64) {
        assert!(
            (a - b).abs() <= tol,
            "{a} vs {b} (diff {:e})",
            (a - b).abs()
        );
    }

    fn orbit(a: f64, omega: f64, eps: f64) -> OrbitParams<f64> {
        OrbitParams::new(a, omega, eps).unwrap()
    }

    #[test]
    fn orbit_params_validation() {
        assert!(OrbitParams::new(0.0, 1.0, 0.5).is_err());
        assert!(OrbitParams::new(1.0, -1.0, 0.5).is_err());
        assert!(OrbitParams::new(1.0, 1.0, 1.0).is_err());
        assert!(OrbitParams::new(1.0, 1.0, -0.1).is_err());
        assert!(OrbitParams::new(1.0, 1.0, f64::NAN).is_err());
        assert!(OrbitParams::new(1.0, 1.0, 0.99).is_ok());
    }

    #[test]
    fn phase_sample_wraps() {
        let s = PhaseSample::new(-0.5, 7.0);
        assert!((0.0..2.0 * PI).contains(&s.phi()));
        assert!((0.0..2.0 * PI).contains(&s.chi()));
        close(s.phi(), 2.0 * PI - 0.5, 1e-15);
    }

    #[test]
    fn circular_orbit_is_identity() {
        close(solve_kepler(0.7, 0.0).unwrap(), 0.7, 0.0);
    }

    #[test]
    fn sym_point_is_fixed() {
        close(solve_kepler(PI, 0.8).unwrap(), PI, 1e-13);
    }

    #[test]
    fn bisection_oracle_value() {
        // f(xi) = xi - 0.8 sin(xi) - 1 bisected on [0, 2 pi] to 1e-14.
        let (mut lo, mut hi) = (0.0f64, 2.0 * PI);
        while hi - lo > 1e-14 {
            let mid = 0.5 * (lo + hi);
            if mid - 0.8 * mid.sin() - 1.0 > 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let oracle = 0.5 * (lo + hi);
        close(oracle, 1.7821913289379007, 1e-13);
        close(solve_kepler(1.0, 0.8).unwrap(), oracle, 1e-13);
    }

    #[test]
    fn residual_contract_high_eccentricity() {
        for i in 0..200 {
            let m = 2.0 * PI * (i as f64) / 200.0;
            for &eps in &[0.0, 0.3, 0.9, 0.99, 0.9999] {
                let xi = solve_kepler(m, eps).unwrap();
                let resid = (xi - eps * xi.sin() - m).abs();
                assert!(resid <= 1e-13, "m={m} eps={eps} resid={resid:e}");
            }
        }
    }

    #[test]
    fn winding_restored() {
        let eps = 0.7;
        let xi0 = solve_kepler(1.3, eps).unwrap();
        let xi5 = solve_kepler(1.3 + 10.0 * PI, eps).unwrap();
        close(xi5 - xi0, 10.0 * PI, 1e-9);
        let xin = solve_kepler(1.3 - 4.0 * PI, eps).unwrap();
        close(xi0 - xin, 4.0 * PI, 1e-12);
    }

    #[test]
    fn invalid_inputs_rejected() {
        assert!(solve_kepler(1.0, 1.0).is_err());
        assert!(solve_kepler(1.0, -0.2).is_err());
        assert!(solve_kepler(f64::NAN, 0.5).is_err());
    }

    #[test]
    fn perihelion_and_aphelion() {
        let o = orbit(1.0, 1.0, 0.8);
        let p = position(0.0, &o, 0.0);
        close(p.x, 0.2, 1e-15);
        close(p.y, 0.0, 1e-15);
        let q = position(PI, &o, 0.0);
        close(q.x, -1.8, 1e-12);
        close(q.y, 0.0, 1e-12);
        close(radius(0.0, &o, 0.0), 0.2, 1e-15);
        close(radius(PI, &o, 0.0), 1.8, 1e-12);
    }

    #[test]
    fn position_composed_with_solver_oracle() {
        // t = 0.5, phi = 0.3, eps = 0.5 => M = 0.8; mpmath reference.
        let o = orbit(1.0, 1.0, 0.5);
        let p = position(0.5, &o, 0.3);
        close(p.x, -0.212_175_154_034_565, 1e-14);
        close(p.y, 0.829_377_865_350_728, 1e-14);
        close(radius(0.5, &o, 0.3), 0.856_087_577_017_282_6, 1e-14);
    }

    #[test]
    fn radius_matches_position_norm() {
        let o = orbit(1.3, 0.7, 0.85);
        for i in 0..50 {
            let t = 0.37 * i as f64;
            let r = radius(t, &o, 0.11);
            let n = position(t, &o, 0.11).norm();
            assert!((r - n).abs() <= 1e-12 * r.max(1.0));
        }
    }

    #[test]
    fn acceleration_circular_and_perihelion() {
        let circ = orbit(1.0, 1.0, 0.0);
        let a0 = acceleration(0.0, &circ, 0.0);
        close(a0.x, -1.0, 1e-15);
        close(a0.y, 0.0, 1e-15);

        let ecc = orbit(1.0, 1.0, 0.8);
        let ap = acceleration(0.0, &ecc, 0.0);
        close(ap.x, -25.0, 1e-12);
        close(ap.y, 0.0, 1e-12);
    }

    #[test]
    fn acceleration_matches_finite_differences() {
        let o = orbit(1.0, 1.0, 0.5);
        let h = 1e-5;
        // Centered second differences at h = 1e-5 carry an f64 rounding
        // floor of a few eps * |x| / h^2; 1e-5 relative holds above it.
        let floor = 8.0 * f64::EPSILON * 2.0 / (h * h);
        for i in 0..25 {
            let t = 0.29 * i as f64;
            let acc = acceleration(t, &o, 0.4);
            let pp = position(t + h, &o, 0.4);
            let pm = position(t - h, &o, 0.4);
            let p0 = position(t, &o, 0.4);
            let fx = (pp.x - 2.0 * p0.x + pm.x) / (h * h);
            let fy = (pp.y - 2.0 * p0.y + pm.y) / (h * h);
            let scale = acc.norm();
            assert!((fx - acc.x).abs() <= 1e-5 * scale + floor, "t={t}");
            assert!((fy - acc.y).abs() <= 1e-5 * scale + floor, "t={t}");
        }
    }

    #[test]
    fn rotation_limits() {
        let o = orbit(1.0, 1.0, 0.6);
        let acc = acceleration(0.9, &o, 0.2);
        let x_only = rotated_x_accel(0.9, &o, &PhaseSample::new(0.2, 0.0));
        close(x_only, acc.x, 0.0);
        let y_only = rotated_x_accel(0.9, &o, &PhaseSample::new(0.2, std::f64::consts::FRAC_PI_2));
        close(y_only, acc.y, 1e-15);
    }

    #[test]
    fn quarter_rotation_circular() {
        // chi = pi/4, eps = 0, t = 0, phi = 0: -omega^2 a / sqrt(2).
        let o = orbit(1.0, 1.0, 0.0);
        let v = rotated_x_accel(0.0, &o, &PhaseSample::new(0.0, std::f64::consts::FRAC_PI_4));
        close(v, -1.0 / 2.0f64.sqrt(), 1e-15);
    }

    #[test]
    fn periodicity() {
        let o = orbit(1.0, 1.3, 0.8);
        let t = 0.77;
        let p1 = position(t, &o, 0.5);
        let p2 = position(t + o.period(), &o, 0.5);
        close(p1.x, p2.x, 1e-12);
        close(p1.y, p2.y, 1e-12);
    }

    #[test]
    fn f32_instantiation() {
        let o = OrbitParams::<f32>::new(1.0, 1.0, 0.8).unwrap();
        let p = position(0.0f32, &o, 0.0);
        assert!((p.x - 0.2).abs() < 1e-6);
    }
}
