//! Integer-order Bessel functions of the first kind.
//!
//! Two regimes cover the whole `(k, x)` range needed by the orbital Fourier
//! coefficients: the ascending power series where it is cancellation-safe
//! (`|x| <= max(12, k/2)`), and Miller's backward recurrence with
//! normalization-sum scaling everywhere else. Both run in the working
//! precision; the series underflows gracefully to zero deep in the
//! evanescent region `k >> x`.

use crate::error::{Error, Result};
use crate::float::{cast, Real};

/// Practical bound on the order accepted by [`bessel_j`].
pub const MAX_ORDER: i64 = 1_000_000;

/// Integer Bessel order; negative orders fold onto positive ones through
/// `J_{-k}(x) = (-1)^k J_k(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BesselOrder(pub i64);

impl BesselOrder {
    /// Nonnegative order together with the parity sign picked up by folding.
    pub fn fold(self) -> (u32, bool) {
        let k = self.0.unsigned_abs() as u32;
        (k, self.0 < 0 && self.0 % 2 != 0)
    }
}

impl From<i64> for BesselOrder {
    fn from(k: i64) -> Self {
        BesselOrder(k)
    }
}

/// Evaluates `J_k(x)` for integer `k` (any sign) and finite real `x`.
pub fn bessel_j<T: Real>(k: i64, x: T) -> Result<T> {
    if !x.is_finite() {
        return Err(Error::NonFinite {
            value: x.to_f64().unwrap_or(f64::NAN),
        });
    }
    if k.abs() > MAX_ORDER {
        return Err(Error::OrderTooLarge { k, max: MAX_ORDER });
    }

    let (order, order_flip) = BesselOrder(k).fold();
    // J_k(-x) = (-1)^k J_k(x)
    let arg_flip = x < T::zero() && order % 2 == 1;
    let v = jk_nonneg(order, x.abs());
    if order_flip ^ arg_flip {
        Ok(-v)
    } else {
        Ok(v)
    }
}

fn jk_nonneg<T: Real>(k: u32, x: T) -> T {
    debug_assert!(x >= T::zero());
    if x == T::zero() {
        return if k == 0 { T::one() } else { T::zero() };
    }
    if x <= cast(f64::max(12.0, f64::from(k) / 2.0)) {
        series(k, x)
    } else {
        miller(k, x)
    }
}

/// Ascending power series `sum_m (-1)^m (x/2)^{k+2m} / (m! (k+m)!)`.
fn series<T: Real>(k: u32, x: T) -> T {
    let half = x / cast(2.0);

    // Leading term (x/2)^k / k!, built factor by factor so large k underflows
    // to zero instead of overflowing intermediates.
    let mut term = T::one();
    for m in 1..=k {
        term = term * half / cast(f64::from(m));
        if term == T::zero() {
            return T::zero();
        }
    }

    let neg_q = -(half * half);
    let mut sum = term;
    let max_terms = 600 + (k / 2) as usize;
    for m in 1..max_terms {
        let mf = cast::<T>(m as f64);
        term = term * neg_q / (mf * (mf + cast(f64::from(k))));
        sum += term;
        if m > 4 && term.abs() <= T::epsilon() * sum.abs() {
            break;
        }
    }
    sum
}

/// Miller backward recurrence, normalized by `J_0 + 2 sum_m J_{2m} = 1`.
fn miller<T: Real>(k: u32, x: T) -> T {
    let nmax = u64::max(u64::from(k), x.to_f64().expect("finite").ceil() as u64);
    // Start far enough above the turning point that the trial solution has
    // decayed into the minimal one to working precision.
    let mut start = nmax + 1 + (160.0 * nmax as f64).sqrt().ceil() as u64;
    if start % 2 == 1 {
        start += 1;
    }

    let rescale_at = T::max_value().sqrt();
    let seed = T::epsilon() * T::epsilon();

    let mut above = T::zero(); // J_{m+1} trial
    let mut current = seed; // J_m trial, m = start
    let mut result = if u64::from(k) == start {
        current
    } else {
        T::zero()
    };
    let mut norm = if start.is_multiple_of(2) {
        current + current
    } else {
        T::zero()
    };

    let mut m = start;
    while m >= 1 {
        let below = cast::<T>(2.0 * m as f64) / x * current - above;
        above = current;
        current = below;
        let order = m - 1;
        if order == u64::from(k) {
            result = current;
        }
        if order == 0 {
            norm += current;
        } else if order.is_multiple_of(2) {
            norm += current + current;
        }
        if current.abs() > rescale_at {
            let inv = rescale_at.recip();
            current *= inv;
            above *= inv;
            result *= inv;
            norm *= inv;
        }
        m -= 1;
    }
    result / norm
}
