//! Scalar abstraction: every numerical routine in this crate is generic over
//! the floating-point type through [`Real`].

use std::fmt::{Debug, Display};
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::{Float, FloatConst};

/// Floating-point scalar used throughout the crate (`f32`, `f64`, ...).
pub trait Real:
    Float
    + FloatConst
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
}

impl<T> Real for T where
    T: Float
        + FloatConst
        + AddAssign
        + SubAssign
        + MulAssign
        + DivAssign
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}

/// Converts an `f64` literal into the working scalar type.
#[inline]
pub(crate) fn cast<T: Real>(x: f64) -> T {
    T::from(x).expect("f64 literal must be representable in the scalar type")
}

/// Two pi.
#[inline]
pub(crate) fn tau<T: Real>() -> T {
    T::PI() + T::PI()
}

/// Reduces an angle to `[0, 2*pi)`.
#[inline]
pub(crate) fn wrap_angle<T: Real>(x: T) -> T {
    let t = tau::<T>();
    let w = x - (x / t).floor() * t;
    if w >= t {
        w - t
    } else if w < T::zero() {
        w + t
    } else {
        w
    }
}

/// Compensated (Kahan) sum; keeps quadrature results deterministic and
/// accurate independent of node count.
pub(crate) fn kahan_sum<T: Real>(values: impl IntoIterator<Item = T>) -> T {
    let mut sum = T::zero();
    let mut carry = T::zero();
    for x in values {
        let y = x - carry;
        let t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    sum
}
