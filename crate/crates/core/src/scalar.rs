//! Scalar abstraction shared by the quadrature engine and the log-gamma
//! representations.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Binary floating point usable by every numerical routine in the crate.
///
/// Implemented for `f32` and `f64`. The default quadrature tolerance is a
/// property of the type: it must sit a few digits above the rounding floor
/// of the integrands, so `f32` gets a much looser default than `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Absolute tolerance used when the caller does not ask for one.
    fn default_abs_tol() -> Self;

    /// Converts an `f64` literal; exact for `f64`, rounded for `f32`.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal representable")
    }
}

impl Real for f64 {
    fn default_abs_tol() -> Self {
        1e-12
    }
}

impl Real for f32 {
    fn default_abs_tol() -> Self {
        1e-4
    }
}

/// Neumaier-compensated sum in a fixed iteration order.
pub(crate) fn compensated_sum<T: Real>(values: impl IntoIterator<Item = T>) -> T {
    let mut sum = T::zero();
    let mut carry = T::zero();
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            carry = carry + ((sum - t) + v);
        } else {
            carry = carry + ((v - t) + sum);
        }
        sum = t;
    }
    sum + carry
}
