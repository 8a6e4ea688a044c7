use crate::quadrature::{integrate_finite, QuadOptions};
use crate::scalar::{compensated_sum, Real};

use super::{loggamma_reference, GammaError};

/// `log Γ(x) + log Γ(x+½) − [(1−2x)·log 2 + ½·log π + log Γ(2x)]`, which the
/// Legendre duplication formula makes zero. All terms use the reference.
pub fn duplication_residual<T: Real>(x: T) -> Result<T, GammaError<T>> {
    if !(x > T::zero()) {
        return Err(GammaError::Domain(format!(
            "duplication needs x > 0, got {x}"
        )));
    }
    let half = T::lit(0.5);
    let one = T::one();
    Ok(compensated_sum([
        loggamma_reference(x)?,
        loggamma_reference(x + half)?,
        -(one - x - x) * T::LN_2(),
        -half * T::PI().ln(),
        -loggamma_reference(x + x)?,
    ]))
}

/// `|∫ₐ^{a+1} log Γ(x) dx − (½·log 2π + a·log a − a)|`, the integral taken by
/// adaptive quadrature of the reference.
pub fn raabe_residual<T: Real>(a: T, opts: &QuadOptions<T>) -> Result<T, GammaError<T>> {
    if !(a > T::zero()) || !a.is_finite() {
        return Err(GammaError::Domain(format!(
            "Raabe formula needs a > 0, got {a}"
        )));
    }
    // Every node lies strictly inside (a, a+1), so the reference is defined.
    let integrand = |x: T| loggamma_reference(x).unwrap_or_else(|_| T::nan());
    let integral = integrate_finite(integrand, a, a + T::one(), opts.abs_tol, opts.max_evals)?;
    let half = T::lit(0.5);
    let closed = compensated_sum([half * (T::PI() + T::PI()).ln(), a * a.ln(), -a]);
    Ok((integral.value - closed).abs())
}
