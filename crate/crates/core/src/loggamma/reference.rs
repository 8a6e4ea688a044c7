use crate::combinatorics::{factorial, ln_exact, rising_span};
use crate::scalar::{compensated_sum, Real};

use super::GammaError;

/// Anchors above this argument fall back to the asymptotic series, which is
/// already exact to double precision there.
const EXACT_ANCHOR_LIMIT: f64 = 10_000.0;

/// Arguments are shifted up to at least this before the asymptotic series.
const STIRLING_SHIFT: f64 = 15.0;

// B_{2k} / (2k(2k−1)), k = 1..8
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// `log Γ(x)` for `x > 0`, independent of every integral representation.
///
/// Integers use `log (x−1)!` and half-integers `n + ½` use
/// `log[(2n)!·√π/(4ⁿ·n!)]`, both from exact big-integer products. Other
/// arguments are shifted by the recurrence to `z ≥ 15` and evaluated with the
/// Stirling series truncated after `B₁₆`; the first omitted term is below
/// `10⁻²⁰`.
pub fn loggamma_reference<T: Real>(x: T) -> Result<T, GammaError<T>> {
    if !(x > T::zero()) || !x.is_finite() {
        return Err(GammaError::Domain(format!(
            "log-gamma reference needs x > 0, got {x}"
        )));
    }
    if let Some(v) = exact_anchor(x) {
        return Ok(T::lit(v));
    }
    Ok(stirling_shifted(x))
}

fn exact_anchor<T: Real>(x: T) -> Option<f64> {
    let twice = x + x;
    if twice.fract() != T::zero() || twice.to_f64()? > 2.0 * EXACT_ANCHOR_LIMIT {
        return None;
    }
    let twice = twice.to_u64()?;
    if twice % 2 == 0 {
        let k = twice / 2;
        Some(ln_exact(&factorial(k - 1)))
    } else {
        // x = n + 1/2: (2n)!/n! = (n+1)(n+2)…(2n)
        let n = (twice - 1) / 2;
        let ratio = ln_exact(&rising_span(n + 1, 2 * n));
        let pi = std::f64::consts::PI;
        Some(compensated_sum([
            ratio,
            -((2 * n) as f64) * std::f64::consts::LN_2,
            0.5 * pi.ln(),
        ]))
    }
}

pub(crate) fn stirling_shifted<T: Real>(x: T) -> T {
    let mut z = x;
    let mut product = T::one();
    while z < T::lit(STIRLING_SHIFT) {
        product = product * z;
        z = z + T::one();
    }
    let inv = z.recip();
    let inv2 = inv * inv;
    let series = STIRLING
        .iter()
        .rev()
        .fold(T::zero(), |acc, &c| acc * inv2 + T::lit(c))
        * inv;
    let half = T::lit(0.5);
    let two_pi = T::PI() + T::PI();
    compensated_sum([
        (z - half) * z.ln(),
        -z,
        half * two_pi.ln(),
        series,
        -product.ln(),
    ])
}
