use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num};

use super::{to_exact_integer, ExactError, ExactInteger};

/// `₂F₁(a, b; c; z)` for integer parameters when at least one upper parameter
/// is a nonpositive integer, so the series is a polynomial in `z`.
///
/// Generic over the field: exact with [`BigRational`], approximate with
/// `f64`. Returns `None` when the series does not terminate or a lower
/// Pochhammer factor vanishes before it does.
pub fn hypergeometric_2f1_terminating<Q>(a: i64, b: i64, c: i64, z: &Q) -> Option<Q>
where
    Q: Clone + Num + FromPrimitive,
{
    let last = [a, b].into_iter().filter(|&p| p <= 0).map(|p| -p).min()?;
    let mut term = Q::one();
    let mut sum = Q::one();
    for k in 0..last {
        let lower = (c + k) * (k + 1);
        if lower == 0 {
            return None;
        }
        let ratio = Q::from_i64((a + k) * (b + k))? / Q::from_i64(lower)?;
        term = term * ratio * z.clone();
        sum = sum + term.clone();
    }
    Some(sum)
}

/// `Cₙ = ₂F₁(1−n, −n; 2; 1)` evaluated exactly, `n ≥ 1`.
pub fn catalan_hypergeometric(n: u32) -> Result<ExactInteger, ExactError> {
    if n == 0 {
        return Err(ExactError::Domain(
            "hypergeometric form requires n >= 1".into(),
        ));
    }
    let n = i64::from(n);
    let one = BigRational::from_integer(BigInt::from(1));
    let value = hypergeometric_2f1_terminating(1 - n, -n, 2, &one)
        .expect("upper parameter 1-n is nonpositive");
    to_exact_integer(value)
}
