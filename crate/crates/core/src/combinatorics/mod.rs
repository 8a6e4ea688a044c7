//! Exact Catalan-family numbers and counting oracles.
//!
//! Every value here is an arbitrary-precision integer; nothing is rounded.
//! The Catalan numbers are available through five independent routes (the
//! binomial closed form, Segner's convolution, the terminating Gauss
//! hypergeometric series, Dyck word enumeration and a lattice path count) so
//! that each one can serve as an oracle for the others.

mod dyck;
mod hypergeometric;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

pub use dyck::{
    count_dyck_words, dyck_words, for_each_dyck_word, DyckSymbol, DyckWord, MAX_DYCK_N,
};
pub use hypergeometric::{catalan_hypergeometric, hypergeometric_2f1_terminating};

/// Arbitrary-precision nonnegative integer.
pub type ExactInteger = BigUint;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExactError {
    #[error("domain error: {0}")]
    Domain(String),
    /// The closed form produced a proper fraction; the exact value is kept.
    #[error("result is not an integer: {value}")]
    NonIntegerResult { value: BigRational },
    #[error("enumeration limit exceeded: n = {n} > {max}")]
    LimitExceeded { n: u32, max: u32 },
}

/// `a` choose `b` by the multiplicative formula; zero when `b > a`.
pub fn binomial(a: u64, b: u64) -> ExactInteger {
    if b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for i in 0..b {
        // acc = C(a, i) here, so the division is exact.
        acc = acc * BigUint::from(a - i) / BigUint::from(i + 1);
    }
    acc
}

/// `Cₙ = (2n choose n)/(n+1)`.
pub fn catalan_exact(n: u32) -> ExactInteger {
    let n = u64::from(n);
    binomial(2 * n, n) / BigUint::from(n + 1)
}

/// `Cₙ` by Segner's recurrence `C_{k+1} = Σ C_i·C_{k−i}`, `C₀ = 1`.
pub fn catalan_segner(n: u32) -> ExactInteger {
    catalan_segner_table(n)
        .pop()
        .expect("table has n+1 entries")
}

/// `C₀ … Cₙ` by Segner's recurrence.
pub fn catalan_segner_table(n: u32) -> Vec<ExactInteger> {
    let n = n as usize;
    let mut table: Vec<BigUint> = Vec::with_capacity(n + 1);
    table.push(BigUint::one());
    for k in 0..n {
        let next = (0..=k).fold(BigUint::zero(), |acc, i| acc + &table[i] * &table[k - i]);
        table.push(next);
    }
    table
}

/// Monotone right/up paths from `(0,0)` to `(n,n)` that never rise above the
/// diagonal, counted by dynamic programming over grid nodes `(i, j)` with
/// `j ≤ i`.
pub fn count_lattice_paths(n: u32) -> ExactInteger {
    let n = n as usize;
    // row[i] = number of admissible paths reaching (i, j) for the current j.
    let mut row: Vec<BigUint> = vec![BigUint::one(); n + 1];
    for j in 1..=n {
        let mut next = vec![BigUint::zero(); n + 1];
        for i in j..=n {
            let from_left = if i > j {
                next[i - 1].clone()
            } else {
                BigUint::zero()
            };
            next[i] = from_left + &row[i];
        }
        row = next;
    }
    row[n].clone()
}

/// Ballot number `B(n, k) = ((n−k)/(n+k))·(n+k choose n)` for `0 ≤ k ≤ n`,
/// `n ≥ 1`.
pub fn ballot(n: u32, k: u32) -> Result<ExactInteger, ExactError> {
    if n == 0 {
        return Err(ExactError::Domain("ballot requires n >= 1".into()));
    }
    if k > n {
        return Err(ExactError::Domain(format!(
            "ballot requires k <= n, got n={n}, k={k}"
        )));
    }
    let (n, k) = (u64::from(n), u64::from(k));
    let ratio = BigRational::new(BigInt::from(n - k), BigInt::from(n + k));
    to_exact_integer(ratio * to_rational(binomial(n + k, n)))
}

/// Fuss-Catalan number `Aₘ(p, r) = (r/(mp+r))·(mp+r choose m)`.
pub fn fuss_catalan(m: u32, p: u32, r: u32) -> Result<ExactInteger, ExactError> {
    if p == 0 || r == 0 {
        return Err(ExactError::Domain(format!(
            "fuss-catalan requires p >= 1 and r >= 1, got p={p}, r={r}"
        )));
    }
    let (m, p, r) = (u64::from(m), u64::from(p), u64::from(r));
    let top = m * p + r;
    let ratio = BigRational::new(BigInt::from(r), BigInt::from(top));
    to_exact_integer(ratio * to_rational(binomial(top, m)))
}

/// `B₃(n, k, ℓ) = (n+k choose k)·(n+ℓ−1 choose ℓ)·(n−k−ℓ)/(n+k)` on
/// `n ≥ 1`, `k + ℓ ≤ n`.
pub fn b3(n: u32, k: u32, l: u32) -> Result<ExactInteger, ExactError> {
    if n == 0 {
        return Err(ExactError::Domain("b3 requires n >= 1".into()));
    }
    if u64::from(k) + u64::from(l) > u64::from(n) {
        return Err(ExactError::Domain(format!(
            "b3 requires k + l <= n, got n={n}, k={k}, l={l}"
        )));
    }
    let (n, k, l) = (u64::from(n), u64::from(k), u64::from(l));
    let product = binomial(n + k, k) * binomial(n + l - 1, l);
    let ratio = BigRational::new(BigInt::from(n - k - l), BigInt::from(n + k));
    to_exact_integer(ratio * to_rational(product))
}

/// Narrows an exact rational to a nonnegative integer, or reports it.
pub fn to_exact_integer(value: BigRational) -> Result<ExactInteger, ExactError> {
    if !value.is_integer() {
        return Err(ExactError::NonIntegerResult { value });
    }
    value
        .to_integer()
        .to_biguint()
        .ok_or(ExactError::NonIntegerResult { value })
}

pub(crate) fn to_rational(v: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Natural logarithm of a positive exact integer, to double precision.
///
/// The top 64 bits are rounded once to `f64`; the discarded low bits
/// contribute a relative error below `2⁻⁵³`.
pub fn ln_exact(v: &BigUint) -> f64 {
    if v.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = v.bits();
    let shift = bits.saturating_sub(64);
    let top = (v >> shift)
        .to_u64()
        .expect("64-bit window")
        .to_f64()
        .expect("u64 to f64");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `n!` exactly.
pub fn factorial(n: u64) -> ExactInteger {
    (2..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Product `lo·(lo+1)·…·hi`, one when `lo > hi`.
pub(crate) fn rising_span(lo: u64, hi: u64) -> ExactInteger {
    (lo..=hi).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}
