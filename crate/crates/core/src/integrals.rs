//! Integral representations of the Catalan numbers, evaluated in log space
//! and checked against the exact values.
//!
//! Two representations are provided:
//!
//! * the gamma-ratio route, `log Cₙ = 2n·log 2 − ½·log π + I`, where `I` is
//!   the integral of
//!   `{[(1+t)^(3/2) − 1]/[(1+t)^(n+2)·log(1+t)] − (3/2)e^(−t)}/t`;
//! * the duplication route, `log Cₙ = log 2 + J`, where `J` integrates
//!   `{[(1+t)^(−2n) − (1+t)^(−n) − (1+t)^(−n−2) + (1+t)^(−1)]/log(1+t) − e^(−t)}/t`.
//!
//! Both are defined for `n ≥ 1`.

use std::fmt;

use thiserror::Error;

use crate::combinatorics::{catalan_exact, ln_exact};
use crate::loggamma::{loggamma_reference, GammaError};
use crate::quadrature::{
    integrate_semi_infinite, IntegrandSpec, QuadError, QuadOptions, QuadResult, TailBound,
};
use crate::scalar::{compensated_sum, Real};

/// Index `n ≥ 1` of a Catalan number in the integral representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CatalanIndex(u32);

impl CatalanIndex {
    pub fn new(n: u32) -> Result<Self, CatalanError<f64>> {
        if n == 0 {
            Err(CatalanError::Domain(
                "integral representations need n >= 1".into(),
            ))
        } else {
            Ok(Self(n))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for CatalanIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CatalanError<T: Real> {
    #[error("domain error: {0}")]
    Domain(String),
    /// Quadrature ran out of budget; the partial comparison is attached.
    #[error("integral for n = {} did not converge (error estimate {})", .0.n, .0.integral.abs_error_est)]
    NonConvergence(Box<ReprResult<T>>),
    #[error(transparent)]
    Quadrature(QuadError<T>),
    #[error(transparent)]
    Gamma(#[from] GammaError<T>),
}

impl<T: Real> CatalanError<T> {
    /// The partial comparison carried by a non-convergence failure.
    pub fn partial(&self) -> Option<&ReprResult<T>> {
        match self {
            CatalanError::NonConvergence(r) => Some(r),
            _ => None,
        }
    }
}

/// One representation's estimate of `log Cₙ` next to the exact value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReprResult<T> {
    pub n: CatalanIndex,
    pub log_value: T,
    pub integral: QuadResult<T>,
    pub exact_log: T,
    pub abs_log_error: T,
}

/// `log Cₙ` of the exact integer.
pub fn exact_log_catalan<T: Real>(n: u32) -> T {
    T::lit(ln_exact(&catalan_exact(n)))
}

/// `2n·log 2 − ½·log π + log Γ(n+½) − log Γ(n+2)` with both gamma terms from
/// the reference.
pub fn log_catalan_gamma<T: Real>(n: CatalanIndex) -> Result<T, CatalanError<T>> {
    let nf = T::from_u32(n.get()).expect("index fits");
    let half = T::lit(0.5);
    Ok(compensated_sum([
        (nf + nf) * T::LN_2(),
        -half * T::PI().ln(),
        loggamma_reference(nf + half)?,
        -loggamma_reference(nf + T::lit(2.0))?,
    ]))
}

/// Integrand `{[(1+t)^(3/2) − 1]/[(1+t)^m·log(1+t)] − (3/2)e^(−t)}/t` for a
/// general exponent `m > 3/2`; the Catalan representation uses `m = n + 2`.
///
/// With `L = log(1+t)`, `[(1+t)^(3/2) − 1]/L = 3/2 + (9/8)t + O(t²)` and
/// `(1+t)^(−m) = 1 − m·t + O(t²)`, so the bracket is `(21/8 − 3m/2)·t + O(t²)`
/// and the origin value is `21/8 − 3m/2` (`−(3n/2 + 3/8)` at `m = n+2`).
///
/// Tail: for `t ≥ e−1` the first term is at most `t^(−(m−1/2))`; the
/// exponential term is at most the same power once `1.5·t^(m−3/2)·e^(−t) ≤ 1`
/// on a decreasing branch, which fixes the start. Coefficient 2.
pub fn gamma_ratio_integrand<T: Real>(exponent: T) -> IntegrandSpec<'static, T> {
    let three_halves = T::lit(1.5);
    let eval = move |t: T| {
        let l = t.ln_1p();
        let lead = (three_halves * l).exp_m1() * (-exponent * l).exp() / l;
        (lead - three_halves * (-t).exp()) / t
    };
    let limit = T::lit(21.0 / 8.0) - three_halves * exponent;
    let alpha = exponent - T::lit(0.5);
    IntegrandSpec::new(
        eval,
        limit,
        TailBound::new(alpha, T::lit(2.0), exponential_crossover(alpha)),
    )
}

/// Smallest doubling of `max(e−1, α−1)` past which `1.5·t^(α−1)·e^(−t) ≤ 1`.
fn exponential_crossover<T: Real>(alpha: T) -> T {
    let one = T::one();
    let mut start = (T::E() - one).max(alpha - one);
    let ceiling = T::lit(2.0 / 3.0).ln();
    while (alpha - one) * start.ln() - start > ceiling {
        start = start + start;
    }
    start
}

/// The Catalan integrand of the gamma-ratio representation at index `n`.
pub fn theorem_integrand<T: Real>(n: CatalanIndex) -> IntegrandSpec<'static, T> {
    gamma_ratio_integrand(T::from_u32(n.get()).expect("index fits") + T::lit(2.0))
}

/// Integrand `{[(1+t)^(−2n) − (1+t)^(−n) − (1+t)^(−n−2) + (1+t)^(−1)]/log(1+t) − e^(−t)}/t`.
///
/// In `L = log(1+t)` the numerator is `L + (2n² − 4n − 3)L²/2 + O(L³)`, so the
/// bracket is `(n² − 2n − 1/2)·t + O(t²)` and that is the origin value.
///
/// Tail: the numerator is at most `(1+t)^(−1)` in magnitude for `n ≥ 1` and
/// `e^(−t)/t ≤ t^(−2)/e`, so `2·t^(−2)` bounds the integrand for `t ≥ e−1`.
pub fn duplication_integrand<T: Real>(n: CatalanIndex) -> IntegrandSpec<'static, T> {
    let nf = T::from_u32(n.get()).expect("index fits");
    let one = T::one();
    let two = T::lit(2.0);
    let eval = move |t: T| {
        let l = t.ln_1p();
        // (e^(−L) − e^(−nL)) + (e^(−2nL) − e^(−(n+2)L)), each pair factored
        let outer = -(-l).exp() * (-(nf - one) * l).exp_m1();
        let inner = (-(nf + two) * l).exp() * (-(nf - two) * l).exp_m1();
        ((outer + inner) / l - (-t).exp()) / t
    };
    let limit = nf * nf - two * nf - T::lit(0.5);
    IntegrandSpec::new(eval, limit, TailBound::new(two, two, T::E() - one))
}

fn compare<T: Real>(
    n: CatalanIndex,
    offset: T,
    spec: &IntegrandSpec<'_, T>,
    opts: &QuadOptions<T>,
) -> Result<ReprResult<T>, CatalanError<T>> {
    let exact_log = exact_log_catalan::<T>(n.get());
    let build = |integral: QuadResult<T>| {
        let log_value = offset + integral.value;
        ReprResult {
            n,
            log_value,
            integral,
            exact_log,
            abs_log_error: (log_value - exact_log).abs(),
        }
    };
    match integrate_semi_infinite(spec, opts.abs_tol, opts.max_evals) {
        Ok(integral) => Ok(build(integral)),
        Err(QuadError::NonConvergence(partial)) => {
            Err(CatalanError::NonConvergence(Box::new(build(partial))))
        }
        Err(e) => Err(CatalanError::Quadrature(e)),
    }
}

fn gamma_ratio_offset<T: Real>(n: u32) -> T {
    let nf = T::from_u32(n).expect("index fits");
    (nf + nf) * T::LN_2() - T::lit(0.5) * T::PI().ln()
}

/// `Cₙ = (2^(2n)/√π)·exp(I)`, compared with the exact value in log space.
pub fn catalan_via_feaux<T: Real>(
    n: CatalanIndex,
    opts: &QuadOptions<T>,
) -> Result<ReprResult<T>, CatalanError<T>> {
    compare(n, gamma_ratio_offset(n.get()), &theorem_integrand(n), opts)
}

/// `Cₙ = 2·exp(J)`, compared with the exact value in log space.
pub fn catalan_via_duplication<T: Real>(
    n: CatalanIndex,
    opts: &QuadOptions<T>,
) -> Result<ReprResult<T>, CatalanError<T>> {
    compare(n, T::LN_2(), &duplication_integrand(n), opts)
}

/// Both exponent variants of the gamma-ratio representation at one index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExponentCheck<T> {
    pub n: CatalanIndex,
    /// `2n·log 2 − ½·log π + I` with `(1+t)^(n+2)` in the denominator.
    pub log_value_n_plus_2: T,
    /// The same with `(1+t)^(n+1)`.
    pub log_value_n_plus_1: T,
    /// `log Cₙ`.
    pub log_catalan: T,
    /// `log(4·C_{n−1})`, what the `n+1` variant reproduces.
    pub log_four_catalan_prev: T,
}

impl<T: Real> ExponentCheck<T> {
    pub fn n_plus_2_error(&self) -> T {
        (self.log_value_n_plus_2 - self.log_catalan).abs()
    }

    pub fn n_plus_1_error(&self) -> T {
        (self.log_value_n_plus_1 - self.log_four_catalan_prev).abs()
    }

    /// True when `n+2` reproduces `log Cₙ`, `n+1` reproduces `log(4·C_{n−1})`,
    /// and the latter visibly misses `log Cₙ`.
    pub fn confirms_n_plus_2(&self, tol: T) -> bool {
        self.n_plus_2_error() <= tol
            && self.n_plus_1_error() <= tol
            && (self.log_value_n_plus_1 - self.log_catalan).abs() > tol
    }

    /// The exponent whose variant matches `log Cₙ`, if exactly one does.
    pub fn matching_exponent(&self, tol: T) -> Option<u32> {
        let plus2 = self.n_plus_2_error() <= tol;
        let plus1 = (self.log_value_n_plus_1 - self.log_catalan).abs() <= tol;
        match (plus2, plus1) {
            (true, false) => Some(self.n.get() + 2),
            (false, true) => Some(self.n.get() + 1),
            _ => None,
        }
    }
}

/// Evaluates the gamma-ratio representation with both `(1+t)^(n+2)` and
/// `(1+t)^(n+1)`. The second is the first at index `n−1`, so it lands on
/// `log Cₙ₋₁ + 2·log 2`.
pub fn resolve_exponent_typo<T: Real>(
    n: CatalanIndex,
    opts: &QuadOptions<T>,
) -> Result<ExponentCheck<T>, CatalanError<T>> {
    let nf = T::from_u32(n.get()).expect("index fits");
    let offset = gamma_ratio_offset::<T>(n.get());
    let run = |exponent: T| -> Result<T, CatalanError<T>> {
        let spec = gamma_ratio_integrand(exponent);
        integrate_semi_infinite(&spec, opts.abs_tol, opts.max_evals)
            .map(|r| offset + r.value)
            .map_err(CatalanError::Quadrature)
    };
    let log_value_n_plus_2 = run(nf + T::lit(2.0))?;
    let log_value_n_plus_1 = run(nf + T::one())?;
    Ok(ExponentCheck {
        n,
        log_value_n_plus_2,
        log_value_n_plus_1,
        log_catalan: exact_log_catalan(n.get()),
        log_four_catalan_prev: T::lit(4.0).ln() + exact_log_catalan(n.get() - 1),
    })
}
