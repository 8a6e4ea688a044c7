//! Adaptive integration over `[0, ∞)` for integrands with a removable
//! singularity at the origin and an algebraic tail bound.
//!
//! The half-line is cut at a point `T` chosen from the caller's tail bound
//! `|f(t)| ≤ K·t^(−α)` for `t ≥ T₀`, so that the discarded piece
//! `K·T^(1−α)/(α−1)` is at most a tenth of the requested tolerance. The
//! remaining interval `[0, T]` is seeded with a split at `t = 1` followed by
//! dyadic splits `2, 4, 8, …` up to `T`, then refined globally: every panel
//! is integrated with the 7-point Gauss rule and its 15-point Kronrod
//! extension, the panel with the largest `|K15 − G7|` is
//! bisected, and the loop stops once the summed panel errors plus the tail
//! bound fit inside the tolerance.
//!
//! The integrand is never evaluated at `t = 0`; the caller-supplied limit is
//! used there instead.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::fmt;

use thiserror::Error;

use crate::scalar::{compensated_sum, Real};

/// Default evaluation budget for a single integral.
pub const DEFAULT_MAX_EVALS: usize = 2_000_000;

// Gauss-Kronrod 7/15 abscissae on [-1, 1], largest first; the Gauss nodes are
// the odd-indexed entries.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_225,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

const EVALS_PER_PANEL: usize = 15;

/// Tail decay descriptor: `|f(t)| ≤ coefficient · t^(−exponent)` for all
/// `t ≥ start`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailBound<T> {
    pub exponent: T,
    pub coefficient: T,
    pub start: T,
}

impl<T: Real> TailBound<T> {
    pub fn new(exponent: T, coefficient: T, start: T) -> Self {
        Self {
            exponent,
            coefficient,
            start,
        }
    }

    /// Turns an exponential envelope `C·t^(−power)·e^(−rate·t)`, valid for
    /// `t ≥ start`, into an algebraic bound with exponent 4.
    ///
    /// Uses `max_t t^(4−power)·e^(−rate·t) = ((4−power)/(rate·e))^(4−power)`.
    pub fn from_exponential(coefficient: T, rate: T, power: T, start: T) -> Self {
        let exponent = T::lit(4.0);
        let gap = exponent - power;
        let peak = (gap / (rate * T::E())).powf(gap);
        Self::new(exponent, coefficient * peak, start)
    }

    /// Upper bound on `∫_cut^∞ |f|` for `cut ≥ start`.
    pub fn mass_beyond(&self, cut: T) -> T {
        let excess = self.exponent - T::one();
        self.coefficient * cut.powf(-excess) / excess
    }
}

/// A semi-infinite integrand: pointwise evaluator on `t > 0`, its finite
/// limit at the origin, and a tail bound.
pub struct IntegrandSpec<'a, T> {
    eval: Box<dyn Fn(T) -> T + Send + Sync + 'a>,
    pub limit_at_zero: T,
    pub tail: TailBound<T>,
}

impl<'a, T: Real> IntegrandSpec<'a, T> {
    pub fn new(
        eval: impl Fn(T) -> T + Send + Sync + 'a,
        limit_at_zero: T,
        tail: TailBound<T>,
    ) -> Self {
        Self {
            eval: Box::new(eval),
            limit_at_zero,
            tail,
        }
    }

    /// Evaluates the integrand; `t ≤ 0` yields the origin limit.
    pub fn eval(&self, t: T) -> T {
        if t <= T::zero() {
            self.limit_at_zero
        } else {
            (self.eval)(t)
        }
    }
}

impl<T: fmt::Debug> fmt::Debug for IntegrandSpec<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IntegrandSpec")
            .field("limit_at_zero", &self.limit_at_zero)
            .field("tail", &self.tail)
            .finish_non_exhaustive()
    }
}

/// Outcome of one integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult<T> {
    pub value: T,
    pub abs_error_est: T,
    pub n_evals: usize,
    pub converged: bool,
}

/// Tolerance and evaluation budget.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadOptions<T> {
    pub abs_tol: T,
    pub max_evals: usize,
}

impl<T: Real> QuadOptions<T> {
    pub fn new(abs_tol: T, max_evals: usize) -> Self {
        Self { abs_tol, max_evals }
    }

    pub fn with_tol(abs_tol: T) -> Self {
        Self::new(abs_tol, DEFAULT_MAX_EVALS)
    }
}

impl<T: Real> Default for QuadOptions<T> {
    fn default() -> Self {
        Self::new(T::default_abs_tol(), DEFAULT_MAX_EVALS)
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuadError<T: Real> {
    #[error("invalid integrand specification: {0}")]
    InvalidSpec(String),
    #[error("no convergence after {} evaluations (error estimate {})", .0.n_evals, .0.abs_error_est)]
    NonConvergence(QuadResult<T>),
    #[error("integrand is not finite at t = {t}")]
    NonFiniteEvaluation { t: T },
}

impl<T: Real> QuadError<T> {
    /// The partial result carried by a non-convergence failure.
    pub fn partial(&self) -> Option<&QuadResult<T>> {
        match self {
            QuadError::NonConvergence(r) => Some(r),
            _ => None,
        }
    }
}

/// Smallest cut `T ≥ tail_start` (up to rounding) with
/// `tail_coefficient·T^(1−α)/(α−1) ≤ budget`.
pub fn tail_truncation_point<T: Real>(
    tail_exponent: T,
    tail_coefficient: T,
    tail_start: T,
    budget: T,
) -> Result<T, QuadError<T>> {
    if !(tail_exponent > T::one()) {
        return Err(QuadError::InvalidSpec(format!(
            "tail exponent must exceed 1, got {tail_exponent}"
        )));
    }
    if !(budget > T::zero()) || !budget.is_finite() {
        return Err(QuadError::InvalidSpec(format!(
            "tail budget must be positive, got {budget}"
        )));
    }
    if !(tail_coefficient > T::zero()) || !tail_coefficient.is_finite() {
        return Err(QuadError::InvalidSpec(format!(
            "tail coefficient must be positive, got {tail_coefficient}"
        )));
    }
    if !(tail_start > T::zero()) || !tail_start.is_finite() {
        return Err(QuadError::InvalidSpec(format!(
            "tail start must be positive, got {tail_start}"
        )));
    }
    let tail = TailBound::new(tail_exponent, tail_coefficient, tail_start);
    let excess = tail_exponent - T::one();
    let closed_form = (tail_coefficient / (excess * budget)).powf(excess.recip());
    let mut cut = closed_form.max(tail_start);
    let nudge = T::one() + T::lit(4.0) * T::epsilon();
    let mut guard = 0;
    while cut.is_finite() && tail.mass_beyond(cut) > budget && guard < 64 {
        cut = cut * nudge;
        guard += 1;
    }
    if !cut.is_finite() || tail.mass_beyond(cut) > budget {
        return Err(QuadError::InvalidSpec(format!(
            "tail bound (exponent {tail_exponent}) needs a cut beyond the representable range"
        )));
    }
    Ok(cut)
}

/// Integrates `f` over `[0, ∞)` to absolute tolerance `abs_tol`.
///
/// A budget overrun is reported as [`QuadError::NonConvergence`] carrying the
/// partial result with `converged = false`.
pub fn integrate_semi_infinite<T: Real>(
    f: &IntegrandSpec<'_, T>,
    abs_tol: T,
    max_evals: usize,
) -> Result<QuadResult<T>, QuadError<T>> {
    check_tolerance(abs_tol)?;
    let tail = f.tail;
    let cut = tail_truncation_point(
        tail.exponent,
        tail.coefficient,
        tail.start,
        abs_tol / T::lit(10.0),
    )?;
    let tail_mass = tail.mass_beyond(cut);
    let limit = f.limit_at_zero;
    if !limit.is_finite() {
        return Err(QuadError::InvalidSpec(format!(
            "limit at zero must be finite, got {limit}"
        )));
    }

    // A panel much wider than its distance from the origin can miss the
    // integrand entirely, so beyond t = 1 the seeds double until the cut.
    let mut breaks = vec![T::zero()];
    let two = T::lit(2.0);
    let mut seed = T::one();
    while seed < cut {
        breaks.push(seed);
        seed = seed * two;
    }
    breaks.push(cut);

    let eval = |t: T| f.eval(t);
    let interior = adapt(eval, &breaks, abs_tol - tail_mass, max_evals)?;
    finish(interior, tail_mass, abs_tol)
}

/// Integrates `f` over the finite interval `[a, b]`.
pub fn integrate_finite<T: Real>(
    f: impl Fn(T) -> T,
    a: T,
    b: T,
    abs_tol: T,
    max_evals: usize,
) -> Result<QuadResult<T>, QuadError<T>> {
    check_tolerance(abs_tol)?;
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(QuadError::InvalidSpec(format!(
            "interval [{a}, {b}] is not a finite nonempty range"
        )));
    }
    let interior = adapt(f, &[a, b], abs_tol, max_evals)?;
    finish(interior, T::zero(), abs_tol)
}

fn check_tolerance<T: Real>(abs_tol: T) -> Result<(), QuadError<T>> {
    if abs_tol > T::zero() && abs_tol.is_finite() {
        Ok(())
    } else {
        Err(QuadError::InvalidSpec(format!(
            "absolute tolerance must be positive, got {abs_tol}"
        )))
    }
}

fn finish<T: Real>(
    interior: QuadResult<T>,
    tail_mass: T,
    abs_tol: T,
) -> Result<QuadResult<T>, QuadError<T>> {
    let abs_error_est = interior.abs_error_est + tail_mass;
    let result = QuadResult {
        value: interior.value,
        abs_error_est,
        n_evals: interior.n_evals,
        converged: interior.converged && abs_error_est <= abs_tol,
    };
    if result.converged {
        Ok(result)
    } else {
        Err(QuadError::NonConvergence(result))
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel<T> {
    a: T,
    b: T,
    value: T,
    error: T,
}

impl<T: Real> PartialEq for Panel<T> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<T: Real> Eq for Panel<T> {}

impl<T: Real> PartialOrd for Panel<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Real> Ord for Panel<T> {
    // Max-heap on error; ties go to the leftmost panel.
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .partial_cmp(&other.error)
            .unwrap_or(Ordering::Equal)
            .then_with(|| other.a.partial_cmp(&self.a).unwrap_or(Ordering::Equal))
    }
}

fn kronrod15<T: Real>(f: &impl Fn(T) -> T, a: T, b: T) -> Result<Panel<T>, QuadError<T>> {
    let two = T::lit(2.0);
    let center = (a + b) / two;
    let half = (b - a) / two;
    let sample = |t: T| {
        let y = f(t);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(QuadError::NonFiniteEvaluation { t })
        }
    };

    let fc = sample(center)?;
    let mut kronrod = fc * T::lit(WGK[7]);
    let mut gauss = fc * T::lit(WG[3]);
    for j in 0..7 {
        let dx = half * T::lit(XGK[j]);
        let pair = sample(center - dx)? + sample(center + dx)?;
        kronrod = kronrod + T::lit(WGK[j]) * pair;
        if j % 2 == 1 {
            gauss = gauss + T::lit(WG[j / 2]) * pair;
        }
    }
    Ok(Panel {
        a,
        b,
        value: kronrod * half,
        error: ((kronrod - gauss) * half).abs(),
    })
}

fn adapt<T: Real>(
    f: impl Fn(T) -> T,
    breaks: &[T],
    target: T,
    max_evals: usize,
) -> Result<QuadResult<T>, QuadError<T>> {
    let mut heap = BinaryHeap::new();
    let mut n_evals = 0;
    for w in breaks.windows(2) {
        heap.push(kronrod15(&f, w[0], w[1])?);
        n_evals += EVALS_PER_PANEL;
    }

    let exact_error = |heap: &BinaryHeap<Panel<T>>| compensated_sum(heap.iter().map(|p| p.error));
    let mut total_error = exact_error(&heap);
    loop {
        if total_error <= target {
            // The running sum drifts; confirm before stopping.
            total_error = exact_error(&heap);
            if total_error <= target {
                break;
            }
        }
        if n_evals + 2 * EVALS_PER_PANEL > max_evals {
            break;
        }
        let worst = match heap.pop() {
            Some(p) => p,
            None => break,
        };
        let mid = (worst.a + worst.b) / T::lit(2.0);
        if !(worst.a < mid && mid < worst.b) {
            heap.push(worst);
            break;
        }
        let left = kronrod15(&f, worst.a, mid)?;
        let right = kronrod15(&f, mid, worst.b)?;
        n_evals += 2 * EVALS_PER_PANEL;
        total_error = total_error - worst.error + left.error + right.error;
        heap.push(left);
        heap.push(right);
    }

    let mut panels = heap.into_vec();
    panels.sort_by(|p, q| p.a.partial_cmp(&q.a).unwrap_or(Ordering::Equal));
    let value = compensated_sum(panels.iter().map(|p| p.value));
    let abs_error_est = compensated_sum(panels.iter().map(|p| p.error));
    Ok(QuadResult {
        value,
        abs_error_est,
        n_evals,
        converged: abs_error_est <= target,
    })
}
