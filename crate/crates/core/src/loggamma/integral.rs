//! The five integral representations of `log Γ`.
//!
//! Each integrand is stated together with its value at the origin (all are
//! `0/0` there) and a tail bound for the semi-infinite integrator. The origin
//! values come from series expansions, noted next to each constructor and
//! probed against small-`t` evaluations in the tests.

use crate::quadrature::{integrate_semi_infinite, IntegrandSpec, QuadOptions, TailBound};
use crate::scalar::{compensated_sum, Real};

use super::GammaError;

fn positive<T: Real>(x: T, what: &str) -> Result<(), GammaError<T>> {
    if x > T::zero() && x.is_finite() {
        Ok(())
    } else {
        Err(GammaError::Domain(format!("{what} needs x > 0, got {x}")))
    }
}

fn integrate<T: Real>(
    spec: &IntegrandSpec<'_, T>,
    opts: &QuadOptions<T>,
) -> Result<T, GammaError<T>> {
    Ok(integrate_semi_infinite(spec, opts.abs_tol, opts.max_evals)?.value)
}

/// Féaux integrand for `log Γ(x+1)`:
/// `[x·e^(−t) + ((1+t)^(−x−1) − (1+t)^(−1))/log(1+t)] / t`.
///
/// With `L = log(1+t)`, `((1+t)^(−x−1) − (1+t)^(−1))/L = −x + (x²+2x)t/2 + O(t²)`
/// and `x·e^(−t) = x − x·t + O(t²)`, so the integrand tends to `x²/2`.
///
/// Tail: for `t ≥ e−1` we have `L ≥ 1`, the bracketed difference is at most
/// `t^(−min(x,0)−1)` and `|x|e^(−t)/t ≤ |x|t^(−2)`, giving exponent
/// `min(2, x+2)` and coefficient `1+|x|`.
pub fn feaux_integrand<T: Real>(x: T) -> IntegrandSpec<'static, T> {
    let eval = move |t: T| {
        let l = t.ln_1p();
        let ratio = (-l).exp() * (-x * l).exp_m1() / l;
        (x * (-t).exp() + ratio) / t
    };
    let two = T::lit(2.0);
    let tail = TailBound::new(two.min(x + two), T::one() + x.abs(), T::E() - T::one());
    IntegrandSpec::new(eval, x * x / two, tail)
}

/// `log Γ(x+1)` from the Féaux integral, `x > −1`.
pub fn loggamma_feaux<T: Real>(x: T, opts: &QuadOptions<T>) -> Result<T, GammaError<T>> {
    if !(x > -T::one()) || !x.is_finite() {
        return Err(GammaError::Domain(format!(
            "Féaux integral needs x > -1, got {x}"
        )));
    }
    integrate(&feaux_integrand(x), opts)
}

/// `(½ − 1/t + 1/(e^t − 1))/t = Σ B_{2k} t^(2k−2)/(2k)!`, evaluated by its
/// series near the origin where the closed form cancels catastrophically.
fn binet_kernel<T: Real>(t: T) -> T {
    // B_{2k}/(2k)!, k = 1..6
    const SERIES: [f64; 6] = [
        1.0 / 12.0,
        -1.0 / 720.0,
        1.0 / 30_240.0,
        -1.0 / 1_209_600.0,
        1.0 / 47_900_160.0,
        -691.0 / 1_307_674_368_000.0,
    ];
    if t < T::lit(0.25) {
        let t2 = t * t;
        SERIES
            .iter()
            .rev()
            .fold(T::zero(), |acc, &c| acc * t2 + T::lit(c))
    } else {
        (T::lit(0.5) - t.recip() + t.exp_m1().recip()) / t
    }
}

fn stirling_prefix<T: Real>(x: T) -> T {
    let half = T::lit(0.5);
    (x - half) * x.ln() - x + half * (T::PI() + T::PI()).ln()
}

/// First Binet integrand `(½ − 1/t + 1/(e^t−1))·e^(−tx)/t`; the bracket is
/// `t/12 − t³/720 + …`, so the origin value is `1/12` for every `x`.
///
/// Tail: the bracket lies in `(0, ½)`, so the integrand is at most
/// `e^(−xt)/(2t)` for all `t > 0`.
pub fn binet1_integrand<T: Real>(x: T) -> IntegrandSpec<'static, T> {
    let eval = move |t: T| binet_kernel(t) * (-t * x).exp();
    let half = T::lit(0.5);
    let tail = TailBound::from_exponential(half, x, T::one(), T::one());
    IntegrandSpec::new(eval, T::lit(1.0 / 12.0), tail)
}

/// `log Γ(x)` from the first Binet formula, `x > 0`.
pub fn loggamma_binet1<T: Real>(x: T, opts: &QuadOptions<T>) -> Result<T, GammaError<T>> {
    positive(x, "first Binet formula")?;
    let correction = integrate(&binet1_integrand(x), opts)?;
    Ok(stirling_prefix(x) + correction)
}

/// Second Binet integrand `arctan(t/x)/(e^(2πt) − 1)` (without the factor 2);
/// `arctan(t/x) ≈ t/x` and `e^(2πt) − 1 ≈ 2πt` give the origin value
/// `1/(2πx)`.
///
/// Tail: for `t ≥ 1`, `e^(2πt) − 1 ≥ (1 − e^(−2π))·e^(2πt)`, so the integrand
/// is at most `(π/2)/(1 − e^(−2π))·e^(−2πt)`.
pub fn binet2_integrand<T: Real>(x: T) -> IntegrandSpec<'static, T> {
    let two_pi = T::PI() + T::PI();
    let eval = move |t: T| (t / x).atan() / (two_pi * t).exp_m1();
    let envelope = T::FRAC_PI_2() / (T::one() - (-two_pi).exp());
    let tail = TailBound::from_exponential(envelope, two_pi, T::zero(), T::one());
    IntegrandSpec::new(eval, (two_pi * x).recip(), tail)
}

/// `log Γ(x)` from the second Binet formula, `x > 0`.
pub fn loggamma_binet2<T: Real>(x: T, opts: &QuadOptions<T>) -> Result<T, GammaError<T>> {
    positive(x, "second Binet formula")?;
    let correction = integrate(&binet2_integrand(x), opts)?;
    Ok(stirling_prefix(x) + correction + correction)
}

/// Malmstén integrand `[(x−1)e^(−t) + (e^(−xt) − e^(−t))/(1 − e^(−t))]/t`.
///
/// The ratio expands as `(1−x) + (x²−x)t/2 + O(t²)`, which cancels the
/// constant of `(x−1)e^(−t)` and leaves the origin value `(x−1)(x−2)/2`.
///
/// Tail: for `t ≥ 1` the bracket is at most
/// `(|x−1| + 2/(1−e^(−1)))·e^(−min(x,1)·t)`.
pub fn malmsten_integrand<T: Real>(x: T) -> IntegrandSpec<'static, T> {
    let one = T::one();
    let eval = move |t: T| {
        let decay = (-t).exp();
        let gap = (one - x) * t;
        // e^(−xt) − e^(−t); the factored form overflows once the exponents
        // separate, the plain difference cancels when they do not.
        let diff = if gap.abs() < one {
            decay * gap.exp_m1()
        } else {
            (-x * t).exp() - decay
        };
        ((x - one) * decay + diff / -(-t).exp_m1()) / t
    };
    let two = T::lit(2.0);
    let envelope = (x - one).abs() + two / (one - (-one).exp());
    let tail = TailBound::from_exponential(envelope, x.min(one), one, one);
    IntegrandSpec::new(eval, (x - one) * (x - two) / two, tail)
}

/// `log Γ(x)` from the Malmstén integral, `x > 0`.
pub fn loggamma_malmsten<T: Real>(x: T, opts: &QuadOptions<T>) -> Result<T, GammaError<T>> {
    positive(x, "Malmstén integral")?;
    integrate(&malmsten_integrand(x), opts)
}

/// Kummer integrand `[sinh((½−x)t)/sinh(t/2) − (1−2x)e^(−t)]/t` on `0 < x < 1`.
///
/// `sinh(bt)/sinh(t/2) = 2b + O(t²)` with `2b = 1−2x`, and
/// `(1−2x)e^(−t) = (1−2x)(1 − t) + O(t²)`, so the bracket is
/// `(1−2x)t + O(t²)` and the origin value is `1 − 2x`.
///
/// Tail: for `t ≥ 1` the hyperbolic ratio is at most
/// `e^(−min(x,1−x)·t)/(1 − e^(−1))`.
pub fn kummer_integrand<T: Real>(x: T) -> IntegrandSpec<'static, T> {
    let one = T::one();
    let half = T::lit(0.5);
    let b = half - x;
    let slope = one - x - x;
    let eval = move |t: T| {
        // sign(b)·e^((|b|−½)t)·(1 − e^(−2|b|t))/(1 − e^(−t)), overflow-free
        let ab = b.abs();
        let ratio = (-(-(ab + ab) * t).exp_m1()) / -(-t).exp_m1() * ((ab - half) * t).exp();
        let ratio = if b < T::zero() { -ratio } else { ratio };
        (ratio - slope * (-t).exp()) / t
    };
    let envelope = (one - (-one).exp()).recip() + slope.abs();
    let tail = TailBound::from_exponential(envelope, x.min(one - x), one, one);
    IntegrandSpec::new(eval, slope, tail)
}

/// `log Γ(x)` from the Kummer integral.
///
/// The integral itself is used on `0 < x < 1`. Larger non-integers are
/// reduced by `Γ(x+1) = x·Γ(x)` onto their fractional part; positive integers
/// return `log (x−1)!` as a sum of logarithms, which takes `O(x)` steps.
pub fn loggamma_kummer<T: Real>(x: T, opts: &QuadOptions<T>) -> Result<T, GammaError<T>> {
    positive(x, "Kummer integral")?;
    if x < T::one() {
        return kummer_direct(x, opts);
    }
    let whole = x.floor();
    let steps = whole
        .to_u64()
        .ok_or_else(|| GammaError::Domain(format!("Kummer reduction cannot shift x = {x}")))?;
    if x == whole {
        return Ok(compensated_sum(
            (2..steps).map(|k| T::from_u64(k).expect("integer").ln()),
        ));
    }
    let frac = x - whole;
    let base = kummer_direct(frac, opts)?;
    let shifts = (0..steps).map(|k| (frac + T::from_u64(k).expect("integer")).ln());
    Ok(compensated_sum(std::iter::once(base).chain(shifts)))
}

fn kummer_direct<T: Real>(x: T, opts: &QuadOptions<T>) -> Result<T, GammaError<T>> {
    let half = T::lit(0.5);
    let integral = integrate(&kummer_integrand(x), opts)?;
    Ok(half * T::PI().ln() - half * (T::PI() * x).sin().ln() + half * integral)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loggamma::loggamma_reference;

    fn opts() -> QuadOptions<f64> {
        QuadOptions::default()
    }

    fn near(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    fn half_log_pi() -> f64 {
        0.5 * std::f64::consts::PI.ln()
    }

    #[test]
    fn origin_limits_match_small_t_probe() {
        let probe = 1e-6;
        for &x in &[0.1f64, 0.25, 0.5, 0.9, 1.5, 3.7] {
            let specs = [
                ("feaux", feaux_integrand(x - 1.0)),
                ("binet1", binet1_integrand(x)),
                ("binet2", binet2_integrand(x)),
                ("malmsten", malmsten_integrand(x)),
            ];
            for (name, s) in specs {
                assert!(
                    near(s.eval(probe), s.limit_at_zero, 1e-4),
                    "{name} x={x}: {} vs {}",
                    s.eval(probe),
                    s.limit_at_zero
                );
            }
        }
        for &x in &[0.1f64, 0.25, 0.5, 0.7, 0.95] {
            let s = kummer_integrand(x);
            assert!(near(s.eval(probe), s.limit_at_zero, 1e-4), "kummer x={x}");
        }
    }

    #[test]
    fn origin_limits_at_large_argument() {
        // The O(t) slope grows like x³, so extrapolate 2·f(h) − f(2h).
        let h = 1e-6;
        for &x in &[7.5f64, 12.0, 30.0] {
            for s in [feaux_integrand(x - 1.0), malmsten_integrand(x)] {
                let extrapolated = 2.0 * s.eval(h) - s.eval(2.0 * h);
                assert!(
                    near(extrapolated, s.limit_at_zero, 1e-4 * s.limit_at_zero.abs()),
                    "x={x}"
                );
            }
        }
    }

    #[test]
    fn origin_limit_approach_is_monotone() {
        // |eval(10^-k) − limit| shrinks as k grows.
        let s = feaux_integrand(2.5f64);
        let gaps: Vec<f64> = (2..=6)
            .map(|k| (s.eval(10f64.powi(-k)) - s.limit_at_zero).abs())
            .collect();
        assert!(gaps.windows(2).all(|w| w[1] < w[0]), "{gaps:?}");
    }

    #[test]
    fn tails_are_valid_bounds() {
        for &x in &[0.1f64, 0.5, 1.0, 3.7, 12.0] {
            let specs = [
                feaux_integrand(x - 1.0),
                binet1_integrand(x),
                binet2_integrand(x),
                malmsten_integrand(x),
            ];
            for s in specs {
                let tail = s.tail;
                let mut t = tail.start;
                while t < 1e6 {
                    let bound = tail.coefficient * t.powf(-tail.exponent);
                    assert!(s.eval(t).abs() <= bound * (1.0 + 1e-12), "x={x} t={t}");
                    t *= 1.3;
                }
            }
        }
        for &x in &[0.1f64, 0.3, 0.5, 0.8, 0.99] {
            let s = kummer_integrand(x);
            let mut t = s.tail.start;
            while t < 1e6 {
                let bound = s.tail.coefficient * t.powf(-s.tail.exponent);
                assert!(
                    s.eval(t).abs() <= bound * (1.0 + 1e-12),
                    "kummer x={x} t={t}"
                );
                t *= 1.3;
            }
        }
    }

    #[test]
    fn feaux_examples() {
        assert!(near(loggamma_feaux(0.0, &opts()).unwrap(), 0.0, 1e-10));
        assert!(near(
            loggamma_feaux(3.0, &opts()).unwrap(),
            6f64.ln(),
            1e-10
        ));
        assert!(near(
            loggamma_feaux(-0.5, &opts()).unwrap(),
            half_log_pi(),
            1e-10
        ));
        assert!(loggamma_feaux(-1.0, &opts()).is_err());
    }

    #[test]
    fn binet1_examples() {
        assert!(near(loggamma_binet1(1.0, &opts()).unwrap(), 0.0, 1e-10));
        assert!(near(
            loggamma_binet1(4.0, &opts()).unwrap(),
            6f64.ln(),
            1e-10
        ));
        let r = loggamma_reference(3.5f64).unwrap();
        assert!(near(loggamma_binet1(3.5, &opts()).unwrap(), r, 1e-10));
        assert!(loggamma_binet1(0.0, &opts()).is_err());
    }

    #[test]
    fn binet2_examples() {
        assert!(near(loggamma_binet2(1.0, &opts()).unwrap(), 0.0, 1e-10));
        assert!(near(loggamma_binet2(2.0, &opts()).unwrap(), 0.0, 1e-10));
        let r = loggamma_reference(2.5f64).unwrap();
        assert!(near(loggamma_binet2(2.5, &opts()).unwrap(), r, 1e-10));
        assert!(loggamma_binet2(-1.0, &opts()).is_err());
    }

    #[test]
    fn malmsten_examples() {
        assert!(near(loggamma_malmsten(1.0, &opts()).unwrap(), 0.0, 1e-10));
        assert!(near(
            loggamma_malmsten(4.0, &opts()).unwrap(),
            6f64.ln(),
            1e-10
        ));
        assert!(near(
            loggamma_malmsten(0.5, &opts()).unwrap(),
            half_log_pi(),
            1e-10
        ));
        assert!(loggamma_malmsten(0.0, &opts()).is_err());
    }

    #[test]
    fn kummer_examples() {
        assert!(near(
            loggamma_kummer(0.5, &opts()).unwrap(),
            half_log_pi(),
            1e-10
        ));
        let quarter = loggamma_reference(0.25f64).unwrap();
        assert!(near(
            loggamma_kummer(0.25, &opts()).unwrap(),
            quarter,
            1e-10
        ));
        let r = loggamma_reference(3.5f64).unwrap();
        assert!(near(loggamma_kummer(3.5, &opts()).unwrap(), r, 1e-10));
        assert!(loggamma_kummer(0.0, &opts()).is_err());
    }

    #[test]
    fn kummer_integrand_vanishes_at_half() {
        let s = kummer_integrand(0.5f64);
        for &t in &[1e-3, 0.5, 2.0, 40.0] {
            assert_eq!(s.eval(t), 0.0);
        }
    }

    #[test]
    fn kummer_shift_consistency() {
        for &x in &[1.25f64, 2.25, 3.25] {
            let up = loggamma_kummer(x, &opts()).unwrap();
            let down = loggamma_kummer(x - 1.0, &opts()).unwrap() + (x - 1.0).ln();
            assert!(near(up, down, 1e-10), "x={x}");
        }
    }

    #[test]
    fn large_t_is_finite() {
        for &t in &[1e3f64, 1e8, 1e15, 1e30] {
            assert!(feaux_integrand(-0.9f64).eval(t).is_finite());
            assert!(malmsten_integrand(0.1f64).eval(t).is_finite());
            assert!(kummer_integrand(0.1f64).eval(t).is_finite());
            assert!(binet1_integrand(0.1f64).eval(t).is_finite());
            assert!(binet2_integrand(0.1f64).eval(t).is_finite());
        }
    }

    #[test]
    fn single_precision_feaux() {
        let opts = QuadOptions::<f32>::default();
        let v = loggamma_feaux(3.0f32, &opts).unwrap();
        assert!((v - 6f32.ln()).abs() < 1e-3, "{v}");
    }
}
