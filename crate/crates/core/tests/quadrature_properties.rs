use catalan_core::{integrate_semi_infinite, IntegrandSpec64, TailBound};
use proptest::prelude::*;

fn exponential(rate: f64) -> IntegrandSpec64<'static> {
    IntegrandSpec64::new(
        move |t: f64| (-rate * t).exp(),
        1.0,
        TailBound::from_exponential(1.0, rate, 0.0, 1.0),
    )
}

#[test]
fn closed_form_suite() {
    let cases: Vec<(IntegrandSpec64<'static>, f64)> = vec![
        (exponential(1.0), 1.0),
        (
            IntegrandSpec64::new(
                |t: f64| t * (-t).exp(),
                0.0,
                TailBound::from_exponential(1.0, 1.0, 1.0, 1.0),
            ),
            1.0,
        ),
        (
            IntegrandSpec64::new(
                |t: f64| (1.0 + t).powi(-2),
                1.0,
                TailBound::new(2.0, 1.0, 1.0),
            ),
            1.0,
        ),
        (
            IntegrandSpec64::new(
                |t: f64| (1.0 + t).powf(-1.5),
                1.0,
                TailBound::new(1.5, 1.0, 1.0),
            ),
            2.0,
        ),
    ];
    for (spec, truth) in cases {
        let r = integrate_semi_infinite(&spec, 1e-12, 100_000).unwrap();
        assert!((r.value - truth).abs() <= r.abs_error_est, "{r:?}");
        assert!(r.abs_error_est <= 1e-10);
        assert!(r.n_evals < 100_000);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn deterministic(rate in 0.1f64..10.0) {
        let spec = exponential(rate);
        let a = integrate_semi_infinite(&spec, 1e-11, 200_000).unwrap();
        let b = integrate_semi_infinite(&spec, 1e-11, 200_000).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn exponential_rates(rate in 0.1f64..10.0) {
        let r = integrate_semi_infinite(&exponential(rate), 1e-11, 200_000).unwrap();
        prop_assert!((r.value - rate.recip()).abs() <= 1e-10);
    }

    #[test]
    fn tighter_tolerance_costs_more_and_errs_less(rate in 0.2f64..5.0) {
        let spec = exponential(rate);
        let loose = integrate_semi_infinite(&spec, 1e-6, 200_000).unwrap();
        let tight = integrate_semi_infinite(&spec, 1e-12, 200_000).unwrap();
        prop_assert!(tight.n_evals >= loose.n_evals);
        prop_assert!((tight.value - rate.recip()).abs() <= (loose.value - rate.recip()).abs() + 1e-12);
    }

    #[test]
    fn power_tails(p in 1.2f64..4.0) {
        // ∫ (1+t)^(−p) = 1/(p−1)
        let spec = IntegrandSpec64::new(move |t: f64| (1.0 + t).powf(-p), 1.0, TailBound::new(p, 1.0, 1.0));
        let r = integrate_semi_infinite(&spec, 1e-10, 500_000).unwrap();
        prop_assert!((r.value - (p - 1.0).recip()).abs() <= 1e-9);
    }
}
