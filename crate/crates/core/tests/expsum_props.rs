mod common;

use common::*;
use expalg_core::rug::Rational;
use expalg_core::{Basis, ExpSum, Interval};
use proptest::prelude::*;

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * (1.0 + a.abs().max(b.abs()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn normalize_is_idempotent(raw in arb_terms(8)) {
        let f = ExpSum::normalize(raw);
        let again = ExpSum::normalize(f.terms().iter().map(|t| (t.coeff.clone(), t.exponent.clone())));
        prop_assert_eq!(&f, &again);
        prop_assert!(f.terms().iter().all(|t| t.coeff != 0));
    }

    #[test]
    fn normalize_preserves_values(raw in arb_terms(8), x in -2.0f64..2.0) {
        let direct: f64 = raw.iter().map(|(a, e)| a.to_f64() * (exponent_value(e) * x).exp()).sum();
        let f = ExpSum::normalize(raw);
        prop_assert!(close(direct, eval_f64(&f64_terms(&f), x)));
    }

    #[test]
    fn self_difference_is_zero(f in arb_expsum(6)) {
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f + &(-&f), ExpSum::zero());
    }

    #[test]
    fn ring_laws(f in arb_expsum(4), g in arb_expsum(4), h in arb_expsum(4)) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
    }

    #[test]
    fn enclosure_contains_product(f in arb_expsum(4), g in arb_expsum(4), x in -2.0f64..2.0) {
        let t = Rational::from_f64(x).unwrap();
        let fg = (&f * &g).evaluate_rational(&t, 128);
        let prod = &f.evaluate_rational(&t, 128) * &g.evaluate_rational(&t, 128);
        prop_assert!(fg.overlaps(&prod));
        prop_assert!(close(fg.to_f64_mid(), eval_f64(&f64_terms(&f), x) * eval_f64(&f64_terms(&g), x)));
    }

    #[test]
    fn enclosures_tighten_with_precision(f in arb_expsum(5), x in -3.0f64..3.0) {
        let t = Rational::from_f64(x).unwrap();
        let coarse = f.evaluate_rational(&t, 64);
        let fine = f.evaluate_rational(&t, 256);
        prop_assert!(coarse.overlaps(&fine));
        prop_assert!(fine.width() <= coarse.width());
    }

    #[test]
    fn interval_evaluation_is_monotone_in_inclusion(f in arb_expsum(5), x in -2.0f64..2.0, r in 0.0f64..0.5) {
        let inner = Interval::from_f64(x, 128);
        let outer = Interval::from_rationals(
            &Rational::from_f64(x - r).unwrap(),
            &Rational::from_f64(x + r).unwrap(),
            128,
        );
        prop_assert!(f.evaluate(&inner, 128).is_subset_of(&f.evaluate(&outer, 128)));
    }

    #[test]
    fn pow_matches_repeated_product(f in arb_expsum(3), n in 0u32..4) {
        let mut expected = ExpSum::constant(1);
        for _ in 0..n {
            expected = &expected * &f;
        }
        prop_assert_eq!(f.pow(n), expected);
    }

    #[test]
    fn shift_and_dilate_act_on_values(f in arb_expsum(4), k in 1i64..4, x in -1.0f64..1.0) {
        let k = q(k, 2);
        let dilated = f.dilate(&k);
        prop_assert!(close(eval_f64(&f64_terms(&dilated), x), eval_f64(&f64_terms(&f), k.to_f64() * x)));
        let e = expalg_core::ExponentVector::rational(q(1, 3));
        let shifted = f.shift(&e);
        prop_assert!(close(eval_f64(&f64_terms(&shifted), x), (x / 3.0).exp() * eval_f64(&f64_terms(&f), x)));
    }

    #[test]
    fn json_round_trip(f in arb_expsum(6)) {
        let back = ExpSum::from_json(&f.to_json(), &Basis::new()).unwrap();
        prop_assert_eq!(f, back);
    }

    #[test]
    fn rational_derivative_matches_central_difference(
        raw in proptest::collection::vec((-9i64..=9, 1i64..=4, -6i64..=6, 1i64..=3), 1..5),
        x in -1.5f64..1.5,
    ) {
        let f = ExpSum::normalize(raw.into_iter().map(|(n, d, b, e)| {
            (q(n, d), expalg_core::ExponentVector::rational(q(b, e)))
        }));
        let df = f.derivative().unwrap();
        let h = 1e-5;
        let terms = f64_terms(&f);
        let fd = (eval_f64(&terms, x + h) - eval_f64(&terms, x - h)) / (2.0 * h);
        let exact = df.evaluate(&Interval::from_f64(x, 128), 128).to_f64_mid();
        let scale: f64 = terms.iter().map(|(a, b)| (a * b * b * b * (b * x).exp()).abs()).sum::<f64>() + 1.0;
        prop_assert!((fd - exact).abs() <= 1e-8 * scale);
    }
}

#[test]
fn sqrt_derivative_scales_by_symbol() {
    let s2 = expalg_core::BasisSymbol::sqrt(2).unwrap();
    let f = ExpSum::exp_term(
        q(3, 1),
        expalg_core::ExponentVector::single(s2.clone(), q(2, 1)),
    );
    let df = f.derivative().unwrap();
    assert_eq!(df.factor, s2);
    let v = df.evaluate(&Interval::from_f64(0.5, 128), 128).to_f64_mid();
    let expected = 3.0 * 2.0 * 2f64.sqrt() * (2.0 * 2f64.sqrt() * 0.5).exp();
    assert!(close(v, expected));
}

#[test]
fn mixed_symbol_derivative_is_refused() {
    let s2 = expalg_core::BasisSymbol::sqrt(2).unwrap();
    let f = &ExpSum::exp_term(q(1, 1), expalg_core::ExponentVector::single(s2, q(1, 1)))
        + &ExpSum::exp_term(q(1, 1), expalg_core::ExponentVector::rational(q(1, 1)));
    assert!(f.derivative().is_err());
}
