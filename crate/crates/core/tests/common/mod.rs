//! Random generators and double-precision oracles shared by the
//! integration tests. Oracles here never call into the library's interval
//! code; they only read exact coefficients and basis values.

#![allow(dead_code)]

use expalg_core::rug::Rational;
use expalg_core::{BasisSymbol, ExpSum, ExponentVector};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}

fn nonzero(rng: &mut impl Rng, bound: i64) -> i64 {
    loop {
        let v = rng.gen_range(-bound..=bound);
        if v != 0 {
            return v;
        }
    }
}

pub fn random_rational(rng: &mut impl Rng, bound: i64, max_den: i64) -> Rational {
    q(nonzero(rng, bound), rng.gen_range(1..=max_den))
}

/// A nonzero exponent over `{1, √2, √3}` with value in roughly `[−3, 3]`.
pub fn random_exponent(rng: &mut impl Rng) -> ExponentVector {
    let s2 = BasisSymbol::sqrt(2).unwrap();
    let s3 = BasisSymbol::sqrt(3).unwrap();
    loop {
        let e = match rng.gen_range(0..4) {
            0 | 1 => ExponentVector::rational(random_rational(rng, 6, 3)),
            2 => ExponentVector::from_coords([
                (BasisSymbol::one(), random_rational(rng, 3, 2)),
                (s2.clone(), random_rational(rng, 2, 2)),
            ]),
            _ => ExponentVector::single(s3.clone(), random_rational(rng, 3, 2)),
        };
        if !e.is_zero() && exponent_value(&e).abs() <= 3.2 {
            return e;
        }
    }
}

/// Exponential-like sum with exactly `rank` terms.
pub fn random_exp_like(rng: &mut impl Rng, rank: usize) -> ExpSum {
    let mut exps: Vec<ExponentVector> = Vec::new();
    while exps.len() < rank {
        let e = random_exponent(rng);
        if !exps.contains(&e) {
            exps.push(e);
        }
    }
    let f = ExpSum::normalize(exps.into_iter().map(|e| (random_rational(rng, 5, 3), e)));
    assert_eq!(f.rank(), rank);
    f
}

/// Exponent value from the exact coordinates and `f64::sqrt`.
pub fn exponent_value(e: &ExponentVector) -> f64 {
    e.coords()
        .map(|(sym, c)| {
            let base = match sym.square() {
                Some(sq) => sq.to_f64().sqrt(),
                None => panic!("declared symbols are not used in tests"),
            };
            c.to_f64() * base
        })
        .sum()
}

/// `(coefficient, exponent)` pairs in double precision.
pub fn f64_terms(f: &ExpSum) -> Vec<(f64, f64)> {
    f.terms()
        .iter()
        .map(|t| (t.coeff.to_f64(), exponent_value(&t.exponent)))
        .collect()
}

pub fn eval_f64(terms: &[(f64, f64)], t: f64) -> f64 {
    terms.iter().map(|(a, b)| a * (b * t).exp()).sum()
}

/// Sign of `Σ a e^{βt} − c`, or `None` when the value is too small
/// relative to the magnitudes involved to trust in double precision.
///
/// The dominant exponential is factored out so large `|t|` cannot overflow.
pub fn sign_oracle(terms: &[(f64, f64)], c: f64, t: f64) -> Option<i8> {
    let reference = if t >= 0.0 {
        terms.iter().map(|x| x.1).fold(0.0, f64::max)
    } else {
        terms.iter().map(|x| x.1).fold(0.0, f64::min)
    };
    let mut value = -c * (-reference * t).exp();
    let mut scale = value.abs();
    for (a, b) in terms {
        let v = a * ((b - reference) * t).exp();
        value += v;
        scale += v.abs();
    }
    if value.abs() <= 1e-9 * scale {
        None
    } else {
        Some(if value > 0.0 { 1 } else { -1 })
    }
}

/// A term list that sums to zero, written with split coefficients and
/// exponents in several equivalent forms.
pub fn telescoping_terms(rng: &mut impl Rng) -> Vec<(Rational, ExponentVector)> {
    let rank = rng.gen_range(1..=6);
    let mut out = Vec::new();
    for _ in 0..rank {
        let e = random_exponent(rng);
        let a = random_rational(rng, 7, 4);
        let split = random_rational(rng, 5, 6);
        let rest = Rational::from(&a - &split);
        // Same exponent rebuilt from halves.
        let half = e.scale(&q(1, 2));
        let rebuilt = &half + &half;
        out.push((split, e.clone()));
        out.push((rest, rebuilt));
        out.push((-a, e));
    }
    out.shuffle(rng);
    out
}

/// Exponent over `{1, √2, √3}` drawn from small integer data.
pub fn arb_exponent() -> impl proptest::strategy::Strategy<Value = ExponentVector> {
    use proptest::prelude::*;
    (0..3u8, -6i64..=6, 1i64..=3, -2i64..=2).prop_map(|(kind, n, d, m)| {
        let s2 = BasisSymbol::sqrt(2).unwrap();
        let s3 = BasisSymbol::sqrt(3).unwrap();
        match kind {
            0 => ExponentVector::rational(q(n, d)),
            1 => ExponentVector::from_coords([(BasisSymbol::one(), q(n, d)), (s2, q(m, 2))]),
            _ => ExponentVector::single(s3, q(n, 2 * d)),
        }
    })
}

/// Raw term lists, possibly with repeated exponents and zero exponents.
pub fn arb_terms(
    max: usize,
) -> impl proptest::strategy::Strategy<Value = Vec<(Rational, ExponentVector)>> {
    use proptest::prelude::*;
    proptest::collection::vec(((-9i64..=9), (1i64..=4), arb_exponent()), 0..=max)
        .prop_map(|v| v.into_iter().map(|(n, d, e)| (q(n, d), e)).collect())
}

pub fn arb_expsum(max: usize) -> impl proptest::strategy::Strategy<Value = ExpSum> {
    use proptest::prelude::*;
    arb_terms(max).prop_map(ExpSum::normalize)
}

/// Nonzero sums without a constant term.
pub fn arb_exp_like(max: usize) -> impl proptest::strategy::Strategy<Value = ExpSum> {
    use proptest::prelude::*;
    arb_expsum(max).prop_filter("exponential-like", ExpSum::is_exponential_like)
}
