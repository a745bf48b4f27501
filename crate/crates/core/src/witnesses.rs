//! Witness functions with explicit constructions, plus a quarantined
//! heuristic stand-in.
//!
//! Piecewise witnesses are evaluated in exact rational arithmetic. The bump
//! and the Weierstrass-type series are transcendental and return enclosures.

use std::fmt;
use std::sync::Arc;

use rug::float::Round;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};
use serde_json::json;
use thiserror::Error;

use crate::expsum::ExpSum;
use crate::interval::{Interval, DEFAULT_PRECISION};
use crate::rootiso::DECIMAL_DIGITS;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WitnessError {
    #[error("{name}: argument {x} lies outside the domain {domain}")]
    Domain {
        name: String,
        x: String,
        domain: String,
    },
    #[error("could not separate enclosures at {0} bits")]
    PrecisionExhausted(u32),
    #[error("expected an exponential-like sum (nonempty, no constant term)")]
    NotExponentialLike,
    #[error("unknown witness `{0}` (known: db1, step, bump, identity, weierstrass)")]
    Unknown(String),
}

/// A function value: exact when the construction is piecewise rational.
#[derive(Clone, Debug)]
pub enum Value {
    Exact(Rational),
    Enclosure(Interval),
}

impl Value {
    pub fn enclosure(&self, prec: u32) -> Interval {
        match self {
            Value::Exact(q) => Interval::from_rational(q, prec),
            Value::Enclosure(i) => i.clone(),
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            Value::Exact(q) => Some(q),
            Value::Enclosure(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(q) => q.to_f64(),
            Value::Enclosure(i) => i.to_f64_mid(),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(q) => write!(f, "{q}"),
            Value::Enclosure(i) => write!(f, "{i}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exactness {
    Exact,
    Enclosure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Domain {
    Real,
    Closed { lo: Rational, hi: Rational },
}

impl Domain {
    pub fn unit() -> Self {
        Domain::Closed {
            lo: Rational::new(),
            hi: Rational::from(1),
        }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        match self {
            Domain::Real => true,
            Domain::Closed { lo, hi } => lo <= x && x <= hi,
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Real => f.write_str("R"),
            Domain::Closed { lo, hi } => write!(f, "[{lo}, {hi}]"),
        }
    }
}

/// A real function that can be evaluated at rational points.
pub trait RealFunction: Send + Sync {
    fn name(&self) -> &str;

    fn domain(&self) -> Domain;

    fn exactness(&self) -> Exactness;

    /// Mandatory caveat for stand-ins that are not explicit constructions.
    fn disclaimer(&self) -> Option<&str> {
        None
    }

    fn eval(&self, x: &Rational, prec: u32) -> Result<Value, WitnessError>;

    /// Window used for sampling when no explicit range is requested.
    fn sample_window(&self) -> (Rational, Rational) {
        match self.domain() {
            Domain::Closed { lo, hi } => (lo, hi),
            Domain::Real => (Rational::new(), Rational::from(1)),
        }
    }
}

pub type WitnessHandle = Arc<dyn RealFunction>;

/// Looks up a witness by its command-line name.
pub fn by_name(name: &str) -> Result<WitnessHandle, WitnessError> {
    Ok(match name {
        "db1" => Arc::new(Db1Witness),
        "step" => Arc::new(StepWitness),
        "bump" => Arc::new(BumpWitness),
        "identity" => Arc::new(Identity),
        "weierstrass" => Arc::new(HeuristicWitness::weierstrass()),
        other => return Err(WitnessError::Unknown(other.to_string())),
    })
}

pub const WITNESS_NAMES: [&str; 5] = ["db1", "step", "bump", "identity", "weierstrass"];

fn check_domain(f: &dyn RealFunction, x: &Rational) -> Result<(), WitnessError> {
    let domain = f.domain();
    if domain.contains(x) {
        Ok(())
    } else {
        Err(WitnessError::Domain {
            name: f.name().to_string(),
            x: x.to_string(),
            domain: domain.to_string(),
        })
    }
}

/// `x ↦ x` on ℝ.
#[derive(Clone, Copy, Debug, Default)]
pub struct Identity;

impl RealFunction for Identity {
    fn name(&self) -> &str {
        "identity"
    }

    fn domain(&self) -> Domain {
        Domain::Real
    }

    fn exactness(&self) -> Exactness {
        Exactness::Exact
    }

    fn eval(&self, x: &Rational, _prec: u32) -> Result<Value, WitnessError> {
        Ok(Value::Exact(x.clone()))
    }
}

/// Breakpoints of one block of the Darboux Baire-one witness.
///
/// Block `n` occupies `[a_{n+1}, a_n]` and descends as
/// `a_n > c_n > b_n > d_n > a_{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Db1Block {
    pub n: u64,
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    /// The plateau value on `[c, a]`.
    pub y: Rational,
}

/// Piecewise-linear Darboux function on `[0, 1]` whose level sets
/// `F⁻¹((k−1)/k)` have upper density at least 1/4 at the origin.
///
/// Plateau values follow the ruler sequence: block `n` takes
/// `(k−1)/k` with `k = ν₂(n) + 1`, so every value recurs infinitely often.
#[derive(Clone, Copy, Debug, Default)]
pub struct Db1Witness;

impl Db1Witness {
    /// `a_n = 4^{1−n}`.
    pub fn a(n: u64) -> Rational {
        assert!(n >= 1, "blocks are numbered from 1");
        Rational::from((Integer::from(1), Integer::from(1) << (2 * (n - 1)) as u32))
    }

    pub fn plateau(n: u64) -> Rational {
        let k = u64::from(n.trailing_zeros()) + 1;
        Rational::from((k - 1, k))
    }

    pub fn block(n: u64) -> Db1Block {
        let a = Self::a(n);
        let b = Rational::from(&a / 2u32);
        let a_next = Self::a(n + 1);
        let c = Rational::from(&a + &b) / 2u32;
        let d = Rational::from(&a_next + &b) / 2u32;
        Db1Block {
            n,
            a,
            b,
            c,
            d,
            y: Self::plateau(n),
        }
    }

    /// The block containing `x ∈ (0, 1]`, i.e. `a_{n+1} < x ≤ a_n`.
    pub fn locate(x: &Rational) -> Option<u64> {
        if *x <= 0 || *x > 1 {
            return None;
        }
        // log₄(1/x) from bit lengths, then exact correction.
        let bits =
            i64::from(x.denom().significant_bits()) - i64::from(x.numer().significant_bits());
        let mut n = (bits / 2).max(0) as u64 + 1;
        while *x <= Self::a(n + 1) {
            n += 1;
        }
        while n > 1 && *x > Self::a(n) {
            n -= 1;
        }
        Some(n)
    }

    pub fn eval_exact(x: &Rational) -> Option<Rational> {
        if *x == 0 {
            return Some(Rational::new());
        }
        let n = Self::locate(x)?;
        let blk = Self::block(n);
        Some(if *x >= blk.c {
            blk.y
        } else if *x > blk.b {
            blk.y * Rational::from(x - &blk.b) / Rational::from(&blk.c - &blk.b)
        } else if *x >= blk.d {
            Rational::new()
        } else {
            let a_next = Self::a(n + 1);
            Self::plateau(n + 1) * Rational::from(x - &blk.d) / (a_next - &blk.d)
        })
    }
}

impl RealFunction for Db1Witness {
    fn name(&self) -> &str {
        "db1"
    }

    fn domain(&self) -> Domain {
        Domain::unit()
    }

    fn exactness(&self) -> Exactness {
        Exactness::Exact
    }

    fn eval(&self, x: &Rational, _prec: u32) -> Result<Value, WitnessError> {
        check_domain(self, x)?;
        Ok(Value::Exact(
            Self::eval_exact(x).expect("x checked in [0, 1]"),
        ))
    }
}

/// Exact upper density ratio `|F⁻¹((k−1)/k) ∩ [0, a_n]| / a_n`, maximized
/// over blocks `n ≤ n_max` whose plateau is `(k−1)/k`.
///
/// Every block of `[a_{j+1}, a_j]` scales with `a_j = 4^{n−j} a_n`, so the
/// infinite sum over `j ≥ n` is a periodic pattern (period `2^k`) under a
/// geometric weight and has a closed form. All qualifying `n` share the
/// same residue modulo `2^k` and hence the same ratio.
///
/// Returns `None` when `k = 0` or no block up to `n_max` has that plateau.
pub fn db1_upper_density(k: u32, n_max: u64) -> Option<Rational> {
    if k == 0 || k > 40 {
        return None;
    }
    let first = 1u64 << (k - 1);
    if first > n_max {
        return None;
    }
    let target = Rational::from((k - 1, k));
    let period = 1u64 << k;
    let plateau_is = |j: u64, v: &Rational| Db1Witness::plateau(j) == *v;
    let zero = Rational::new();
    let eighth = Rational::from((1, 8));
    let quarter = Rational::from((1, 4));
    // Fraction of block j (relative to a_j) where F equals the target.
    let share = |j: u64| -> Rational {
        let mut s = Rational::new();
        if plateau_is(j, &target) {
            s += &quarter;
        }
        if target == 0 {
            s += &eighth;
            if plateau_is(j, &zero) {
                s += &quarter;
            }
            if plateau_is(j + 1, &zero) {
                s += &eighth;
            }
        }
        s
    };
    let mut weight = Rational::from(1);
    let mut partial = Rational::new();
    for i in 0..period {
        partial += &weight * share(first + i);
        weight /= 4u32;
    }
    // Σ_{i≥0} = partial / (1 − 4^{−period})
    Some(partial / (Rational::from(1) - weight))
}

/// `F(0) = 0`, `F(x) = 1/n` on `(2^{−n}, 2^{1−n}]`.
#[derive(Clone, Copy, Debug, Default)]
pub struct StepWitness;

impl StepWitness {
    /// The step index `n` with `2^{−n} < x ≤ 2^{1−n}`, for `x ∈ (0, 1]`.
    pub fn step_index(x: &Rational) -> Option<u64> {
        if *x <= 0 || *x > 1 {
            return None;
        }
        let bits =
            i64::from(x.denom().significant_bits()) - i64::from(x.numer().significant_bits());
        let mut n = bits.max(0) as u64 + 1;
        let pow = |e: u64| Rational::from((Integer::from(1), Integer::from(1) << e as u32));
        while *x <= pow(n) {
            n += 1;
        }
        while n > 1 && *x > pow(n - 1) {
            n -= 1;
        }
        Some(n)
    }

    pub fn eval_exact(x: &Rational) -> Option<Rational> {
        if *x == 0 {
            return Some(Rational::new());
        }
        Self::step_index(x).map(|n| Rational::from((1, n)))
    }
}

impl RealFunction for StepWitness {
    fn name(&self) -> &str {
        "step"
    }

    fn domain(&self) -> Domain {
        Domain::unit()
    }

    fn exactness(&self) -> Exactness {
        Exactness::Exact
    }

    fn eval(&self, x: &Rational, _prec: u32) -> Result<Value, WitnessError> {
        check_domain(self, x)?;
        Ok(Value::Exact(
            Self::eval_exact(x).expect("x checked in [0, 1]"),
        ))
    }
}

/// The smooth bump `exp(−1/(1−x²))` on `|x| < 1`, zero elsewhere.
#[derive(Clone, Copy, Debug, Default)]
pub struct BumpWitness;

impl RealFunction for BumpWitness {
    fn name(&self) -> &str {
        "bump"
    }

    fn domain(&self) -> Domain {
        Domain::Real
    }

    fn exactness(&self) -> Exactness {
        Exactness::Enclosure
    }

    fn eval(&self, x: &Rational, prec: u32) -> Result<Value, WitnessError> {
        let gap = Rational::from(1) - Rational::from(x * x);
        if gap <= 0 {
            return Ok(Value::Exact(Rational::new()));
        }
        let arg = -gap.recip();
        Ok(Value::Enclosure(Interval::from_rational(&arg, prec).exp()))
    }

    fn sample_window(&self) -> (Rational, Rational) {
        (Rational::from(-1), Rational::from(1))
    }
}

pub const HEURISTIC_DISCLAIMER: &str =
    "heuristic stand-in; existence result cited, construction not from the source literature";

type Evaluator = Box<dyn Fn(&Rational, u32) -> Interval + Send + Sync>;

/// A stress-test function standing in for a witness that is only cited,
/// never constructed. Every report that mentions it carries the disclaimer.
pub struct HeuristicWitness {
    name: String,
    evaluator: Evaluator,
}

impl HeuristicWitness {
    pub fn new(
        name: &str,
        evaluator: impl Fn(&Rational, u32) -> Interval + Send + Sync + 'static,
    ) -> Self {
        HeuristicWitness {
            name: name.to_string(),
            evaluator: Box::new(evaluator),
        }
    }

    /// `Σ 2^{−n} cos(3^n π x)`, nowhere differentiable since `ab = 3/2 ≥ 1`.
    pub fn weierstrass() -> Self {
        Self::new("weierstrass", |x, prec| {
            weierstrass(x, prec, WEIERSTRASS_TERMS)
        })
    }
}

impl fmt::Debug for HeuristicWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HeuristicWitness")
            .field("name", &self.name)
            .finish_non_exhaustive()
    }
}

impl RealFunction for HeuristicWitness {
    fn name(&self) -> &str {
        &self.name
    }

    fn domain(&self) -> Domain {
        Domain::Real
    }

    fn exactness(&self) -> Exactness {
        Exactness::Enclosure
    }

    fn disclaimer(&self) -> Option<&str> {
        Some(HEURISTIC_DISCLAIMER)
    }

    fn eval(&self, x: &Rational, prec: u32) -> Result<Value, WitnessError> {
        Ok(Value::Enclosure((self.evaluator)(x, prec)))
    }
}

const WEIERSTRASS_TERMS: u32 = 48;

/// Truncated series with a rigorous radius for the tail and for rounding.
fn weierstrass(x: &Rational, prec: u32, terms: u32) -> Interval {
    // 3^n costs < 2n bits of argument reduction.
    let work = prec + 2 * terms + 32;
    let pi = Float::with_val(work, rug::float::Constant::Pi);
    let xf = Float::with_val(work, x);
    let mut sum = Float::with_val(work, 0);
    let mut three_pow = Integer::from(1);
    for n in 0..terms {
        let arg = Float::with_val(work, &pi * &xf) * &three_pow;
        let term = arg.cos() >> n;
        sum += term;
        three_pow *= 3;
    }
    // Tail Σ_{n≥N} 2^{−n} = 2^{1−N}; rounding error ≤ 2^{8−work}·3^N·(|x|+1).
    let xabs = x.to_f64().abs() + 1.0;
    let rounding = Float::with_val_round(64, xabs, Round::Up).0 * &three_pow;
    let rounding = Float::with_val_round(prec, rounding >> (work - 8), Round::Up).0;
    let tail = Float::with_val(prec, Float::i_exp(1, 1 - terms as i32));
    let radius = Float::with_val_round(prec, &tail + &rounding, Round::Up).0;
    let lo = Float::with_val_round(prec, &sum - &radius, Round::Down).0;
    let hi = Float::with_val_round(prec, &sum + &radius, Round::Up).0;
    Interval::new(lo, hi)
}

/// Finite ternary sums `Σ d_i 3^{−i}`, `d_i ∈ {0, 2}`, listed level by level.
///
/// Level `L ≥ 1` lists the `2^L` sums of length `L` in increasing order and
/// starts at index `2^L − 2`. The limit points of the sequence form the
/// middle-thirds Cantor set.
#[derive(Clone, Copy, Debug, Default)]
pub struct CantorSequence;

impl CantorSequence {
    pub fn level_start(level: u32) -> u64 {
        (1u64 << level) - 2
    }

    /// Number of terms in levels `1..=level`.
    pub fn len_through_level(level: u32) -> u64 {
        (1u64 << (level + 1)) - 2
    }

    pub fn level_of(index: u64) -> u32 {
        // Largest L with 2^L − 2 ≤ index.
        63 - (index + 2).leading_zeros()
    }

    /// Term with 0-based `index`.
    pub fn term(index: u64) -> Rational {
        let level = Self::level_of(index);
        let offset = index - Self::level_start(level);
        Self::digits_value(offset, level)
    }

    /// Bits of `offset`, most significant first, read as ternary digits 0/2.
    fn digits_value(offset: u64, level: u32) -> Rational {
        let mut num = Integer::new();
        for i in (0..level).rev() {
            num *= 3;
            if offset >> i & 1 == 1 {
                num += 2;
            }
        }
        Rational::from((num, Integer::from(3).pow(level)))
    }

    pub fn prefix(len: u64) -> Vec<Rational> {
        (0..len).map(Self::term).collect()
    }

    /// Left endpoints of the `2^level` intervals of the level-`level`
    /// middle-thirds construction, ascending.
    pub fn level_endpoints(level: u32) -> Vec<Rational> {
        (0..1u64 << level)
            .map(|i| Self::digits_value(i, level))
            .collect()
    }
}

pub fn cantor_seq(index: u64) -> Rational {
    CantorSequence::term(index)
}

/// Certified evidence that `f ∘ StepWitness` takes at least two values on
/// `(2^{−(m+1)}, 1]` where `m = rank(f)`.
#[derive(Clone, Debug)]
pub struct DarbouxEvidence {
    pub rank: usize,
    /// `(n, enclosure of f(1/n))` for `n = 1..=m+1`.
    pub values: Vec<(u64, Interval)>,
    /// Size of a pairwise-disjoint subfamily of the enclosures.
    pub certified_distinct: usize,
    pub precision: u32,
}

impl DarbouxEvidence {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "rank": self.rank,
            "precision_bits": self.precision,
            "certified_distinct": self.certified_distinct,
            "values": self.values.iter().map(|(n, v)| {
                let (lo, hi) = v.to_decimal_strings(DECIMAL_DIGITS);
                json!({ "n": n, "x": format!("1/{n}"), "lo": lo, "hi": hi })
            }).collect::<Vec<_>>(),
        })
    }
}

pub fn darboux_violation(f: &ExpSum) -> Result<DarbouxEvidence, WitnessError> {
    if !f.is_exponential_like() {
        return Err(WitnessError::NotExponentialLike);
    }
    let m = f.rank();
    let mut prec = DEFAULT_PRECISION;
    while prec <= 4096 {
        let values: Vec<(u64, Interval)> = (1..=m as u64 + 1)
            .map(|n| (n, f.evaluate_rational(&Rational::from((1, n)), prec)))
            .collect();
        let distinct = disjoint_count(values.iter().map(|(_, v)| v));
        if distinct >= 2 {
            return Ok(DarbouxEvidence {
                rank: m,
                values,
                certified_distinct: distinct,
                precision: prec,
            });
        }
        prec *= 2;
    }
    Err(WitnessError::PrecisionExhausted(prec / 2))
}

/// Greedy maximum pairwise-disjoint subfamily size (interval scheduling).
pub(crate) fn disjoint_count<'a>(intervals: impl Iterator<Item = &'a Interval>) -> usize {
    let mut sorted: Vec<&Interval> = intervals.collect();
    sorted.sort_by(|a, b| a.hi().partial_cmp(b.hi()).unwrap());
    let mut count = 0;
    let mut last_hi: Option<&Float> = None;
    for i in sorted {
        if last_hi.is_none_or(|h| i.lo() > h) {
            count += 1;
            last_hi = Some(i.hi());
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expsum::ExponentVector;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn db1_blocks_descend() {
        for n in 1..=50 {
            let b = Db1Witness::block(n);
            let next = Db1Witness::a(n + 1);
            assert!(
                next < b.d && b.d < b.b && b.b < b.c && b.c < b.a,
                "block {n}"
            );
            assert_eq!(Rational::from(&b.a - &b.c), Rational::from(&b.a / 4u32));
        }
        let b1 = Db1Witness::block(1);
        assert_eq!(
            (b1.a, b1.b, b1.c, b1.d),
            (q(1, 1), q(1, 2), q(3, 4), q(3, 8))
        );
    }

    #[test]
    fn db1_examples() {
        let f = Db1Witness;
        assert_eq!(f.eval(&q(0, 1), 64).unwrap().as_exact().unwrap(), &q(0, 1));
        assert_eq!(f.eval(&q(4, 5), 64).unwrap().as_exact().unwrap(), &q(0, 1));
        assert_eq!(f.eval(&q(7, 16), 64).unwrap().as_exact().unwrap(), &q(0, 1));
        // Block 2 plateau is 1/2 on [3/16, 1/4].
        assert_eq!(Db1Witness::eval_exact(&q(7, 32)).unwrap(), q(1, 2));
        // Linear rise on (b_2, c_2) = (1/8, 3/16): midpoint gives half the plateau.
        assert_eq!(Db1Witness::eval_exact(&q(5, 32)).unwrap(), q(1, 4));
        // Linear descent on (a_2, d_1) = (1/4, 3/8) from y_2 = 1/2.
        assert_eq!(Db1Witness::eval_exact(&q(5, 16)).unwrap(), q(1, 4));
        assert!(matches!(
            f.eval(&q(3, 2), 64),
            Err(WitnessError::Domain { .. })
        ));
    }

    #[test]
    fn db1_plateaus_follow_ruler_sequence() {
        let ys: Vec<Rational> = (1..=8).map(Db1Witness::plateau).collect();
        let expected = [
            q(0, 1),
            q(1, 2),
            q(0, 1),
            q(2, 3),
            q(0, 1),
            q(1, 2),
            q(0, 1),
            q(3, 4),
        ];
        assert_eq!(ys, expected);
    }

    #[test]
    fn db1_locate_tiny_arguments() {
        let x = Rational::from((Integer::from(3), Integer::from(1) << 301u32));
        let n = Db1Witness::locate(&x).unwrap();
        assert!(Db1Witness::a(n + 1) < x && x <= Db1Witness::a(n));
    }

    #[test]
    fn density_closed_forms() {
        assert_eq!(db1_upper_density(1, 20), Some(q(11, 15)));
        assert_eq!(db1_upper_density(2, 20), Some(q(64, 255)));
        assert_eq!(db1_upper_density(6, 20), None);
        assert_eq!(db1_upper_density(0, 20), None);
    }

    #[test]
    fn step_examples() {
        let f = StepWitness;
        assert_eq!(f.eval(&q(3, 5), 64).unwrap().as_exact().unwrap(), &q(1, 1));
        assert_eq!(f.eval(&q(3, 10), 64).unwrap().as_exact().unwrap(), &q(1, 2));
        assert_eq!(f.eval(&q(1, 2), 64).unwrap().as_exact().unwrap(), &q(1, 2));
        assert_eq!(f.eval(&q(0, 1), 64).unwrap().as_exact().unwrap(), &q(0, 1));
        assert_eq!(StepWitness::eval_exact(&q(1, 1024)).unwrap(), q(1, 11));
        assert_eq!(StepWitness::eval_exact(&q(1, 1023)).unwrap(), q(1, 10));
        assert_eq!(StepWitness::eval_exact(&q(1, 1025)).unwrap(), q(1, 11));
    }

    #[test]
    fn bump_values() {
        let f = BumpWitness;
        let v = f.eval(&q(0, 1), 128).unwrap().enclosure(128);
        assert!(v.contains(&Float::with_val(128, -1).exp()));
        assert!((v.to_f64_mid() - 0.367879441171442).abs() < 1e-14);
        assert_eq!(f.eval(&q(1, 1), 128).unwrap().as_exact().unwrap(), &q(0, 1));
        assert_eq!(
            f.eval(&q(-3, 1), 128).unwrap().as_exact().unwrap(),
            &q(0, 1)
        );
    }

    #[test]
    fn cantor_prefix() {
        let first: Vec<Rational> = CantorSequence::prefix(6);
        assert_eq!(
            first,
            vec![q(0, 1), q(2, 3), q(0, 1), q(2, 9), q(2, 3), q(8, 9)]
        );
        assert_eq!(CantorSequence::level_of(5), 2);
        assert_eq!(CantorSequence::level_of(6), 3);
        assert_eq!(CantorSequence::len_through_level(8), 510);
        assert_eq!(
            CantorSequence::level_endpoints(2),
            vec![q(0, 1), q(2, 9), q(2, 3), q(8, 9)]
        );
    }

    #[test]
    fn weierstrass_is_enclosed_and_disclaimed() {
        let w = HeuristicWitness::weierstrass();
        assert_eq!(w.disclaimer(), Some(HEURISTIC_DISCLAIMER));
        // W(0) = Σ 2^{−n} = 2.
        let v = w.eval(&q(0, 1), 128).unwrap().enclosure(128);
        assert!(v.contains(&Float::with_val(128, 2)));
        assert!(v.width() < 1e-13);
        // W(1) = Σ 2^{−n} (−1)^{3^n} = −2.
        let v = w.eval(&q(1, 1), 128).unwrap().enclosure(128);
        assert!(v.contains(&Float::with_val(128, -2)));
    }

    #[test]
    fn darboux_examples() {
        let e = ExpSum::exp_term(1, ExponentVector::rational(1));
        let ev = darboux_violation(&e).unwrap();
        assert_eq!(ev.values.len(), 2);
        assert_eq!(ev.certified_distinct, 2);
        let f = ExpSum::normalize([
            (q(1, 1), ExponentVector::rational(2)),
            (q(-2, 1), ExponentVector::rational(1)),
        ]);
        assert!(darboux_violation(&f).unwrap().certified_distinct >= 2);
        let g = &f + &ExpSum::constant(1);
        assert_eq!(
            darboux_violation(&g).unwrap_err(),
            WitnessError::NotExponentialLike
        );
    }

    #[test]
    fn registry() {
        for name in WITNESS_NAMES {
            assert_eq!(by_name(name).unwrap().name(), name);
        }
        assert!(matches!(by_name("nope"), Err(WitnessError::Unknown(_))));
    }
}
