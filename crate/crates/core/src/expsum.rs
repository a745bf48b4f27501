//! Exact exponential sums `Σ aᵢ·exp(βᵢ·t)`.
//!
//! Coefficients are exact rationals and every exponent `βᵢ` is an exact
//! rational combination of basis symbols. Because the basis is assumed
//! linearly independent over ℚ, two exponent vectors denote the same real
//! number iff they are equal coordinate-wise, so the normalized term list is
//! a canonical form: an `ExpSum` is the zero function iff it has no terms.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::{Float, Rational};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::basis::{Basis, BasisError, BasisSymbol};
use crate::interval::Interval;

#[derive(Debug, Error)]
pub enum ExpSumError {
    #[error("exact derivative needs exponents in the span of a single basis symbol; found {0}")]
    UnsupportedExactDerivative(String),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid rational `{0}`")]
    BadRational(String),
    #[error("zero coefficient in serialized term")]
    ZeroCoefficient,
    #[error(transparent)]
    Basis(#[from] BasisError),
}

/// Exact rational coordinates over basis symbols; absent symbols are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExponentVector {
    coords: BTreeMap<BasisSymbol, Rational>,
}

impl ExponentVector {
    pub fn zero() -> Self {
        ExponentVector::default()
    }

    /// `q · sym`.
    pub fn single(sym: BasisSymbol, q: impl Into<Rational>) -> Self {
        ExponentVector::from_coords([(sym, q.into())])
    }

    /// The rational `q` as a multiple of `ONE`.
    pub fn rational(q: impl Into<Rational>) -> Self {
        ExponentVector::single(BasisSymbol::one(), q)
    }

    /// Sums repeated symbols and drops zero coordinates.
    pub fn from_coords(coords: impl IntoIterator<Item = (BasisSymbol, Rational)>) -> Self {
        let mut map: BTreeMap<BasisSymbol, Rational> = BTreeMap::new();
        for (sym, q) in coords {
            *map.entry(sym).or_default() += q;
        }
        map.retain(|_, q| *q != 0);
        ExponentVector { coords: map }
    }

    pub fn coord(&self, sym: &BasisSymbol) -> Rational {
        self.coords.get(sym).cloned().unwrap_or_default()
    }

    pub fn coords(&self) -> impl Iterator<Item = (&BasisSymbol, &Rational)> {
        self.coords.iter()
    }

    pub fn symbols(&self) -> impl Iterator<Item = &BasisSymbol> {
        self.coords.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// The unique symbol with a nonzero coordinate, if exactly one exists.
    pub fn single_symbol(&self) -> Option<(&BasisSymbol, &Rational)> {
        if self.coords.len() == 1 {
            self.coords.iter().next()
        } else {
            None
        }
    }

    pub fn scale(&self, q: &Rational) -> ExponentVector {
        if *q == 0 {
            return ExponentVector::zero();
        }
        ExponentVector {
            coords: self
                .coords
                .iter()
                .map(|(s, c)| (s.clone(), Rational::from(c * q)))
                .collect(),
        }
    }

    /// Enclosure of `Σ qᵢ·value(bᵢ)` at `prec` bits.
    pub fn enclosure(&self, prec: u32) -> Interval {
        let mut acc = Interval::zero(prec);
        for (sym, q) in &self.coords {
            let term = if sym.is_one() {
                Interval::from_rational(q, prec)
            } else {
                sym.enclosure(prec).mul_rational(q)
            };
            acc = &acc + &term;
        }
        acc
    }
}

impl Ord for ExponentVector {
    /// Lexicographic on coordinate vectors under the basis order.
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.coords.iter().peekable();
        let mut b = other.coords.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some((_, qa)), None) => return qa.cmp0(),
                (None, Some((_, qb))) => return qb.cmp0().reverse(),
                (Some((sa, qa)), Some((sb, qb))) => match sa.cmp(sb) {
                    Ordering::Less => return qa.cmp0(),
                    Ordering::Greater => return qb.cmp0().reverse(),
                    Ordering::Equal => {
                        let c = qa.cmp(qb);
                        if c != Ordering::Equal {
                            return c;
                        }
                        a.next();
                        b.next();
                    }
                },
            }
        }
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add<&ExponentVector> for &ExponentVector {
    type Output = ExponentVector;

    fn add(self, rhs: &ExponentVector) -> ExponentVector {
        ExponentVector::from_coords(
            self.coords
                .iter()
                .chain(rhs.coords.iter())
                .map(|(s, q)| (s.clone(), q.clone())),
        )
    }
}

impl Sub<&ExponentVector> for &ExponentVector {
    type Output = ExponentVector;

    fn sub(self, rhs: &ExponentVector) -> ExponentVector {
        self + &(-rhs)
    }
}

impl Neg for &ExponentVector {
    type Output = ExponentVector;

    fn neg(self) -> ExponentVector {
        ExponentVector {
            coords: self
                .coords
                .iter()
                .map(|(s, q)| (s.clone(), Rational::from(-q)))
                .collect(),
        }
    }
}

impl fmt::Display for ExponentVector {
    /// Linear-combination text: `3/2 + sqrt2 - 2*sqrt3`; `0` for the zero vector.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (sym, q)) in self.coords.iter().enumerate() {
            let neg = *q < 0;
            let abs = Rational::from(q.abs_ref());
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if sym.is_one() {
                write!(f, "{abs}")?;
            } else if abs == 1 {
                f.write_str(&sym.text_name())?;
            } else {
                write!(f, "{abs}*{}", sym.text_name())?;
            }
        }
        Ok(())
    }
}

/// One term `coeff · exp(exponent · t)`; the coefficient is never zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Rational,
    pub exponent: ExponentVector,
}

/// A normalized exponential sum.
///
/// Terms have pairwise distinct exponents, nonzero coefficients and are
/// sorted ascending by exponent. Construct through [`ExpSum::normalize`] or
/// the arithmetic operators; both preserve the invariant.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExpSum {
    terms: Vec<Term>,
}

impl ExpSum {
    pub fn zero() -> Self {
        ExpSum::default()
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        ExpSum::normalize([(c.into(), ExponentVector::zero())])
    }

    /// `coeff · exp(exponent · t)`.
    pub fn exp_term(coeff: impl Into<Rational>, exponent: ExponentVector) -> Self {
        ExpSum::normalize([(coeff.into(), exponent)])
    }

    /// Collects like exponents, drops zero coefficients and sorts.
    pub fn normalize(raw: impl IntoIterator<Item = (Rational, ExponentVector)>) -> Self {
        let mut acc: BTreeMap<ExponentVector, Rational> = BTreeMap::new();
        for (c, e) in raw {
            *acc.entry(e).or_default() += c;
        }
        ExpSum {
            terms: acc
                .into_iter()
                .filter(|(_, c)| *c != 0)
                .map(|(exponent, coeff)| Term { coeff, exponent })
                .collect(),
        }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Number of terms (constant term included).
    pub fn rank(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn has_constant_term(&self) -> bool {
        self.terms.iter().any(|t| t.exponent.is_zero())
    }

    /// Nonempty with every exponent nonzero.
    pub fn is_exponential_like(&self) -> bool {
        !self.is_zero() && !self.has_constant_term()
    }

    /// `Some(rank)` for exponential-like sums, `None` otherwise.
    pub fn exponential_like_rank(&self) -> Option<usize> {
        self.is_exponential_like().then_some(self.rank())
    }

    pub fn scale(&self, c: &Rational) -> ExpSum {
        if *c == 0 {
            return ExpSum::zero();
        }
        ExpSum {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: Rational::from(&t.coeff * c),
                    exponent: t.exponent.clone(),
                })
                .collect(),
        }
    }

    /// `exp(shift · t) · self`.
    pub fn shift(&self, shift: &ExponentVector) -> ExpSum {
        ExpSum {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.clone(),
                    exponent: &t.exponent + shift,
                })
                .collect(),
        }
    }

    /// `t ↦ self(k·t)`.
    pub fn dilate(&self, k: &Rational) -> ExpSum {
        ExpSum::normalize(
            self.terms
                .iter()
                .map(|t| (t.coeff.clone(), t.exponent.scale(k))),
        )
    }

    pub fn pow(&self, n: u32) -> ExpSum {
        let mut acc = ExpSum::constant(1);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact derivative, restricted to exponents spanned by one basis symbol.
    ///
    /// The result is `factor · sum`; `factor` is `ONE` when all exponents are
    /// rational. Exponents spanning two or more symbols would leave the
    /// rational coefficient ring, so they are rejected.
    pub fn derivative(&self) -> Result<ExactDerivative, ExpSumError> {
        let mut factor: Option<BasisSymbol> = None;
        let mut raw = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.exponent.is_zero() {
                continue;
            }
            let Some((sym, q)) = t.exponent.single_symbol() else {
                return Err(ExpSumError::UnsupportedExactDerivative(
                    t.exponent.to_string(),
                ));
            };
            match &factor {
                Some(s) if s != sym => {
                    return Err(ExpSumError::UnsupportedExactDerivative(format!(
                        "{} and {}",
                        s.text_name(),
                        sym.text_name()
                    )))
                }
                _ => factor = Some(sym.clone()),
            }
            raw.push((Rational::from(&t.coeff * q), t.exponent.clone()));
        }
        Ok(ExactDerivative {
            factor: factor.unwrap_or_else(BasisSymbol::one),
            sum: ExpSum::normalize(raw),
        })
    }

    /// Rigorous enclosure of the sum over every point of `x`.
    pub fn evaluate(&self, x: &Interval, prec: u32) -> Interval {
        let x = x.with_prec(prec);
        let mut acc = Interval::zero(prec);
        for t in &self.terms {
            let e = if t.exponent.is_zero() {
                Interval::one(prec)
            } else {
                (&t.exponent.enclosure(prec) * &x).exp()
            };
            acc = &acc + &e.mul_rational(&t.coeff);
        }
        acc
    }

    pub fn evaluate_rational(&self, x: &Rational, prec: u32) -> Interval {
        self.evaluate(&Interval::from_rational(x, prec), prec)
    }

    pub fn evaluate_float(&self, x: &Float, prec: u32) -> Interval {
        self.evaluate(&Interval::point(x.clone()), prec)
    }

    /// Double-precision evaluation, for sampling and plotting only.
    pub fn evaluate_f64(&self, x: f64) -> f64 {
        self.terms
            .iter()
            .map(|t| t.coeff.to_f64() * (t.exponent.enclosure(64).to_f64_mid() * x).exp())
            .sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ExpSumJson::from(self)).expect("serializable")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(ExpSumJson::from(self)).expect("serializable")
    }

    pub fn from_json(text: &str, basis: &Basis) -> Result<ExpSum, ExpSumError> {
        let raw: ExpSumJson = serde_json::from_str(text)?;
        raw.into_expsum(basis)
    }
}

/// `factor · sum`, the exact derivative of an exponential sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactDerivative {
    pub factor: BasisSymbol,
    pub sum: ExpSum,
}

impl ExactDerivative {
    pub fn evaluate(&self, x: &Interval, prec: u32) -> Interval {
        &self.factor.enclosure(prec) * &self.sum.evaluate(x, prec)
    }
}

impl Add<&ExpSum> for &ExpSum {
    type Output = ExpSum;

    fn add(self, rhs: &ExpSum) -> ExpSum {
        ExpSum::normalize(
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|t| (t.coeff.clone(), t.exponent.clone())),
        )
    }
}

impl Sub<&ExpSum> for &ExpSum {
    type Output = ExpSum;

    fn sub(self, rhs: &ExpSum) -> ExpSum {
        self + &(-rhs)
    }
}

impl Mul<&ExpSum> for &ExpSum {
    type Output = ExpSum;

    fn mul(self, rhs: &ExpSum) -> ExpSum {
        let mut raw = Vec::with_capacity(self.rank() * rhs.rank());
        for a in &self.terms {
            for b in &rhs.terms {
                raw.push((
                    Rational::from(&a.coeff * &b.coeff),
                    &a.exponent + &b.exponent,
                ));
            }
        }
        ExpSum::normalize(raw)
    }
}

impl Neg for &ExpSum {
    type Output = ExpSum;

    fn neg(self) -> ExpSum {
        self.scale(&Rational::from(-1))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<ExpSum> for ExpSum {
            type Output = ExpSum;
            fn $m(self, rhs: ExpSum) -> ExpSum { (&self).$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for ExpSum {
    /// Canonical text form, e.g. `2*exp(1*t) - 1/2*exp((1 + sqrt2)*t)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff < 0;
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let abs = Rational::from(t.coeff.abs_ref());
            write!(f, "{abs}*exp(")?;
            let simple = match t.exponent.single_symbol() {
                None => t.exponent.is_zero(),
                Some((sym, q)) => {
                    (sym.is_one() && *q >= 0 && q.denom() == &1) || (!sym.is_one() && *q == 1)
                }
            };
            if simple {
                write!(f, "{}*t)", t.exponent)?;
            } else {
                write!(f, "({})*t)", t.exponent)?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    exp: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
struct ExpSumJson {
    terms: Vec<TermJson>,
}

pub(crate) fn rational_to_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational, ExpSumError> {
    let s = s.trim();
    let bad = || ExpSumError::BadRational(s.to_string());
    if s.is_empty() || s.contains(char::is_whitespace) {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: rug::Integer = n.parse().map_err(|_| bad())?;
        let d: rug::Integer = d.parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        Ok(Rational::from((n, d)))
    } else {
        let n: rug::Integer = s.parse().map_err(|_| bad())?;
        Ok(Rational::from(n))
    }
}

impl From<&ExpSum> for ExpSumJson {
    fn from(f: &ExpSum) -> Self {
        ExpSumJson {
            terms: f
                .terms
                .iter()
                .map(|t| TermJson {
                    coeff: rational_to_string(&t.coeff),
                    exp: t
                        .exponent
                        .coords()
                        .map(|(s, q)| (s.name().to_string(), rational_to_string(q)))
                        .collect(),
                })
                .collect(),
        }
    }
}

impl ExpSumJson {
    fn into_expsum(self, basis: &Basis) -> Result<ExpSum, ExpSumError> {
        let mut raw = Vec::with_capacity(self.terms.len());
        for t in self.terms {
            let coeff = parse_rational(&t.coeff)?;
            if coeff == 0 {
                return Err(ExpSumError::ZeroCoefficient);
            }
            let mut coords = Vec::with_capacity(t.exp.len());
            for (name, q) in t.exp {
                coords.push((basis.resolve(&name)?, parse_rational(&q)?));
            }
            raw.push((coeff, ExponentVector::from_coords(coords)));
        }
        Ok(ExpSum::normalize(raw))
    }
}
