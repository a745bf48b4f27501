//! Polynomials without constant term evaluated at exponentials of
//! independent reals.
//!
//! Substituting `u_j = exp(r_j t)` into a monomial `a · Π u_j^{k_j}` gives
//! the single exponential `a · exp((Σ k_j r_j) t)`. Distinct nonzero
//! multi-indices over ℚ-independent `r_j` give distinct nonzero exponents, so
//! the substituted polynomial is an exponential-like sum with exactly one
//! term per monomial and cannot vanish identically.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rug::{Integer, Rational};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::basis::BasisSymbol;
use crate::expsum::{parse_rational, rational_to_string, ExpSum, ExponentVector};
use crate::interval::Interval;
use crate::witnesses::{Domain, Exactness, RealFunction, Value, WitnessError, WitnessHandle};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FreeAlgError {
    #[error("a polynomial needs at least one variable")]
    NoVariables,
    #[error("the zero polynomial is not allowed")]
    ZeroPolynomial,
    #[error("zero coefficient in monomial {0:?}")]
    ZeroCoefficient(Vec<u32>),
    #[error("constant term: every multi-index must be nonzero")]
    ConstantTerm,
    #[error("multi-index {found:?} has {} entries, expected {expected}", found.len())]
    ArityMismatch { expected: usize, found: Vec<u32> },
    #[error("multi-index {0:?} appears more than once (use simplify to merge)")]
    DuplicateMultiIndex(Vec<u32>),
    #[error("polynomial has {vars} variables but {gens} generators were given")]
    DimensionMismatch { vars: usize, gens: usize },
    #[error("generators {0} and {1} are equal")]
    DuplicateGenerator(usize, usize),
    #[error("generators are linearly dependent over the rationals (witness {witness:?})")]
    NotIndependent { witness: Vec<String> },
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}

/// One monomial `coeff · x1^k1 · … · xn^kn`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: Rational,
    pub powers: Vec<u32>,
}

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.powers.iter().sum()
    }
}

/// Multivariate polynomial with rational coefficients and no constant term.
///
/// Monomials are kept sorted by multi-index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialNC {
    n_vars: usize,
    terms: Vec<Monomial>,
}

impl PolynomialNC {
    /// Rejects zero coefficients, constant terms and repeated multi-indices.
    pub fn new(
        n_vars: usize,
        terms: impl IntoIterator<Item = (Rational, Vec<u32>)>,
    ) -> Result<Self, FreeAlgError> {
        let mut seen = BTreeMap::new();
        for (coeff, powers) in terms {
            check_monomial(n_vars, &coeff, &powers)?;
            if seen.contains_key(&powers) {
                return Err(FreeAlgError::DuplicateMultiIndex(powers));
            }
            seen.insert(powers, coeff);
        }
        Self::from_map(n_vars, seen)
    }

    /// Like [`PolynomialNC::new`], but merges repeated multi-indices.
    pub fn simplify(
        n_vars: usize,
        terms: impl IntoIterator<Item = (Rational, Vec<u32>)>,
    ) -> Result<Self, FreeAlgError> {
        if n_vars == 0 {
            return Err(FreeAlgError::NoVariables);
        }
        let mut merged: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (coeff, powers) in terms {
            if powers.len() != n_vars {
                return Err(FreeAlgError::ArityMismatch {
                    expected: n_vars,
                    found: powers,
                });
            }
            if coeff == 0 {
                continue;
            }
            if powers.iter().all(|&k| k == 0) {
                return Err(FreeAlgError::ConstantTerm);
            }
            *merged.entry(powers).or_default() += coeff;
        }
        merged.retain(|_, c| *c != 0);
        Self::from_map(n_vars, merged)
    }

    fn from_map(n_vars: usize, map: BTreeMap<Vec<u32>, Rational>) -> Result<Self, FreeAlgError> {
        if n_vars == 0 {
            return Err(FreeAlgError::NoVariables);
        }
        if map.is_empty() {
            return Err(FreeAlgError::ZeroPolynomial);
        }
        let terms = map
            .into_iter()
            .map(|(powers, coeff)| Monomial { coeff, powers })
            .collect();
        Ok(PolynomialNC { n_vars, terms })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Sum; fails when the result cancels to zero.
    pub fn checked_add(&self, other: &PolynomialNC) -> Result<PolynomialNC, FreeAlgError> {
        self.same_arity(other)?;
        Self::simplify(
            self.n_vars,
            self.terms
                .iter()
                .chain(&other.terms)
                .map(|m| (m.coeff.clone(), m.powers.clone())),
        )
    }

    pub fn checked_mul(&self, other: &PolynomialNC) -> Result<PolynomialNC, FreeAlgError> {
        self.same_arity(other)?;
        let products = self.terms.iter().flat_map(|a| {
            other.terms.iter().map(move |b| {
                let powers = a.powers.iter().zip(&b.powers).map(|(x, y)| x + y).collect();
                (Rational::from(&a.coeff * &b.coeff), powers)
            })
        });
        Self::simplify(self.n_vars, products)
    }

    fn same_arity(&self, other: &PolynomialNC) -> Result<(), FreeAlgError> {
        if self.n_vars != other.n_vars {
            return Err(FreeAlgError::DimensionMismatch {
                vars: self.n_vars,
                gens: other.n_vars,
            });
        }
        Ok(())
    }

    pub fn evaluate(&self, values: &[Interval]) -> Result<Interval, FreeAlgError> {
        if values.len() != self.n_vars {
            return Err(FreeAlgError::DimensionMismatch {
                vars: self.n_vars,
                gens: values.len(),
            });
        }
        let prec = values.iter().map(Interval::prec).max().unwrap_or(64);
        let mut acc = Interval::zero(prec);
        for m in &self.terms {
            let mut prod = Interval::from_rational(&m.coeff, prec);
            for (v, &k) in values.iter().zip(&m.powers) {
                for _ in 0..k {
                    prod = &prod * v;
                }
            }
            acc = &acc + &prod;
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PolynomialJson::from(self)).expect("plain data")
    }

    pub fn from_json(text: &str) -> Result<Self, FreeAlgError> {
        let raw: PolynomialJson =
            serde_json::from_str(text).map_err(|e| FreeAlgError::Json(e.to_string()))?;
        let terms = raw
            .terms
            .into_iter()
            .map(|t| {
                parse_rational(&t.coeff)
                    .map(|c| (c, t.powers))
                    .map_err(|e| FreeAlgError::Json(e.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(raw.n_vars, terms)
    }
}

fn check_monomial(n_vars: usize, coeff: &Rational, powers: &[u32]) -> Result<(), FreeAlgError> {
    if n_vars == 0 {
        return Err(FreeAlgError::NoVariables);
    }
    if powers.len() != n_vars {
        return Err(FreeAlgError::ArityMismatch {
            expected: n_vars,
            found: powers.to_vec(),
        });
    }
    if *coeff == 0 {
        return Err(FreeAlgError::ZeroCoefficient(powers.to_vec()));
    }
    if powers.iter().all(|&k| k == 0) {
        return Err(FreeAlgError::ConstantTerm);
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    n_vars: usize,
    terms: Vec<MonomialJson>,
}

#[derive(Serialize, Deserialize)]
struct MonomialJson {
    coeff: String,
    powers: Vec<u32>,
}

impl From<&PolynomialNC> for PolynomialJson {
    fn from(p: &PolynomialNC) -> Self {
        PolynomialJson {
            n_vars: p.n_vars,
            terms: p
                .terms
                .iter()
                .map(|m| MonomialJson {
                    coeff: rational_to_string(&m.coeff),
                    powers: m.powers.clone(),
                })
                .collect(),
        }
    }
}

/// Prints in the polynomial text format, e.g. `3*x1^2*x2 - x3`.
impl fmt::Display for PolynomialNC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Highest degree first reads more naturally.
        let mut order: Vec<&Monomial> = self.terms.iter().collect();
        order.sort_by(|a, b| b.degree().cmp(&a.degree()).then(b.powers.cmp(&a.powers)));
        for (i, m) in order.into_iter().enumerate() {
            let negative = m.coeff < 0;
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = Rational::from(m.coeff.abs_ref());
            let mut factors = Vec::new();
            if abs != 1 {
                factors.push(if *abs.denom() == 1 {
                    abs.numer().to_string()
                } else {
                    abs.to_string()
                });
            }
            for (j, &k) in m.powers.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(format!("x{}", j + 1)),
                    _ => factors.push(format!("x{}^{}", j + 1, k)),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

/// Outcome of an exact ℚ-linear independence test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Independence {
    pub independent: bool,
    /// A nonzero integer vector `λ` with `Σ λ_i v_i = 0`, when dependent.
    /// Divided by its gcd, first nonzero entry positive.
    pub witness: Option<Vec<Integer>>,
}

/// Decides ℚ-linear independence of exponent vectors by fraction-free
/// elimination on their coordinate matrix augmented with the identity.
pub fn check_q_independence(vectors: &[ExponentVector]) -> Independence {
    let symbols: Vec<&BasisSymbol> = {
        let mut s: Vec<&BasisSymbol> = vectors.iter().flat_map(|v| v.symbols()).collect();
        s.sort();
        s.dedup();
        s
    };
    let n = vectors.len();
    let cols = symbols.len();
    // Row i: [denominator-cleared coordinates of v_i | e_i · scale_i].
    let mut rows: Vec<Vec<Integer>> = vectors
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let coords: Vec<Rational> = symbols.iter().map(|s| v.coord(s)).collect();
            let scale = coords
                .iter()
                .fold(Integer::from(1), |acc, q| acc.lcm(q.denom()));
            let mut row: Vec<Integer> = coords
                .iter()
                .map(|q| q.numer() * (&scale / Integer::from(q.denom())))
                .collect();
            row.extend((0..n).map(|j| {
                if i == j {
                    scale.clone()
                } else {
                    Integer::new()
                }
            }));
            row
        })
        .collect();

    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(p) = (pivot_row..n).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(pivot_row, p);
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pivot_row || row[col] == 0 {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot) {
                *x = Integer::from(&*x * &pivot[col]) - Integer::from(&factor * y);
            }
            reduce_by_gcd(row);
        }
        pivot_row += 1;
    }
    // Rows past the rank have a zero coordinate part; their identity part is
    // a dependency among the scaled rows, which already folds the scale back.
    let witness = rows[pivot_row..].first().map(|row| {
        let mut w: Vec<Integer> = row[cols..].to_vec();
        reduce_by_gcd(&mut w);
        if w.iter().find(|x| **x != 0).is_some_and(|x| *x < 0) {
            w.iter_mut().for_each(|x| *x = Integer::from(-&*x));
        }
        w
    });
    Independence {
        independent: witness.is_none(),
        witness,
    }
}

fn reduce_by_gcd(row: &mut [Integer]) {
    let g = row.iter().fold(Integer::new(), |acc, x| acc.gcd(x));
    if g > 1 {
        row.iter_mut().for_each(|x| *x /= &g);
    }
}

/// A finite family of reals `r_1, …, r_n` used as exponent generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    gens: Vec<ExponentVector>,
    independence: Independence,
}

impl GeneratorSet {
    /// Requires distinct, ℚ-linearly independent generators.
    pub fn new(gens: Vec<ExponentVector>) -> Result<Self, FreeAlgError> {
        let set = Self::allow_dependent(gens)?;
        if let Some(w) = &set.independence.witness {
            return Err(FreeAlgError::NotIndependent {
                witness: w.iter().map(Integer::to_string).collect(),
            });
        }
        Ok(set)
    }

    /// Only checks distinctness; the independence outcome is recorded.
    pub fn allow_dependent(gens: Vec<ExponentVector>) -> Result<Self, FreeAlgError> {
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                if gens[i] == gens[j] {
                    return Err(FreeAlgError::DuplicateGenerator(i, j));
                }
            }
        }
        let independence = check_q_independence(&gens);
        Ok(GeneratorSet { gens, independence })
    }

    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn independence(&self) -> &Independence {
        &self.independence
    }
}

/// `P(exp(r_1 t), …, exp(r_n t))` as a normalized exponential sum.
pub fn induce(poly: &PolynomialNC, gens: &GeneratorSet) -> Result<ExpSum, FreeAlgError> {
    if poly.n_vars() != gens.len() {
        return Err(FreeAlgError::DimensionMismatch {
            vars: poly.n_vars(),
            gens: gens.len(),
        });
    }
    Ok(ExpSum::normalize(poly.terms.iter().map(|m| {
        let exponent = m
            .powers
            .iter()
            .zip(&gens.gens)
            .fold(ExponentVector::zero(), |acc, (&k, r)| {
                &acc + &r.scale(&Rational::from(k))
            });
        (m.coeff.clone(), exponent)
    })))
}

#[derive(Clone, Debug)]
pub struct FreeCertificate {
    /// Induced sum is exponential-like with one term per monomial.
    pub exp_like: bool,
    pub rank: usize,
    pub term_count: usize,
    pub induced: ExpSum,
}

impl FreeCertificate {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "exp_like": self.exp_like,
            "rank": self.rank,
            "term_count": self.term_count,
            "induced": self.induced.to_json_value(),
            "induced_text": self.induced.to_string(),
        })
    }
}

/// Certifies that `P` evaluated at the generators' exponentials is a
/// nonzero exponential-like function, structurally.
pub fn certify_free_combination(
    poly: &PolynomialNC,
    gens: &GeneratorSet,
) -> Result<FreeCertificate, FreeAlgError> {
    if let Some(w) = &gens.independence.witness {
        return Err(FreeAlgError::NotIndependent {
            witness: w.iter().map(Integer::to_string).collect(),
        });
    }
    let induced = induce(poly, gens)?;
    let rank = induced.rank();
    Ok(FreeCertificate {
        exp_like: induced.is_exponential_like() && rank == poly.terms.len(),
        rank,
        term_count: poly.terms.len(),
        induced,
    })
}

/// `x ↦ f(F(x))`.
pub struct Composition {
    outer: ExpSum,
    inner: WitnessHandle,
    name: String,
}

impl Composition {
    pub fn outer(&self) -> &ExpSum {
        &self.outer
    }

    pub fn inner(&self) -> &WitnessHandle {
        &self.inner
    }
}

impl RealFunction for Composition {
    fn name(&self) -> &str {
        &self.name
    }

    fn domain(&self) -> Domain {
        self.inner.domain()
    }

    fn exactness(&self) -> Exactness {
        if self.outer.is_zero() {
            Exactness::Exact
        } else {
            Exactness::Enclosure
        }
    }

    fn disclaimer(&self) -> Option<&str> {
        self.inner.disclaimer()
    }

    fn eval(&self, x: &Rational, prec: u32) -> Result<Value, WitnessError> {
        let v = self.inner.eval(x, prec)?;
        if self.outer.is_zero() {
            return Ok(Value::Exact(Rational::new()));
        }
        Ok(Value::Enclosure(match v {
            Value::Exact(q) => self.outer.evaluate_rational(&q, prec),
            Value::Enclosure(i) => self.outer.evaluate(&i, prec),
        }))
    }
}

pub fn compose_with_witness(f: &ExpSum, inner: WitnessHandle) -> Arc<Composition> {
    let name = format!("({f})∘{}", inner.name());
    Arc::new(Composition {
        outer: f.clone(),
        inner,
        name,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witnesses::{Identity, StepWitness};
    use rug::Float;

    fn sym(p: u64) -> ExponentVector {
        ExponentVector::single(BasisSymbol::sqrt(p).unwrap(), 1)
    }

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| Integer::from(x)).collect()
    }

    #[test]
    fn independence_examples() {
        assert!(check_q_independence(&[sym(2), sym(3)]).independent);
        let dep = check_q_independence(&[ExponentVector::rational(1), ExponentVector::rational(2)]);
        assert_eq!(dep.witness, Some(ints(&[2, -1])));
        let dep = check_q_independence(&[
            sym(2),
            ExponentVector::single(BasisSymbol::sqrt(2).unwrap(), 2),
        ]);
        assert_eq!(dep.witness, Some(ints(&[2, -1])));
    }

    #[test]
    fn independence_with_fractions() {
        // (1/2)√2 + √3, √2 + 3√3 − 1, 1: independent.
        let half = ExponentVector::from_coords([
            (BasisSymbol::sqrt(2).unwrap(), Rational::from((1, 2))),
            (BasisSymbol::sqrt(3).unwrap(), q(1)),
        ]);
        let b = &(&sym(2) + &sym(3).scale(&q(3))) - &ExponentVector::rational(1);
        let one = ExponentVector::rational(1);
        assert!(check_q_independence(&[half.clone(), b.clone(), one.clone()]).independent);
        let c = &half.scale(&q(4)) + &one.scale(&q(3));
        let res = check_q_independence(&[half, one, c]);
        assert_eq!(res.witness, Some(ints(&[4, 3, -1])));
    }

    #[test]
    fn zero_vector_is_dependent() {
        let res = check_q_independence(&[sym(2), ExponentVector::zero()]);
        assert_eq!(res.witness, Some(ints(&[0, 1])));
    }

    #[test]
    fn polynomial_invariants() {
        assert_eq!(
            PolynomialNC::new(2, [(q(1), vec![0, 0])]),
            Err(FreeAlgError::ConstantTerm)
        );
        assert_eq!(
            PolynomialNC::new(1, [(q(1), vec![2]), (q(-1), vec![2])]),
            Err(FreeAlgError::DuplicateMultiIndex(vec![2]))
        );
        assert!(matches!(
            PolynomialNC::new(2, [(q(1), vec![1])]),
            Err(FreeAlgError::ArityMismatch { .. })
        ));
        assert!(matches!(
            PolynomialNC::new(1, [(q(0), vec![1])]),
            Err(FreeAlgError::ZeroCoefficient(_))
        ));
        assert_eq!(
            PolynomialNC::simplify(1, [(q(1), vec![2]), (q(-1), vec![2])]),
            Err(FreeAlgError::ZeroPolynomial)
        );
        let p =
            PolynomialNC::simplify(1, [(q(1), vec![2]), (q(2), vec![2]), (q(1), vec![1])]).unwrap();
        assert_eq!(p.terms().len(), 2);
    }

    #[test]
    fn polynomial_display() {
        let p = PolynomialNC::new(
            3,
            [
                (q(3), vec![2, 1, 0]),
                (q(-1), vec![0, 0, 1]),
                (Rational::from((1, 2)), vec![1, 0, 0]),
            ],
        )
        .unwrap();
        assert_eq!(p.to_string(), "3*x1^2*x2 + 1/2*x1 - x3");
    }

    #[test]
    fn polynomial_json_round_trip() {
        let p = PolynomialNC::new(2, [(q(3), vec![2, 1]), (q(-1), vec![0, 1])]).unwrap();
        let back = PolynomialNC::from_json(&p.to_json().to_string()).unwrap();
        assert_eq!(p, back);
    }

    #[test]
    fn induce_examples() {
        let gens = GeneratorSet::new(vec![sym(2), sym(3)]).unwrap();
        let uv = PolynomialNC::new(2, [(q(1), vec![1, 1])]).unwrap();
        let f = induce(&uv, &gens).unwrap();
        assert_eq!(f, ExpSum::exp_term(1, &sym(2) + &sym(3)));

        let gens1 = GeneratorSet::new(vec![sym(2)]).unwrap();
        let p = PolynomialNC::new(1, [(q(1), vec![2]), (q(-1), vec![1])]).unwrap();
        let f = induce(&p, &gens1).unwrap();
        assert_eq!(f.to_string(), "-1*exp(sqrt2*t) + 1*exp((2*sqrt2)*t)");

        let gens = GeneratorSet::new(vec![ExponentVector::rational(1), sym(2)]).unwrap();
        let p = PolynomialNC::new(2, [(q(1), vec![2, 1]), (q(-3), vec![1, 2])]).unwrap();
        let cert = certify_free_combination(&p, &gens).unwrap();
        assert!(cert.exp_like);
        assert_eq!(cert.rank, 2);
        let expected = ExpSum::normalize([
            (q(1), &ExponentVector::rational(2) + &sym(2)),
            (q(-3), &ExponentVector::rational(1) + &sym(2).scale(&q(2))),
        ]);
        assert_eq!(cert.induced, expected);
    }

    #[test]
    fn induce_dimension_mismatch() {
        let gens = GeneratorSet::new(vec![sym(2)]).unwrap();
        let p = PolynomialNC::new(2, [(q(1), vec![1, 1])]).unwrap();
        assert!(matches!(
            induce(&p, &gens),
            Err(FreeAlgError::DimensionMismatch { vars: 2, gens: 1 })
        ));
    }

    #[test]
    fn dependent_generators_can_cancel() {
        let two_sqrt2 = sym(2).scale(&q(2));
        assert!(matches!(
            GeneratorSet::new(vec![sym(2), two_sqrt2.clone()]),
            Err(FreeAlgError::NotIndependent { .. })
        ));
        let gens = GeneratorSet::allow_dependent(vec![sym(2), two_sqrt2]).unwrap();
        let p = PolynomialNC::new(2, [(q(1), vec![2, 0]), (q(-1), vec![0, 1])]).unwrap();
        assert!(induce(&p, &gens).unwrap().is_zero());
        assert!(matches!(
            certify_free_combination(&p, &gens),
            Err(FreeAlgError::NotIndependent { .. })
        ));
    }

    #[test]
    fn duplicate_generators_rejected() {
        assert_eq!(
            GeneratorSet::allow_dependent(vec![sym(2), sym(2)]),
            Err(FreeAlgError::DuplicateGenerator(0, 1))
        );
    }

    #[test]
    fn composition_with_identity_and_step() {
        let f = ExpSum::exp_term(1, ExponentVector::rational(1));
        let id = compose_with_witness(&f, Arc::new(Identity));
        let v = id.eval(&q(0), 128).unwrap().enclosure(128);
        assert!(v.contains(&Float::with_val(128, 1)));

        let step = compose_with_witness(&f, Arc::new(StepWitness));
        let v = step
            .eval(&Rational::from((3, 10)), 128)
            .unwrap()
            .enclosure(128);
        let expected = Float::with_val(128, 0.5).exp();
        assert!(v.contains(&expected));
    }
}
