//! Basis symbols: the reals that exponent vectors are written over.
//!
//! The built-in basis is `ONE, SQRT2, SQRT3, SQRT5, …` (square roots of
//! distinct primes, which are linearly independent over ℚ). Callers may
//! declare extra symbols with a rational enclosure, but only when they opt in
//! to assuming that the enlarged basis stays independent.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use rug::Rational;
use thiserror::Error;

use crate::interval::Interval;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BasisError {
    #[error("unknown basis symbol `{0}`")]
    UnknownSymbol(String),
    #[error("sqrt{0} is not a basis symbol: only square roots of primes are built in")]
    NotPrime(u64),
    #[error("symbol `{0}` is already declared")]
    Duplicate(String),
    #[error("declaring `{0}` requires assume_independent")]
    IndependenceNotAssumed(String),
    #[error("invalid enclosure for `{name}`: {reason}")]
    BadEnclosure { name: String, reason: String },
}

#[derive(Clone, Debug)]
pub enum SymbolValue {
    One,
    Sqrt(u64),
    Declared { lo: Rational, hi: Rational },
}

/// A named real number used as a basis direction for exponents.
///
/// Equality, ordering and hashing depend only on the symbol's identity
/// (kind and name), never on the enclosure of a declared value.
#[derive(Clone, Debug)]
pub struct BasisSymbol {
    name: Arc<str>,
    value: SymbolValue,
}

impl BasisSymbol {
    pub fn one() -> Self {
        BasisSymbol {
            name: Arc::from("ONE"),
            value: SymbolValue::One,
        }
    }

    pub fn sqrt(p: u64) -> Result<Self, BasisError> {
        if !is_prime(p) {
            return Err(BasisError::NotPrime(p));
        }
        Ok(BasisSymbol {
            name: Arc::from(format!("SQRT{p}")),
            value: SymbolValue::Sqrt(p),
        })
    }

    /// A user-declared real with rational enclosure `[lo, hi]`.
    pub fn declared(name: &str, lo: Rational, hi: Rational) -> Result<Self, BasisError> {
        if !is_identifier(name) {
            return Err(BasisError::BadEnclosure {
                name: name.to_string(),
                reason: "name must be an identifier".into(),
            });
        }
        if builtin_name(name).is_some() {
            return Err(BasisError::Duplicate(name.to_string()));
        }
        if lo > hi {
            return Err(BasisError::BadEnclosure {
                name: name.to_string(),
                reason: "lower bound exceeds upper bound".into(),
            });
        }
        if lo <= 0 && hi >= 0 {
            return Err(BasisError::BadEnclosure {
                name: name.to_string(),
                reason: "enclosure must exclude zero".into(),
            });
        }
        Ok(BasisSymbol {
            name: Arc::from(name),
            value: SymbolValue::Declared { lo, hi },
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn value(&self) -> &SymbolValue {
        &self.value
    }

    pub fn is_one(&self) -> bool {
        matches!(self.value, SymbolValue::One)
    }

    /// Name used in the expression text format (`sqrt2`; declared names verbatim).
    pub fn text_name(&self) -> String {
        match self.value {
            SymbolValue::One => "1".into(),
            SymbolValue::Sqrt(p) => format!("sqrt{p}"),
            SymbolValue::Declared { .. } => self.name.to_string(),
        }
    }

    /// The exact rational square of the symbol, when there is one.
    pub fn square(&self) -> Option<Rational> {
        match self.value {
            SymbolValue::One => Some(Rational::from(1)),
            SymbolValue::Sqrt(p) => Some(Rational::from(p)),
            SymbolValue::Declared { .. } => None,
        }
    }

    /// Enclosure of the symbol's value at `prec` bits.
    ///
    /// Built-in symbols shrink with `prec`; declared symbols are as tight as
    /// their declaration.
    pub fn enclosure(&self, prec: u32) -> Interval {
        match &self.value {
            SymbolValue::One => Interval::one(prec),
            SymbolValue::Sqrt(p) => Interval::from_rational(&Rational::from(*p), prec)
                .sqrt()
                .expect("prime is positive"),
            SymbolValue::Declared { lo, hi } => Interval::from_rationals(lo, hi, prec),
        }
    }

    fn sort_key(&self) -> (u8, u64, &str) {
        match self.value {
            SymbolValue::One => (0, 0, ""),
            SymbolValue::Sqrt(p) => (1, p, ""),
            SymbolValue::Declared { .. } => (2, 0, &self.name),
        }
    }
}

impl PartialEq for BasisSymbol {
    fn eq(&self, other: &Self) -> bool {
        self.sort_key() == other.sort_key()
    }
}

impl Eq for BasisSymbol {}

impl PartialOrd for BasisSymbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BasisSymbol {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl Hash for BasisSymbol {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.sort_key().hash(state);
    }
}

impl fmt::Display for BasisSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Resolves symbol names for parsing and deserialization.
///
/// The built-in symbols are always available; declared symbols are kept in
/// declaration order after them.
#[derive(Clone, Debug, Default)]
pub struct Basis {
    declared: BTreeMap<String, BasisSymbol>,
    assume_independent: bool,
}

impl Basis {
    pub fn new() -> Self {
        Basis::default()
    }

    pub fn with_assume_independent(mut self, yes: bool) -> Self {
        self.assume_independent = yes;
        self
    }

    pub fn assume_independent(&self) -> bool {
        self.assume_independent
    }

    pub fn declare(&mut self, name: &str, lo: Rational, hi: Rational) -> Result<(), BasisError> {
        if !self.assume_independent {
            return Err(BasisError::IndependenceNotAssumed(name.to_string()));
        }
        if self.declared.contains_key(name) {
            return Err(BasisError::Duplicate(name.to_string()));
        }
        let sym = BasisSymbol::declared(name, lo, hi)?;
        self.declared.insert(name.to_string(), sym);
        Ok(())
    }

    /// Looks up `ONE`, `SQRTp`/`sqrtp` (p prime) or a declared name.
    pub fn resolve(&self, name: &str) -> Result<BasisSymbol, BasisError> {
        if let Some(sym) = self.declared.get(name) {
            return Ok(sym.clone());
        }
        match builtin_name(name) {
            Some(Builtin::One) => Ok(BasisSymbol::one()),
            Some(Builtin::Sqrt(p)) => BasisSymbol::sqrt(p),
            None => Err(BasisError::UnknownSymbol(name.to_string())),
        }
    }

    pub fn declared_symbols(&self) -> impl Iterator<Item = &BasisSymbol> {
        self.declared.values()
    }
}

enum Builtin {
    One,
    Sqrt(u64),
}

fn builtin_name(name: &str) -> Option<Builtin> {
    if name == "ONE" {
        return Some(Builtin::One);
    }
    let digits = name
        .strip_prefix("SQRT")
        .or_else(|| name.strip_prefix("sqrt"))?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
        return None;
    }
    digits.parse().ok().map(Builtin::Sqrt)
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
