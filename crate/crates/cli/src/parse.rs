//! Expression text for exponential sums, exponent combinations and
//! polynomials.
//!
//! One arithmetic grammar covers all three; lowering decides what a tree
//! means in context.
//!
//! ```text
//! expr    := sum
//! sum     := product (("+" | "-") product)*
//! product := unary (("*" | "/") unary)*
//! unary   := ("+" | "-") unary | power
//! power   := atom ["^" unary]
//! atom    := number | ident | "exp" "(" expr ")" | "(" expr ")"
//! number  := digits ["." digits]
//! ident   := [A-Za-z_][A-Za-z0-9_]*
//! ```
//!
//! Identifiers: `t` is the variable of an exponential sum, `x1`, `x2`, ...
//! are polynomial variables, everything else is a basis symbol (`ONE`,
//! `sqrtp`/`SQRTp` for a prime `p`, or a name declared in the config).

use std::collections::BTreeMap;
use std::fmt;

use expalg_core::rug::ops::Pow;
use expalg_core::rug::{Integer, Rational};
use expalg_core::{Basis, ExpSum, ExponentVector, FreeAlgError, PolynomialNC};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownSymbol(String),
}

impl ParseErrorKind {
    pub fn name(&self) -> &'static str {
        match self {
            ParseErrorKind::Syntax(_) => "SyntaxError",
            ParseErrorKind::UnknownSymbol(_) => "UnknownSymbol",
        }
    }
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(msg) => f.write_str(msg),
            ParseErrorKind::UnknownSymbol(name) => write!(f, "unknown basis symbol `{name}`"),
        }
    }
}

/// Positions are 1-based; columns count characters.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("{kind} at line {line}, column {column}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn at(text: &str, offset: usize, kind: ParseErrorKind) -> Self {
        let before = &text[..offset.min(text.len())];
        let line = before.matches('\n').count() + 1;
        let line_start = before.rfind('\n').map_or(0, |i| i + 1);
        let column = before[line_start..].chars().count() + 1;
        ParseError { line, column, kind }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    Number(Rational),
    Symbol(String),
    Var(usize),
    Time,
    Exp(Box<Expr>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
}

/// Parse tree node with the source range it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(q) => format!("number `{q}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, Span)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' | b'.' => {
                while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                    i += 1;
                }
                let lit = &text[start..i];
                let q = parse_decimal(lit).ok_or_else(|| {
                    ParseError::at(
                        text,
                        start,
                        ParseErrorKind::Syntax(format!("malformed number `{lit}`")),
                    )
                })?;
                out.push((Tok::Num(q), Span { start, end: i }));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((
                    Tok::Ident(text[start..i].to_string()),
                    Span { start, end: i },
                ));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(ParseError::at(
                    text,
                    start,
                    ParseErrorKind::Syntax(format!("unexpected character `{ch}`")),
                ));
            }
        };
        i += 1;
        out.push((tok, Span { start, end: i }));
    }
    out.push((
        Tok::End,
        Span {
            start: text.len(),
            end: text.len(),
        },
    ));
    Ok(out)
}

/// Exact value of an unsigned decimal literal such as `12`, `0.25` or `.5`.
pub fn parse_decimal(lit: &str) -> Option<Rational> {
    let (int, frac) = match lit.split_once('.') {
        Some((a, b)) => (a, b),
        None => (lit, ""),
    };
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int}{frac}");
    let num: Integer = digits.parse().ok()?;
    let den = Integer::from(10).pow(frac.len() as u32);
    Some(Rational::from((num, den)))
}

/// Signed exact decimal or fraction such as `-3`, `2.5` or `-7/4`.
pub fn parse_rational_literal(text: &str) -> Option<Rational> {
    let t = text.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let value = match body.split_once('/') {
        Some((n, d)) => {
            let d = parse_decimal(d)?;
            if d == 0 {
                return None;
            }
            parse_decimal(n)? / d
        }
        None => parse_decimal(body)?,
    };
    Some(if neg { -value } else { value })
}

struct Parser<'a> {
    text: &'a str,
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Result<Self, ParseError> {
        Ok(Parser {
            text,
            toks: tokenize(text)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, msg: String) -> ParseError {
        ParseError::at(self.text, self.span().start, ParseErrorKind::Syntax(msg))
    }

    fn expect(&mut self, tok: Tok) -> Result<Span, ParseError> {
        if *self.peek() == tok {
            Ok(self.bump().1)
        } else {
            Err(self.error(format!(
                "expected {}, found {}",
                tok.describe(),
                self.peek().describe()
            )))
        }
    }

    fn parse_all(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::End {
            return Err(self.error("empty expression".into()));
        }
        let e = self.sum()?;
        if *self.peek() != Tok::End {
            return Err(self.error(format!("unexpected {}", self.peek().describe())));
        }
        Ok(e)
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.product()?;
        loop {
            let op = self.peek().clone();
            if op != Tok::Plus && op != Tok::Minus {
                return Ok(lhs);
            }
            self.bump();
            let rhs = self.product()?;
            let span = join(lhs.span, rhs.span);
            let kind = if op == Tok::Plus {
                ExprKind::Add(Box::new(lhs), Box::new(rhs))
            } else {
                ExprKind::Sub(Box::new(lhs), Box::new(rhs))
            };
            lhs = Expr { kind, span };
        }
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = self.peek().clone();
            if op != Tok::Star && op != Tok::Slash {
                return Ok(lhs);
            }
            self.bump();
            let rhs = self.unary()?;
            let span = join(lhs.span, rhs.span);
            let kind = if op == Tok::Star {
                ExprKind::Mul(Box::new(lhs), Box::new(rhs))
            } else {
                ExprKind::Div(Box::new(lhs), Box::new(rhs))
            };
            lhs = Expr { kind, span };
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Tok::Minus => {
                let start = self.bump().1;
                let inner = self.unary()?;
                Ok(Expr {
                    span: join(start, inner.span),
                    kind: ExprKind::Neg(Box::new(inner)),
                })
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let exp = self.unary()?;
        Ok(Expr {
            span: join(base.span, exp.span),
            kind: ExprKind::Pow(Box::new(base), Box::new(exp)),
        })
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let span = self.span();
        match self.peek().clone() {
            Tok::Num(q) => {
                self.bump();
                Ok(Expr {
                    kind: ExprKind::Number(q),
                    span,
                })
            }
            Tok::LParen => {
                self.bump();
                let inner = self.sum()?;
                let end = self.expect(Tok::RParen)?;
                Ok(Expr {
                    kind: inner.kind,
                    span: join(span, end),
                })
            }
            Tok::Ident(name) => {
                self.bump();
                if name == "exp" {
                    self.expect(Tok::LParen)?;
                    let arg = self.sum()?;
                    let end = self.expect(Tok::RParen)?;
                    return Ok(Expr {
                        kind: ExprKind::Exp(Box::new(arg)),
                        span: join(span, end),
                    });
                }
                let kind = if name == "t" {
                    ExprKind::Time
                } else if let Some(i) = variable_index(&name) {
                    ExprKind::Var(i)
                } else {
                    ExprKind::Symbol(name)
                };
                Ok(Expr { kind, span })
            }
            other => Err(self.error(format!("unexpected {}", other.describe()))),
        }
    }
}

fn join(a: Span, b: Span) -> Span {
    Span {
        start: a.start.min(b.start),
        end: a.end.max(b.end),
    }
}

/// `x1` → 1, `x12` → 12; `x0` and `x01` are not variables.
fn variable_index(name: &str) -> Option<usize> {
    let digits = name.strip_prefix('x')?;
    if digits.is_empty() || digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

/// Names that can never be declared basis symbols.
pub fn is_reserved(name: &str) -> bool {
    name == "t" || name == "exp" || variable_index(name).is_some()
}

pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    Parser::new(text)?.parse_all()
}

/// Lowering context: source text for positions and the symbol table.
struct Lower<'a> {
    text: &'a str,
    basis: &'a Basis,
}

impl Lower<'_> {
    fn syntax(&self, span: Span, msg: impl Into<String>) -> ParseError {
        ParseError::at(self.text, span.start, ParseErrorKind::Syntax(msg.into()))
    }

    fn symbol(&self, name: &str, span: Span) -> Result<ExponentVector, ParseError> {
        self.basis
            .resolve(name)
            .map(|sym| ExponentVector::single(sym, 1))
            .map_err(|_| {
                ParseError::at(
                    self.text,
                    span.start,
                    ParseErrorKind::UnknownSymbol(name.to_string()),
                )
            })
    }

    fn integer_exponent(&self, e: &Expr) -> Result<u32, ParseError> {
        let q = self.rational(e)?;
        if q.denom() != &1 || q < 0 {
            return Err(self.syntax(e.span, "exponent must be a nonnegative integer"));
        }
        q.numer()
            .to_u32()
            .filter(|&n| n <= 64)
            .ok_or_else(|| self.syntax(e.span, "exponent too large (at most 64)"))
    }

    /// A constant rational expression.
    fn rational(&self, e: &Expr) -> Result<Rational, ParseError> {
        Ok(match &e.kind {
            ExprKind::Number(q) => q.clone(),
            ExprKind::Neg(a) => -self.rational(a)?,
            ExprKind::Add(a, b) => self.rational(a)? + self.rational(b)?,
            ExprKind::Sub(a, b) => self.rational(a)? - self.rational(b)?,
            ExprKind::Mul(a, b) => self.rational(a)? * self.rational(b)?,
            ExprKind::Div(a, b) => {
                let d = self.rational(b)?;
                if d == 0 {
                    return Err(self.syntax(b.span, "division by zero"));
                }
                self.rational(a)? / d
            }
            ExprKind::Pow(a, b) => {
                let n = self.integer_exponent(b)?;
                self.rational(a)?.pow(n)
            }
            _ => return Err(self.syntax(e.span, "expected a rational constant")),
        })
    }

    /// `c₀ + c₁·t` with exponent-vector coefficients.
    fn affine(&self, e: &Expr) -> Result<Affine, ParseError> {
        Ok(match &e.kind {
            ExprKind::Number(q) => Affine::constant(ExponentVector::rational(q.clone())),
            ExprKind::Symbol(name) => Affine::constant(self.symbol(name, e.span)?),
            ExprKind::Time => Affine {
                constant: ExponentVector::zero(),
                slope: ExponentVector::rational(1),
            },
            ExprKind::Neg(a) => self.affine(a)?.scale(&Rational::from(-1)),
            ExprKind::Add(a, b) => self.affine(a)?.add(&self.affine(b)?),
            ExprKind::Sub(a, b) => self
                .affine(a)?
                .add(&self.affine(b)?.scale(&Rational::from(-1))),
            ExprKind::Mul(a, b) => {
                let (x, y) = (self.affine(a)?, self.affine(b)?);
                x.mul(&y).ok_or_else(|| {
                    self.syntax(
                        e.span,
                        "exponent must be a rational combination of basis symbols times t",
                    )
                })?
            }
            ExprKind::Div(a, b) => {
                let d = self.rational(b)?;
                if d == 0 {
                    return Err(self.syntax(b.span, "division by zero"));
                }
                self.affine(a)?.scale(&d.recip())
            }
            ExprKind::Pow(..) => Affine::constant(ExponentVector::rational(self.rational(e)?)),
            ExprKind::Var(_) => {
                return Err(self.syntax(e.span, "polynomial variable in an exponent"))
            }
            ExprKind::Exp(_) => return Err(self.syntax(e.span, "nested exp")),
        })
    }

    fn expsum(&self, e: &Expr) -> Result<ExpSum, ParseError> {
        Ok(match &e.kind {
            ExprKind::Number(q) => ExpSum::constant(q.clone()),
            ExprKind::Exp(arg) => {
                let a = self.affine(arg)?;
                if !a.constant.is_zero() {
                    return Err(self.syntax(arg.span, "exp argument must be a multiple of t"));
                }
                ExpSum::exp_term(1, a.slope)
            }
            ExprKind::Neg(a) => -&self.expsum(a)?,
            ExprKind::Add(a, b) => self.expsum(a)? + self.expsum(b)?,
            ExprKind::Sub(a, b) => self.expsum(a)? - self.expsum(b)?,
            ExprKind::Mul(a, b) => self.expsum(a)? * self.expsum(b)?,
            ExprKind::Div(a, b) => {
                let d = self.rational(b)?;
                if d == 0 {
                    return Err(self.syntax(b.span, "division by zero"));
                }
                self.expsum(a)?.scale(&d.recip())
            }
            ExprKind::Pow(a, b) => {
                let n = self.integer_exponent(b)?;
                self.expsum(a)?.pow(n)
            }
            ExprKind::Symbol(_) => {
                return Err(self.syntax(e.span, "basis symbols may only appear inside exp(...)"))
            }
            ExprKind::Time => {
                return Err(self.syntax(e.span, "`t` may only appear inside exp(...)"))
            }
            ExprKind::Var(_) => {
                return Err(self.syntax(e.span, "polynomial variable in an exponential sum"))
            }
        })
    }

    fn poly(&self, e: &Expr) -> Result<PolyMap, ParseError> {
        Ok(match &e.kind {
            ExprKind::Number(q) => PolyMap::constant(q.clone()),
            ExprKind::Var(i) => PolyMap::var(*i),
            ExprKind::Neg(a) => self.poly(a)?.scale(&Rational::from(-1)),
            ExprKind::Add(a, b) => self.poly(a)?.add(&self.poly(b)?),
            ExprKind::Sub(a, b) => self.poly(a)?.add(&self.poly(b)?.scale(&Rational::from(-1))),
            ExprKind::Mul(a, b) => self.poly(a)?.mul(&self.poly(b)?),
            ExprKind::Div(a, b) => {
                let d = self.rational(b)?;
                if d == 0 {
                    return Err(self.syntax(b.span, "division by zero"));
                }
                self.poly(a)?.scale(&d.recip())
            }
            ExprKind::Pow(a, b) => {
                let n = self.integer_exponent(b)?;
                let base = self.poly(a)?;
                (0..n).fold(PolyMap::constant(Rational::from(1)), |acc, _| {
                    acc.mul(&base)
                })
            }
            _ => {
                return Err(self.syntax(
                    e.span,
                    "polynomials use variables x1, x2, ... and rationals only",
                ))
            }
        })
    }
}

#[derive(Clone, Debug)]
struct Affine {
    constant: ExponentVector,
    slope: ExponentVector,
}

impl Affine {
    fn constant(c: ExponentVector) -> Self {
        Affine {
            constant: c,
            slope: ExponentVector::zero(),
        }
    }

    fn scale(&self, q: &Rational) -> Self {
        Affine {
            constant: self.constant.scale(q),
            slope: self.slope.scale(q),
        }
    }

    fn add(&self, o: &Affine) -> Self {
        Affine {
            constant: &self.constant + &o.constant,
            slope: &self.slope + &o.slope,
        }
    }

    /// The plain rational value, when this is one.
    fn as_rational(&self) -> Option<Rational> {
        if !self.slope.is_zero() {
            return None;
        }
        if self.constant.is_zero() {
            return Some(Rational::new());
        }
        match self.constant.single_symbol() {
            Some((sym, q)) if sym.is_one() => Some(q.clone()),
            _ => None,
        }
    }

    /// Products stay linear over ℚ when one side is rational, or when a
    /// constant combination multiplies a rational multiple of `t`.
    fn mul(&self, o: &Affine) -> Option<Affine> {
        if let Some(q) = self.as_rational() {
            return Some(o.scale(&q));
        }
        if let Some(q) = o.as_rational() {
            return Some(self.scale(&q));
        }
        let rational_time = |a: &Affine| -> Option<Rational> {
            if !a.constant.is_zero() {
                return None;
            }
            match a.slope.single_symbol() {
                Some((sym, q)) if sym.is_one() => Some(q.clone()),
                _ => None,
            }
        };
        let lin_times = |c: &Affine, time: &Affine| -> Option<Affine> {
            if !c.slope.is_zero() {
                return None;
            }
            let q = rational_time(time)?;
            Some(Affine {
                constant: ExponentVector::zero(),
                slope: c.constant.scale(&q),
            })
        };
        lin_times(self, o).or_else(|| lin_times(o, self))
    }
}

/// Polynomial with an explicit constant term, used while lowering.
#[derive(Clone, Debug, Default)]
struct PolyMap {
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl PolyMap {
    fn constant(q: Rational) -> Self {
        let mut p = PolyMap::default();
        if q != 0 {
            p.terms.insert(Vec::new(), q);
        }
        p
    }

    fn var(i: usize) -> Self {
        let mut powers = vec![0; i];
        powers[i - 1] = 1;
        let mut p = PolyMap::default();
        p.terms.insert(powers, Rational::from(1));
        p
    }

    fn scale(&self, q: &Rational) -> Self {
        let mut out = PolyMap::default();
        if *q != 0 {
            for (k, c) in &self.terms {
                out.terms.insert(k.clone(), Rational::from(c * q));
            }
        }
        out
    }

    fn add(&self, o: &PolyMap) -> Self {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.insert(k.clone(), c.clone());
        }
        out
    }

    fn mul(&self, o: &PolyMap) -> Self {
        let mut out = PolyMap::default();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &o.terms {
                let n = ka.len().max(kb.len());
                let k: Vec<u32> = (0..n)
                    .map(|i| ka.get(i).copied().unwrap_or(0) + kb.get(i).copied().unwrap_or(0))
                    .collect();
                out.insert(k, Rational::from(ca * cb));
            }
        }
        out
    }

    /// Adds a monomial; trailing zero powers are trimmed so keys are canonical.
    fn insert(&mut self, mut k: Vec<u32>, c: Rational) {
        while k.last() == Some(&0) {
            k.pop();
        }
        let slot = self.terms.entry(k.clone()).or_default();
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&k);
        }
    }

    fn n_vars(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }
}

#[derive(Debug, Error)]
pub enum LowerError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    FreeAlg(#[from] FreeAlgError),
}

/// Parses and normalizes an exponential sum in `t`.
pub fn parse_expsum(text: &str, basis: &Basis) -> Result<ExpSum, ParseError> {
    let e = parse_expr(text)?;
    Lower { text, basis }.expsum(&e)
}

/// Parses a rational combination of basis symbols (no `t`).
pub fn parse_lincomb(text: &str, basis: &Basis) -> Result<ExponentVector, ParseError> {
    let e = parse_expr(text)?;
    let lower = Lower { text, basis };
    let a = lower.affine(&e)?;
    if !a.slope.is_zero() {
        return Err(lower.syntax(e.span, "`t` is not allowed in a basis combination"));
    }
    Ok(a.constant)
}

/// Parses a constant rational expression such as `-3/4` or `(1+1)/3`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let e = parse_expr(text)?;
    Lower {
        text,
        basis: &Basis::new(),
    }
    .rational(&e)
}

/// Parses a polynomial in `x1..xn`. With `n_vars = None` the largest
/// variable index used decides the arity.
pub fn parse_polynomial(text: &str, n_vars: Option<usize>) -> Result<PolynomialNC, LowerError> {
    let e = parse_expr(text)?;
    let lower = Lower {
        text,
        basis: &Basis::new(),
    };
    let p = lower.poly(&e)?;
    let used = p.n_vars();
    let n = match n_vars {
        Some(n) if used > n => {
            return Err(lower
                .syntax(
                    e.span,
                    format!("variable x{used} used but only {n} generators given"),
                )
                .into())
        }
        Some(n) => n,
        None => used.max(1),
    };
    let terms = p.terms.into_iter().map(|(mut k, c)| {
        k.resize(n, 0);
        (c, k)
    });
    Ok(PolynomialNC::simplify(n, terms)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn cancelling_terms_give_zero() {
        let f = parse_expsum("2*exp(1*t) - 2*exp(1*t)", &Basis::new()).unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn constant_folding_in_exponent() {
        let f = parse_expsum("1*exp((1+1)*t)", &Basis::new()).unwrap();
        assert_eq!(f, ExpSum::exp_term(1, ExponentVector::rational(2)));
    }

    #[test]
    fn two_symbols_rank_two() {
        let f = parse_expsum("1*exp(sqrt2*t) + 1*exp(sqrt3*t)", &Basis::new()).unwrap();
        assert_eq!(f.exponential_like_rank(), Some(2));
    }

    #[test]
    fn t_may_appear_on_either_side() {
        let b = Basis::new();
        let a = parse_expsum("3*exp(t*sqrt5/2)", &b).unwrap();
        let c = parse_expsum("3*exp((1/2*sqrt5)*t)", &b).unwrap();
        assert_eq!(a, c);
    }

    #[test]
    fn products_and_powers_expand() {
        let b = Basis::new();
        let f = parse_expsum("(exp(t) - 1)^2", &b).unwrap();
        let g = parse_expsum("1*exp(2*t) - 2*exp(1*t) + 1*exp(0*t)", &b).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn errors_carry_positions() {
        let b = Basis::new();
        let e = parse_expsum("1*exp(sqrt4*t)", &b).unwrap_err();
        assert_eq!((e.line, e.column), (1, 7));
        assert_eq!(e.kind, ParseErrorKind::UnknownSymbol("sqrt4".into()));
        let e = parse_expsum("1*exp(t)\n  + 2*exp(t*t)", &b).unwrap_err();
        assert_eq!(e.line, 2);
        assert_eq!(e.kind.name(), "SyntaxError");
        let e = parse_expsum("1*exp(t) +", &b).unwrap_err();
        assert_eq!(e.column, 11);
        assert!(parse_expsum("exp(1 + t)", &b).is_err());
        assert!(parse_expsum("sqrt2", &b).is_err());
        assert!(parse_expsum("", &b).is_err());
        assert!(parse_expsum("1 $ 2", &b).is_err());
    }

    #[test]
    fn lincombs_and_rationals() {
        let b = Basis::new();
        let v = parse_lincomb("1/2 + 3*sqrt2", &b).unwrap();
        assert_eq!(v.to_string(), "1/2 + 3*sqrt2");
        assert!(parse_lincomb("sqrt2*sqrt3", &b).is_err());
        assert_eq!(parse_rational("-7/4").unwrap(), q(-7, 4));
        assert_eq!(parse_rational("0.125").unwrap(), q(1, 8));
        assert_eq!(parse_rational_literal("-2.5/5"), Some(q(-1, 2)));
        assert_eq!(parse_rational_literal("1/0"), None);
    }

    #[test]
    fn polynomials() {
        let p = parse_polynomial("x1*x2 - x1", Some(2)).unwrap();
        assert_eq!(p.terms().len(), 2);
        let p = parse_polynomial("3*x1^2*x2 + 1/2*x1 - x3", None).unwrap();
        assert_eq!(p.n_vars(), 3);
        assert_eq!(p.to_string(), "3*x1^2*x2 + 1/2*x1 - x3");
        assert!(matches!(
            parse_polynomial("x1 + 1", None),
            Err(LowerError::FreeAlg(FreeAlgError::ConstantTerm))
        ));
        assert!(parse_polynomial("x3", Some(2)).is_err());
        assert!(parse_polynomial("(x1 + x2)^2 - x1^2 - 2*x1*x2 - x2^2", None).is_err());
    }
}
