//! Certified root isolation for exponential sums.
//!
//! A sum with `m` terms has at most `m − 1` real roots. The bound comes from
//! a Rolle recursion: multiply by `exp(−β_min·t)` (same roots, one term
//! becomes constant), differentiate (the constant disappears, leaving
//! `m − 1` terms) and recurse. Between consecutive critical cells of the
//! derivative the shifted function is strictly monotone, so sign evaluation
//! at cell boundaries decides whether a segment holds a root, and bisection
//! narrows it.
//!
//! Every level of the recursion is kept in exact form (rational coefficients,
//! exact exponent vectors and the exact exponent differences that multiply
//! each coefficient); numeric enclosures are rebuilt from scratch whenever
//! the working precision is doubled.
//!
//! Roots that cannot be separated by sign (tangential roots such as the
//! double root of `(e^t − 1)²`) are reported as ambiguous cells no wider than
//! the ambiguity floor.

use std::cmp::Ordering;

use rug::float::Round;
use rug::{Float, Rational};
use serde_json::json;
use thiserror::Error;

use crate::expsum::{ExpSum, ExponentVector};
use crate::interval::{max_float, Interval, DEFAULT_PRECISION};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("the zero sum has no isolating certificate")]
    EmptySum,
    #[error("expected an exponential-like sum (nonempty, no constant term)")]
    NotExponentialLike,
    #[error("sign resolution failed at the maximal precision of {0} bits")]
    PrecisionExhausted(u32),
    #[error("invalid domain: lower bound exceeds upper bound")]
    BadDomain,
    #[error("tolerance must be a positive finite number")]
    BadTolerance,
}

/// Tuning knobs shared by every isolation routine.
#[derive(Clone, Debug)]
pub struct IsolationConfig {
    /// Target width of isolating intervals.
    pub tol: f64,
    /// Starting precision in bits.
    pub precision: u32,
    /// Precision is doubled on failure up to this many bits.
    pub max_precision: u32,
    /// log₂ of the narrowest cell refined while hunting for a sign.
    pub ambiguity_floor_log2: i32,
}

impl Default for IsolationConfig {
    fn default() -> Self {
        IsolationConfig {
            tol: 1e-12,
            precision: DEFAULT_PRECISION,
            max_precision: 4096,
            ambiguity_floor_log2: -64,
        }
    }
}

impl IsolationConfig {
    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn with_precision(mut self, bits: u32) -> Self {
        self.precision = bits;
        self.max_precision = self.max_precision.max(bits);
        self
    }

    fn validate(&self) -> Result<(), RootError> {
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(RootError::BadTolerance);
        }
        Ok(())
    }

    fn precisions(&self) -> impl Iterator<Item = u32> + '_ {
        let start = self.precision.max(64);
        std::iter::successors(Some(start), |p| p.checked_mul(2))
            .take_while(move |p| *p <= self.max_precision.max(start))
    }

    fn tol_float(&self, prec: u32) -> Float {
        Float::with_val(prec, self.tol)
    }

    /// `min(tol, 2^floor)`; ambiguous cells are never wider than this.
    fn floor_float(&self, prec: u32) -> Float {
        let floor = Float::with_val(prec, Float::i_exp(1, self.ambiguity_floor_log2));
        let tol = self.tol_float(prec);
        if floor < tol {
            floor
        } else {
            tol
        }
    }
}

/// Enclosures of one term `coeff · exp(beta · t)`.
#[derive(Clone, Debug)]
pub struct NumericTerm {
    pub coeff: Interval,
    pub beta: Interval,
}

/// Interval image of an exact sum, with terms sorted by increasing exponent.
#[derive(Clone, Debug)]
pub struct NumericExpSum {
    terms: Vec<NumericTerm>,
    provenance: ExpSum,
    precision: u32,
}

impl NumericExpSum {
    /// Encloses `f`, raising the precision from `prec` until the exponent
    /// enclosures are pairwise disjoint.
    pub fn new(f: &ExpSum, prec: u32) -> Result<Self, RootError> {
        let chain = ChainLevel::from_sum(f);
        let mut p = prec.max(64);
        loop {
            if let Some(sorted) = chain.sorted(p) {
                return Ok(sorted.numeric(f, p));
            }
            p = p
                .checked_mul(2)
                .filter(|p| *p <= 1 << 16)
                .ok_or(RootError::PrecisionExhausted(p))?;
        }
    }

    pub fn terms(&self) -> &[NumericTerm] {
        &self.terms
    }

    /// The exact sum this numeric image was derived from.
    pub fn provenance(&self) -> &ExpSum {
        &self.provenance
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn rank(&self) -> usize {
        self.terms.len()
    }

    pub fn evaluate(&self, x: &Interval) -> Interval {
        let x = x.with_prec(self.precision);
        self.terms
            .iter()
            .fold(Interval::zero(self.precision), |acc, t| {
                &acc + &(&t.coeff * &(&t.beta * &x).exp())
            })
    }

    pub fn evaluate_point(&self, x: &Float) -> Interval {
        self.evaluate(&Interval::point(x.clone()))
    }

    /// Numeric derivative: `Σ coeff·beta·exp(beta·t)`, dropping exact constants.
    pub fn diff_numeric(&self) -> NumericExpSum {
        let terms = self
            .terms
            .iter()
            .filter(|t| t.beta.sign() != Some(Ordering::Equal))
            .map(|t| NumericTerm {
                coeff: &t.coeff * &t.beta,
                beta: t.beta.clone(),
            })
            .collect();
        NumericExpSum {
            terms,
            provenance: self.provenance.clone(),
            precision: self.precision,
        }
    }

    pub fn derivative_evaluate(&self, x: &Interval) -> Interval {
        let x = x.with_prec(self.precision);
        self.terms
            .iter()
            .fold(Interval::zero(self.precision), |acc, t| {
                &acc + &(&(&t.coeff * &t.beta) * &(&t.beta * &x).exp())
            })
    }

    /// Enclosure over a cell, intersecting the naive and mean-value forms.
    fn evaluate_cell(&self, x: &Interval) -> Interval {
        let naive = self.evaluate(x);
        let mid = x.mid();
        let slope = self.derivative_evaluate(x);
        let r = x.radius();
        let spread = Interval::new(Float::with_val(self.precision, -&r), r);
        let mean_value = &self.evaluate_point(&mid) + &(&slope * &spread);
        naive.intersect(&mean_value).unwrap_or(naive)
    }

    fn point_sign(&self, x: &Float) -> Option<Ordering> {
        self.evaluate_point(x).strict_sign()
    }

    fn betas_disjoint(&self) -> bool {
        self.terms
            .windows(2)
            .all(|w| w[0].beta.hi() < w[1].beta.lo())
    }
}

/// Returns `M ≥ 0` such that the term with the largest exponent strictly
/// dominates the sum of all others for `t ≥ M`, and the smallest one for
/// `t ≤ −M`.
pub fn tail_radius(f: &NumericExpSum) -> Result<Float, RootError> {
    tail_radius_checked(f).ok_or(RootError::PrecisionExhausted(f.precision))
}

fn tail_radius_checked(f: &NumericExpSum) -> Option<Float> {
    let prec = f.precision;
    let m = f.terms.len();
    if m == 0 {
        return None;
    }
    let zero = Float::with_val(prec, 0);
    if m == 1 {
        return Some(zero);
    }
    if !f.betas_disjoint() {
        return None;
    }
    let others = Interval::from_rational(&Rational::from(m as u64 - 1), prec);
    let side =
        |dominant: &NumericTerm, gap_of: &dyn Fn(&NumericTerm) -> Interval| -> Option<Float> {
            let lead = dominant.coeff.abs();
            lead.strict_sign()?;
            let mut worst = zero.clone();
            for t in &f.terms {
                if std::ptr::eq(t, dominant) {
                    continue;
                }
                let ratio = (&others * &t.coeff.abs()).div(&lead)?;
                ratio.strict_sign()?;
                let log = ratio.ln()?;
                let gap = gap_of(t);
                if gap.strict_sign() != Some(Ordering::Greater) {
                    return None;
                }
                let bound = log.div(&gap)?;
                worst = max_float(&worst, bound.hi());
            }
            Some(worst)
        };
    let top = f.terms.last().unwrap();
    let bottom = f.terms.first().unwrap();
    let right = side(top, &|t: &NumericTerm| &top.beta - &t.beta)?;
    let left = side(bottom, &|t: &NumericTerm| &t.beta - &bottom.beta)?;
    let radius = max_float(&right, &left);
    // Strict dominance at t = M itself.
    let margin = Float::with_val(prec, Float::i_exp(1, -16));
    let grown = Float::with_val_round(prec, &radius * &margin, Round::Up).0;
    let grown = Float::with_val_round(prec, &radius + &grown, Round::Up).0;
    Some(Float::with_val_round(prec, &grown + &margin, Round::Up).0)
}

/// A list of disjoint cells that together hold every real root of a sum.
#[derive(Clone, Debug)]
pub struct RootCertificate {
    /// Each interval has certified opposite endpoint signs and holds exactly one root.
    pub isolating: Vec<Interval>,
    /// Narrow cells where a root may or may not exist (tangential candidates).
    pub ambiguous: Vec<Interval>,
    /// The sign is constant on `(−∞, −M]` and on `[M, ∞)`.
    pub tail_radius: Float,
    /// Sign of the sum on `(−∞, −M]`.
    pub left_tail_sign: Ordering,
    /// Sign of the sum on `[M, ∞)`.
    pub right_tail_sign: Ordering,
    /// Root-count bound: number of terms minus one.
    pub upper_bound: usize,
    /// Precision in bits at which every sign was certified.
    pub precision: u32,
}

impl RootCertificate {
    pub fn reported(&self) -> usize {
        self.isolating.len() + self.ambiguous.len()
    }

    /// Every certified cell, sorted left to right.
    pub fn all_cells(&self) -> Vec<&Interval> {
        let mut cells: Vec<&Interval> = self.isolating.iter().chain(&self.ambiguous).collect();
        cells.sort_by(|a, b| a.lo().partial_cmp(b.lo()).unwrap());
        cells
    }

    pub fn to_json(&self) -> serde_json::Value {
        let cells = |v: &[Interval]| -> Vec<serde_json::Value> {
            v.iter()
                .map(|i| {
                    let (lo, hi) = i.to_decimal_strings(DECIMAL_DIGITS);
                    json!({ "lo": lo, "hi": hi })
                })
                .collect()
        };
        json!({
            "precision_bits": self.precision,
            "digits": DECIMAL_DIGITS,
            "tail_radius": self.tail_radius.to_string_radix_round(10, Some(DECIMAL_DIGITS), Round::Up),
            "left_tail_sign": sign_str(self.left_tail_sign),
            "right_tail_sign": sign_str(self.right_tail_sign),
            "upper_bound": self.upper_bound,
            "isolating": cells(&self.isolating),
            "ambiguous": cells(&self.ambiguous),
        })
    }
}

pub(crate) const DECIMAL_DIGITS: usize = 25;

pub(crate) fn sign_str(s: Ordering) -> &'static str {
    match s {
        Ordering::Less => "-",
        Ordering::Equal => "0",
        Ordering::Greater => "+",
    }
}

/// Isolates every real root of `f`.
pub fn isolate_roots(f: &ExpSum, cfg: &IsolationConfig) -> Result<RootCertificate, RootError> {
    cfg.validate()?;
    if f.is_zero() {
        return Err(RootError::EmptySum);
    }
    let chain = Chain::new(ChainLevel::from_sum(f), cfg)?;
    with_precision(cfg, |prec| {
        let levels = chain.numeric(f, prec);
        let top = &levels[0];
        let radius = tail_radius_checked(top).ok_or(Unresolved)?;
        let lo = Float::with_val(prec, -&radius);
        let left_tail_sign = top.point_sign(&lo).ok_or(Unresolved)?;
        let right_tail_sign = top.point_sign(&radius).ok_or(Unresolved)?;
        let iso = Isolator::new(&levels, cfg, prec);
        let cells = iso.cells(0, &lo, &radius)?;
        let (isolating, ambiguous) = iso.finish(cells)?;
        Ok(RootCertificate {
            isolating,
            ambiguous,
            tail_radius: radius,
            left_tail_sign,
            right_tail_sign,
            upper_bound: top.rank() - 1,
            precision: prec,
        })
    })
}

/// Isolates the solutions of `f(t) = c` for an exponential-like `f`.
///
/// `f − c` has at most `rank(f) + 1` terms, so at most `rank(f)` roots.
pub fn preimage_count(
    f: &ExpSum,
    c: &Rational,
    cfg: &IsolationConfig,
) -> Result<RootCertificate, RootError> {
    if !f.is_exponential_like() {
        return Err(RootError::NotExponentialLike);
    }
    isolate_roots(&(f - &ExpSum::constant(c.clone())), cfg)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Increasing,
    Decreasing,
}

/// A closed interval on which the sum is certified strictly monotone.
#[derive(Clone, Debug)]
pub struct MonotonePiece {
    pub domain: Interval,
    pub direction: Direction,
}

/// Splits `domain` into pieces on which `f` is strictly monotone.
///
/// Consecutive pieces are separated by gaps no wider than `tol` that hold
/// the critical points. The number of pieces never exceeds the number of
/// nonconstant terms.
pub fn monotone_decomposition(
    f: &ExpSum,
    domain: &Interval,
    cfg: &IsolationConfig,
) -> Result<Vec<MonotonePiece>, RootError> {
    cfg.validate()?;
    let first = ChainLevel::derivative_of(f);
    if first.terms.is_empty() {
        return Err(RootError::NotExponentialLike);
    }
    let chain = Chain::new(first, cfg)?;
    with_precision(cfg, |prec| {
        let levels = chain.numeric(f, prec);
        let a = Float::with_val_round(prec, domain.lo(), Round::Down).0;
        let b = Float::with_val_round(prec, domain.hi(), Round::Up).0;
        let iso = Isolator::new(&levels, cfg, prec);
        let cells = iso.cells(0, &a, &b)?;
        let (isolating, ambiguous) = iso.finish(cells)?;
        let mut gaps: Vec<Interval> = isolating.into_iter().chain(ambiguous).collect();
        gaps.sort_by(|x, y| x.lo().partial_cmp(y.lo()).unwrap());

        let deriv = &levels[0];
        let mut pieces = Vec::new();
        let mut start = a.clone();
        let bounds = gaps
            .iter()
            .map(|g| (g.lo().clone(), g.hi().clone()))
            .chain(std::iter::once((b.clone(), b.clone())));
        for (gap_lo, gap_hi) in bounds {
            if start < gap_lo {
                let piece = Interval::new(start.clone(), gap_lo.clone());
                let sign = deriv
                    .point_sign(&piece.mid())
                    .or_else(|| deriv.point_sign(piece.lo()))
                    .or_else(|| deriv.point_sign(piece.hi()))
                    .ok_or(Unresolved)?;
                let direction = if sign == Ordering::Greater {
                    Direction::Increasing
                } else {
                    Direction::Decreasing
                };
                pieces.push(MonotonePiece {
                    domain: piece,
                    direction,
                });
            }
            start = gap_hi;
        }
        if pieces.len() > deriv.rank() {
            return Err(Unresolved);
        }
        Ok(pieces)
    })
}

struct Unresolved;

fn with_precision<T>(
    cfg: &IsolationConfig,
    mut attempt: impl FnMut(u32) -> Result<T, Unresolved>,
) -> Result<T, RootError> {
    let mut last = cfg.precision;
    for prec in cfg.precisions() {
        last = prec;
        if let Ok(v) = attempt(prec) {
            return Ok(v);
        }
    }
    Err(RootError::PrecisionExhausted(last))
}

#[derive(Clone, Debug)]
struct ChainTerm {
    coeff: Rational,
    exponent: ExponentVector,
    /// Exact reals multiplying `coeff`, accumulated by differentiation.
    multipliers: Vec<ExponentVector>,
}

#[derive(Clone, Debug)]
struct ChainLevel {
    terms: Vec<ChainTerm>,
}

impl ChainLevel {
    fn from_sum(f: &ExpSum) -> Self {
        ChainLevel {
            terms: f
                .terms()
                .iter()
                .map(|t| ChainTerm {
                    coeff: t.coeff.clone(),
                    exponent: t.exponent.clone(),
                    multipliers: Vec::new(),
                })
                .collect(),
        }
    }

    fn derivative_of(f: &ExpSum) -> Self {
        ChainLevel {
            terms: f
                .terms()
                .iter()
                .filter(|t| !t.exponent.is_zero())
                .map(|t| ChainTerm {
                    coeff: t.coeff.clone(),
                    exponent: t.exponent.clone(),
                    multipliers: vec![t.exponent.clone()],
                })
                .collect(),
        }
    }

    /// Sorted by the numeric value of the exponents, if `prec` separates them.
    fn sorted(&self, prec: u32) -> Option<ChainLevel> {
        let mut keyed: Vec<(Interval, ChainTerm)> = self
            .terms
            .iter()
            .map(|t| (t.exponent.enclosure(prec), t.clone()))
            .collect();
        keyed.sort_by(|a, b| a.0.mid().partial_cmp(&b.0.mid()).unwrap());
        if keyed.windows(2).any(|w| w[0].0.hi() >= w[1].0.lo()) {
            return None;
        }
        Some(ChainLevel {
            terms: keyed.into_iter().map(|(_, t)| t).collect(),
        })
    }

    /// `d/dt [exp(−β_min t) · self]`.
    fn next(&self) -> Option<ChainLevel> {
        let (min, rest) = self.terms.split_first()?;
        if rest.is_empty() {
            return None;
        }
        Some(ChainLevel {
            terms: rest
                .iter()
                .map(|t| {
                    let exponent = &t.exponent - &min.exponent;
                    let mut multipliers = t.multipliers.clone();
                    multipliers.push(exponent.clone());
                    ChainTerm {
                        coeff: t.coeff.clone(),
                        exponent,
                        multipliers,
                    }
                })
                .collect(),
        })
    }

    fn numeric(&self, provenance: &ExpSum, prec: u32) -> NumericExpSum {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let coeff = t
                    .multipliers
                    .iter()
                    .fold(Interval::from_rational(&t.coeff, prec), |acc, m| {
                        &acc * &m.enclosure(prec)
                    });
                NumericTerm {
                    coeff,
                    beta: t.exponent.enclosure(prec),
                }
            })
            .collect();
        NumericExpSum {
            terms,
            provenance: provenance.clone(),
            precision: prec,
        }
    }
}

/// The full Rolle chain, from the input sum down to a single term.
struct Chain {
    levels: Vec<ChainLevel>,
}

impl Chain {
    fn new(first: ChainLevel, cfg: &IsolationConfig) -> Result<Self, RootError> {
        let sorted = cfg
            .precisions()
            .chain([1 << 14, 1 << 16])
            .find_map(|p| first.sorted(p))
            .ok_or(RootError::PrecisionExhausted(1 << 16))?;
        let levels: Vec<ChainLevel> = std::iter::successors(Some(sorted), |l| l.next()).collect();
        Ok(Chain { levels })
    }

    fn numeric(&self, provenance: &ExpSum, prec: u32) -> Vec<NumericExpSum> {
        self.levels
            .iter()
            .map(|l| l.numeric(provenance, prec))
            .collect()
    }
}

#[derive(Clone, Debug)]
enum CellKind {
    /// Exactly one sign change; the sign at the left end is recorded.
    Isolating {
        lo_sign: Ordering,
    },
    Ambiguous,
}

#[derive(Clone, Debug)]
struct Cell {
    lo: Float,
    hi: Float,
    kind: CellKind,
}

/// A critical cell after classification against the level above it.
struct Classified {
    lo: Float,
    hi: Float,
    lo_sign: Ordering,
    hi_sign: Ordering,
    /// `None` when the level has a certified constant sign on the cell.
    cell: Option<CellKind>,
}

const SPLITS: [(u32, u32); 7] = [(1, 2), (7, 16), (9, 16), (3, 8), (5, 8), (1, 4), (3, 4)];
const NUDGE_STEPS: u32 = 24;

struct Isolator<'a> {
    levels: &'a [NumericExpSum],
    prec: u32,
    floor: Float,
    tol: Float,
}

impl<'a> Isolator<'a> {
    fn new(levels: &'a [NumericExpSum], cfg: &IsolationConfig, prec: u32) -> Self {
        Isolator {
            levels,
            prec,
            floor: cfg.floor_float(prec),
            tol: cfg.tol_float(prec),
        }
    }

    fn width(&self, lo: &Float, hi: &Float) -> Float {
        Float::with_val_round(self.prec, hi - lo, Round::Up).0
    }

    /// One bisection step on a cell with opposite endpoint signs of `h`.
    fn bisect(&self, h: &NumericExpSum, cell: &mut Cell) -> Result<(), Unresolved> {
        let CellKind::Isolating { lo_sign, .. } = cell.kind else {
            return Err(Unresolved);
        };
        let width = self.width(&cell.lo, &cell.hi);
        for (num, den) in SPLITS {
            let offset = Float::with_val(self.prec, &width * num) / den;
            let m = Float::with_val(self.prec, &cell.lo + &offset);
            if m <= cell.lo || m >= cell.hi {
                continue;
            }
            if let Some(s) = h.point_sign(&m) {
                if s == lo_sign {
                    cell.lo = m;
                } else {
                    cell.hi = m;
                }
                return Ok(());
            }
        }
        Err(Unresolved)
    }

    /// Cells of level `k` on `[a, b]` that contain all of its roots there.
    ///
    /// Isolating cells are not narrowed beyond what classification needs;
    /// callers that want narrow cells bisect them further.
    fn cells(&self, k: usize, a: &Float, b: &Float) -> Result<Vec<Cell>, Unresolved> {
        let h = &self.levels[k];
        if h.rank() <= 1 || a > b {
            return Ok(Vec::new());
        }
        let mut head = None;
        let mut tail = None;
        let (a, sa) = match h.point_sign(a) {
            Some(s) => (a.clone(), s),
            None => {
                let (a2, s) = self.nudge(h, a, b, true)?;
                head = Some(Cell {
                    lo: a.clone(),
                    hi: a2.clone(),
                    kind: CellKind::Ambiguous,
                });
                (a2, s)
            }
        };
        let (b, sb) = match h.point_sign(b) {
            Some(s) => (b.clone(), s),
            None => {
                let (b2, s) = self.nudge(h, b, &a, false)?;
                tail = Some(Cell {
                    lo: b2.clone(),
                    hi: b.clone(),
                    kind: CellKind::Ambiguous,
                });
                (b2, s)
            }
        };
        if a > b {
            // The nudges met: the whole domain is one narrow ambiguous cell.
            let lo = head.map(|c| c.lo).unwrap_or(a);
            let hi = tail.map(|c| c.hi).unwrap_or(b);
            return Ok(vec![Cell {
                lo,
                hi,
                kind: CellKind::Ambiguous,
            }]);
        }

        let critical = if k + 1 < self.levels.len() {
            self.cells(k + 1, &a, &b)?
        } else {
            Vec::new()
        };
        let mut classified = Vec::with_capacity(critical.len());
        for c in critical {
            classified.push(self.classify(k, c)?);
        }

        let mut out: Vec<Cell> = head.into_iter().collect();
        let mut start = (a, sa);
        for c in classified {
            if start.0 < c.lo && start.1 != c.lo_sign {
                out.push(Cell {
                    lo: start.0.clone(),
                    hi: c.lo.clone(),
                    kind: CellKind::Isolating { lo_sign: start.1 },
                });
            }
            if let Some(kind) = c.cell {
                out.push(Cell {
                    lo: c.lo,
                    hi: c.hi.clone(),
                    kind,
                });
            }
            start = (c.hi, c.hi_sign);
        }
        if start.0 < b && start.1 != sb {
            out.push(Cell {
                lo: start.0,
                hi: b,
                kind: CellKind::Isolating { lo_sign: start.1 },
            });
        }
        out.extend(tail);
        if out.len() > h.rank() - 1 {
            return Err(Unresolved);
        }
        Ok(out)
    }

    /// Moves a domain endpoint whose sign is undecidable inward until it is.
    fn nudge(
        &self,
        h: &NumericExpSum,
        from: &Float,
        limit: &Float,
        rightward: bool,
    ) -> Result<(Float, Ordering), Unresolved> {
        let mut step = self.floor.clone();
        for _ in 0..NUDGE_STEPS {
            if step > self.tol {
                break;
            }
            let x = if rightward {
                Float::with_val_round(self.prec, from + &step, Round::Up).0
            } else {
                Float::with_val_round(self.prec, from - &step, Round::Down).0
            };
            if (rightward && &x >= limit) || (!rightward && &x <= limit) {
                break;
            }
            if let Some(s) = h.point_sign(&x) {
                return Ok((x, s));
            }
            step *= 2;
        }
        Err(Unresolved)
    }

    /// Decides whether level `k` can vanish on a critical cell of level `k + 1`.
    fn classify(&self, k: usize, mut c: Cell) -> Result<Classified, Unresolved> {
        let h = &self.levels[k];
        let below = &self.levels[k + 1];
        loop {
            let enc = h.evaluate_cell(&Interval::new(c.lo.clone(), c.hi.clone()));
            if let Some(s) = enc.strict_sign() {
                return Ok(Classified {
                    lo: c.lo,
                    hi: c.hi,
                    lo_sign: s,
                    hi_sign: s,
                    cell: None,
                });
            }
            let refinable = matches!(c.kind, CellKind::Isolating { .. })
                && self.width(&c.lo, &c.hi) > self.floor;
            if !refinable {
                break;
            }
            self.bisect(below, &mut c)?;
        }
        let lo_sign = h.point_sign(&c.lo).ok_or(Unresolved)?;
        let hi_sign = h.point_sign(&c.hi).ok_or(Unresolved)?;
        // Exactly one critical point inside: opposite signs pin exactly one root.
        let kind = match c.kind {
            CellKind::Isolating { .. } if lo_sign != hi_sign => CellKind::Isolating { lo_sign },
            _ => CellKind::Ambiguous,
        };
        Ok(Classified {
            lo: c.lo,
            hi: c.hi,
            lo_sign,
            hi_sign,
            cell: Some(kind),
        })
    }

    /// Narrows isolating cells of level 0 to `tol` and splits by kind.
    fn finish(&self, cells: Vec<Cell>) -> Result<(Vec<Interval>, Vec<Interval>), Unresolved> {
        let h = &self.levels[0];
        let mut isolating = Vec::new();
        let mut ambiguous = Vec::new();
        for mut c in cells {
            match c.kind {
                CellKind::Isolating { .. } => {
                    while self.width(&c.lo, &c.hi) > self.tol {
                        self.bisect(h, &mut c)?;
                    }
                    isolating.push(Interval::new(c.lo, c.hi));
                }
                CellKind::Ambiguous => ambiguous.push(Interval::new(c.lo, c.hi)),
            }
        }
        Ok((isolating, ambiguous))
    }
}
