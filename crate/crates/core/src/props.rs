//! Finite-resolution property checks on witnesses, compositions and
//! sequences.
//!
//! "Nowhere" and "everywhere" properties have no finite certificate; the
//! sampled checks here report evidence only and say so in their JSON.
//! Grids are deterministic so that reports are reproducible.

use rug::float::Round;
use rug::ops::Pow;
use rug::{Float, Rational};
use serde_json::json;
use thiserror::Error;

use crate::expsum::ExpSum;
use crate::interval::{max_float, min_float, Interval, DEFAULT_PRECISION};
use crate::rootiso::{NumericExpSum, RootError};
use crate::witnesses::{CantorSequence, Exactness, Value, WitnessError, WitnessHandle};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PropsError {
    #[error(transparent)]
    Witness(#[from] WitnessError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("point {0} is not interior to the sampling window")]
    NotInterior(String),
    #[error("radii and scales must be positive")]
    BadRadius,
    #[error("sequence prefix has {0} terms; at least 10 are needed")]
    TooShort(usize),
    #[error("need at least two points")]
    TooFewPoints,
    #[error("Hölder exponent must lie in (0, 1]")]
    BadAlpha,
    #[error("grid size must be at least 2")]
    BadGrid,
    #[error("sequence contains non-finite values")]
    NonFinite,
    #[error("no sample points fall inside the window")]
    NoSamples,
    #[error("invalid window: lower end must be below upper end")]
    BadWindow,
}

/// Oscillation grids use this many points per radius.
pub const OSCILLATION_GRID: u32 = 1001;
/// Points on each side of `x` per scale in the Hölder scan.
pub const HOLDER_SAMPLES: u32 = 32;

/// A function together with the window it is sampled on.
#[derive(Clone)]
pub struct SampledFunction {
    f: WitnessHandle,
    lo: Rational,
    hi: Rational,
    prec: u32,
}

impl SampledFunction {
    pub fn new(f: WitnessHandle) -> Self {
        let (lo, hi) = f.sample_window();
        SampledFunction {
            f,
            lo,
            hi,
            prec: DEFAULT_PRECISION,
        }
    }

    pub fn with_window(f: WitnessHandle, lo: Rational, hi: Rational) -> Result<Self, PropsError> {
        if lo >= hi {
            return Err(PropsError::BadWindow);
        }
        Ok(SampledFunction {
            f,
            lo,
            hi,
            prec: DEFAULT_PRECISION,
        })
    }

    pub fn with_precision(mut self, prec: u32) -> Self {
        self.prec = prec;
        self
    }

    pub fn function(&self) -> &WitnessHandle {
        &self.f
    }

    pub fn window(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }

    pub fn is_exact(&self) -> bool {
        self.f.exactness() == Exactness::Exact
    }

    pub fn eval(&self, x: &Rational) -> Result<Value, PropsError> {
        Ok(self.f.eval(x, self.prec)?)
    }

    fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    fn disclaimer_json(&self) -> serde_json::Value {
        self.f
            .disclaimer()
            .map_or(serde_json::Value::Null, |d| json!(d))
    }
}

/// `lo + (hi − lo)·i/(n − 1)` for `i < n`.
fn uniform_grid(lo: &Rational, hi: &Rational, n: u32) -> Vec<Rational> {
    let span = Rational::from(hi - lo);
    (0..n)
        .map(|i| lo + Rational::from(&span * i) / (n - 1))
        .collect()
}

#[derive(Clone, Debug)]
pub struct OscillationSample {
    pub radius: Rational,
    /// Certified lower bound of `max − min` over the sampled points.
    pub lower: Float,
    /// Upper bound of the same quantity.
    pub upper: Float,
    pub points: usize,
}

/// Running extremes of a set of values, exact when every value was exact.
struct Extremes {
    exact: Option<(Rational, Rational)>,
    all_exact: bool,
    min_lo: Option<Float>,
    max_lo: Option<Float>,
    min_hi: Option<Float>,
    max_hi: Option<Float>,
    count: usize,
}

impl Extremes {
    fn new() -> Self {
        Extremes {
            exact: None,
            all_exact: true,
            min_lo: None,
            max_lo: None,
            min_hi: None,
            max_hi: None,
            count: 0,
        }
    }

    fn push(&mut self, v: &Value, prec: u32) {
        self.count += 1;
        match v {
            Value::Exact(q) => {
                self.exact = Some(match self.exact.take() {
                    None => (q.clone(), q.clone()),
                    Some((lo, hi)) => (lo.min(q.clone()), hi.max(q.clone())),
                });
            }
            Value::Enclosure(_) => self.all_exact = false,
        }
        let e = v.enclosure(prec);
        let upd = |slot: &mut Option<Float>, x: &Float, pick: fn(&Float, &Float) -> Float| {
            *slot = Some(slot.as_ref().map_or_else(|| x.clone(), |s| pick(s, x)));
        };
        upd(&mut self.min_lo, e.lo(), min_float);
        upd(&mut self.max_lo, e.lo(), max_float);
        upd(&mut self.min_hi, e.hi(), min_float);
        upd(&mut self.max_hi, e.hi(), max_float);
    }

    fn spread(&self, prec: u32) -> (Float, Float) {
        if self.all_exact {
            if let Some((lo, hi)) = &self.exact {
                let d = Interval::from_rational(&Rational::from(hi - lo), prec);
                return (d.lo().clone(), d.hi().clone());
            }
        }
        let zero = Float::with_val(prec, 0);
        match (&self.min_lo, &self.max_lo, &self.min_hi, &self.max_hi) {
            (Some(min_lo), Some(max_lo), Some(min_hi), Some(max_hi)) => {
                let lower = Float::with_val_round(prec, max_lo - min_hi, Round::Down).0;
                let upper = Float::with_val_round(prec, max_hi - min_lo, Round::Up).0;
                (max_float(&lower, &zero), upper)
            }
            _ => (zero.clone(), zero),
        }
    }
}

/// Oscillation of `F` on `[x − r, x + r]` for each radius `r`.
///
/// Each radius contributes a uniform grid of [`OSCILLATION_GRID`] points
/// (clipped to the window). Grids of smaller radii are folded into larger
/// ones, so the reported oscillation never increases as the radius shrinks.
/// Results come back in the order of `radii`.
pub fn oscillation_at(
    f: &SampledFunction,
    x: &Rational,
    radii: &[Rational],
) -> Result<Vec<OscillationSample>, PropsError> {
    if !(f.lo < *x && *x < f.hi) {
        return Err(PropsError::NotInterior(x.to_string()));
    }
    if radii.iter().any(|r| *r <= 0) {
        return Err(PropsError::BadRadius);
    }
    let mut order: Vec<usize> = (0..radii.len()).collect();
    order.sort_by(|&a, &b| radii[a].cmp(&radii[b]));
    let mut ext = Extremes::new();
    let mut out: Vec<Option<OscillationSample>> = vec![None; radii.len()];
    for idx in order {
        let r = &radii[idx];
        let lo = Rational::from(x - r);
        let hi = Rational::from(x + r);
        for t in uniform_grid(&lo, &hi, OSCILLATION_GRID) {
            if f.contains(&t) {
                ext.push(&f.eval(&t)?, f.prec);
            }
        }
        let (lower, upper) = ext.spread(f.prec);
        out[idx] = Some(OscillationSample {
            radius: r.clone(),
            lower,
            upper,
            points: ext.count,
        });
    }
    Ok(out
        .into_iter()
        .map(|s| s.expect("every radius visited"))
        .collect())
}

pub fn oscillation_json(
    f: &SampledFunction,
    x: &Rational,
    samples: &[OscillationSample],
) -> serde_json::Value {
    json!({
        "check": "oscillation",
        "status": "evidence",
        "function": f.function().name(),
        "disclaimer": f.disclaimer_json(),
        "x": x.to_string(),
        "samples": samples.iter().map(|s| json!({
            "radius": s.radius.to_string(),
            "lower": s.lower.to_f64_round(Round::Down),
            "upper": s.upper.to_f64_round(Round::Up),
            "points": s.points,
        })).collect::<Vec<_>>(),
    })
}

/// Cluster representatives of the tail of a sequence prefix.
#[derive(Clone, Debug, PartialEq)]
pub struct LimitSetEstimate {
    /// Ascending; consecutive points are more than `resolution` apart.
    pub points: Vec<f64>,
    pub resolution: f64,
    pub source_len: usize,
}

impl LimitSetEstimate {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "check": "limset",
            "status": "evidence",
            "source_len": self.source_len,
            "resolution": self.resolution,
            "clusters": self.points.len(),
            "points": self.points,
        })
    }
}

/// Single-linkage clustering of `{x(n) : n > N/2}` at `resolution`; each
/// cluster is represented by the midpoint of its range.
pub fn limset(values: &[f64], resolution: f64) -> Result<LimitSetEstimate, PropsError> {
    if values.len() < 10 {
        return Err(PropsError::TooShort(values.len()));
    }
    if !(resolution.is_finite() && resolution > 0.0) {
        return Err(PropsError::BadRadius);
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(PropsError::NonFinite);
    }
    let mut tail: Vec<f64> = values[values.len() / 2..].to_vec();
    tail.sort_by(f64::total_cmp);
    let mut points = Vec::new();
    let mut start = tail[0];
    let mut prev = tail[0];
    for &v in &tail[1..] {
        if v - prev > resolution {
            points.push((start + prev) / 2.0);
            start = v;
        }
        prev = v;
    }
    points.push((start + prev) / 2.0);
    Ok(LimitSetEstimate {
        points,
        resolution,
        source_len: values.len(),
    })
}

/// Hausdorff distance between two finite nonempty point sets.
pub fn hausdorff(a: &[f64], b: &[f64]) -> f64 {
    fn directed(from: &[f64], to_sorted: &[f64]) -> f64 {
        from.iter()
            .map(|&x| {
                let i = to_sorted.partition_point(|&y| y < x);
                let right = to_sorted.get(i).map_or(f64::INFINITY, |&y| y - x);
                let left = i.checked_sub(1).map_or(f64::INFINITY, |j| x - to_sorted[j]);
                right.min(left)
            })
            .fold(0.0, f64::max)
    }
    let mut sa = a.to_vec();
    let mut sb = b.to_vec();
    sa.sort_by(f64::total_cmp);
    sb.sort_by(f64::total_cmp);
    directed(a, &sb).max(directed(b, &sa))
}

#[derive(Clone, Debug, PartialEq)]
pub struct CantorScore {
    /// Points with no other point within ten times the resolution.
    pub isolated_points: usize,
    /// Largest gap between consecutive points divided by the total span.
    pub max_gap_ratio: f64,
}

impl CantorScore {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "check": "cantor_structure",
            "status": "evidence",
            "isolated_points": self.isolated_points,
            "max_gap_ratio": self.max_gap_ratio,
        })
    }
}

pub fn cantor_structure_score(e: &LimitSetEstimate) -> Result<CantorScore, PropsError> {
    if e.points.len() < 2 {
        return Err(PropsError::TooFewPoints);
    }
    let mut pts = e.points.clone();
    pts.sort_by(f64::total_cmp);
    let reach = 10.0 * e.resolution;
    let gaps: Vec<f64> = pts.windows(2).map(|w| w[1] - w[0]).collect();
    let isolated_points = (0..pts.len())
        .filter(|&i| {
            let left = i.checked_sub(1).map_or(f64::INFINITY, |j| gaps[j]);
            let right = gaps.get(i).copied().unwrap_or(f64::INFINITY);
            left.min(right) > reach
        })
        .count();
    let span = pts[pts.len() - 1] - pts[0];
    let max_gap = gaps.iter().copied().fold(0.0, f64::max);
    Ok(CantorScore {
        isolated_points,
        max_gap_ratio: if span > 0.0 { max_gap / span } else { 0.0 },
    })
}

/// Values of the Cantor sequence through `level`, as floats.
pub fn cantor_prefix_f64(level: u32) -> Vec<f64> {
    CantorSequence::prefix(CantorSequence::len_through_level(level))
        .iter()
        .map(Rational::to_f64)
        .collect()
}

/// Base-2 van der Corput point `i`, in `[0, 1)`.
fn van_der_corput(mut i: u32) -> Rational {
    let mut num = 0u64;
    let mut den = 1u64;
    while i > 0 {
        num = 2 * num + u64::from(i & 1);
        den *= 2;
        i >>= 1;
    }
    Rational::from((num, den))
}

#[derive(Clone, Debug)]
pub struct HolderSample {
    pub scale: f64,
    pub quotient: f64,
    pub samples: usize,
}

/// For each scale `h`, the largest `|F(x) − F(y)| / |x − y|^α` over
/// low-discrepancy offsets `|x − y| ∈ [h/2, h)` on both sides of `x`.
pub fn holder_quotient_scan(
    f: &SampledFunction,
    x: &Rational,
    alpha: f64,
    scales: &[f64],
) -> Result<Vec<HolderSample>, PropsError> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(PropsError::BadAlpha);
    }
    if scales.iter().any(|h| !(h.is_finite() && *h > 0.0)) {
        return Err(PropsError::BadRadius);
    }
    let fx = f.eval(x)?.enclosure(f.prec);
    let mut out = Vec::with_capacity(scales.len());
    for &h in scales {
        let h_q = Rational::from_f64(h).expect("finite");
        let mut best = 0.0f64;
        let mut samples = 0;
        for i in 1..=HOLDER_SAMPLES {
            let u = van_der_corput(i);
            let delta = (&h_q * (Rational::from(1) + u)) / 2u32;
            for y in [Rational::from(x + &delta), Rational::from(x - &delta)] {
                if !f.contains(&y) {
                    continue;
                }
                let fy = f.eval(&y)?.enclosure(f.prec);
                let diff = (&fx - &fy).mid().to_f64().abs();
                let q = diff / delta.to_f64().powf(alpha);
                best = best.max(q);
                samples += 1;
            }
        }
        if samples == 0 {
            return Err(PropsError::NoSamples);
        }
        out.push(HolderSample {
            scale: h,
            quotient: best,
            samples,
        });
    }
    Ok(out)
}

pub fn holder_json(
    f: &SampledFunction,
    x: &Rational,
    alpha: f64,
    samples: &[HolderSample],
) -> serde_json::Value {
    json!({
        "check": "holder_scan",
        "status": "evidence",
        "function": f.function().name(),
        "disclaimer": f.disclaimer_json(),
        "x": x.to_string(),
        "alpha": alpha,
        "samples": samples.iter().map(|s| json!({
            "scale": s.scale, "quotient": s.quotient, "samples": s.samples,
        })).collect::<Vec<_>>(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeResult {
    pub grid_size: u32,
    /// Two grid points whose values are equal (exact) or whose enclosures overlap.
    pub collision: Option<(Rational, Rational)>,
}

impl ProbeResult {
    pub fn collision_found(&self) -> bool {
        self.collision.is_some()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "check": "one_to_one",
            "status": if self.collision.is_some() { "certified" } else { "evidence" },
            "grid_size": self.grid_size,
            "collision_found": self.collision.is_some(),
            "pair": self.collision.as_ref().map(|(a, b)| vec![a.to_string(), b.to_string()]),
        })
    }
}

/// Looks for two grid points with equal values. For enclosure-valued
/// functions overlapping enclosures count as a collision.
pub fn one_to_one_probe(f: &SampledFunction, grid_size: u32) -> Result<ProbeResult, PropsError> {
    if grid_size < 2 {
        return Err(PropsError::BadGrid);
    }
    let grid = uniform_grid(&f.lo, &f.hi, grid_size);
    let values = grid
        .iter()
        .map(|x| f.eval(x))
        .collect::<Result<Vec<_>, _>>()?;
    let exact: Option<Vec<&Rational>> = values.iter().map(Value::as_exact).collect();
    let collision = if let Some(exact) = exact {
        let mut idx: Vec<usize> = (0..grid.len()).collect();
        idx.sort_by(|&a, &b| exact[a].cmp(exact[b]));
        idx.windows(2)
            .find(|w| exact[w[0]] == exact[w[1]])
            .map(|w| (w[0], w[1]))
    } else {
        let encl: Vec<Interval> = values.iter().map(|v| v.enclosure(f.prec)).collect();
        let mut idx: Vec<usize> = (0..grid.len()).collect();
        idx.sort_by(|&a, &b| encl[a].lo().partial_cmp(encl[b].lo()).unwrap());
        idx.windows(2)
            .find(|w| encl[w[0]].overlaps(&encl[w[1]]))
            .map(|w| (w[0], w[1]))
    };
    Ok(ProbeResult {
        grid_size,
        collision: collision.map(|(a, b)| {
            let (a, b) = (a.min(b), a.max(b));
            (grid[a].clone(), grid[b].clone())
        }),
    })
}

#[derive(Clone, Debug)]
pub struct LuzinSample {
    pub level: u32,
    /// Upper bound on the total length of the images of the level intervals.
    pub image_length: Float,
    /// `max|f′| · (hi − lo) · (2/3)^level`, rounded up.
    pub bound: Float,
    pub holds: bool,
}

/// Maps the level-`k` middle-thirds intervals of `[lo, hi]` through `f`
/// and compares the total image length with the derivative bound.
pub fn luzin_spot_check(
    f: &ExpSum,
    lo: &Rational,
    hi: &Rational,
    max_level: u32,
) -> Result<Vec<LuzinSample>, PropsError> {
    if lo >= hi {
        return Err(PropsError::BadWindow);
    }
    let prec = DEFAULT_PRECISION;
    let span = Rational::from(hi - lo);
    let numeric = NumericExpSum::new(f, prec)?;
    let slope = numeric
        .derivative_evaluate(&Interval::from_rationals(lo, hi, prec))
        .mag();
    let mut out = Vec::new();
    for level in 0..=max_level {
        let width = Rational::from(&span / rug::Integer::from(3).pow(level));
        let mut total = Float::with_val(prec, 0);
        for e in CantorSequence::level_endpoints(level) {
            let left = lo + Rational::from(&span * &e);
            let right = Rational::from(&left + &width);
            let image = &f.evaluate_rational(&right, prec) - &f.evaluate_rational(&left, prec);
            total = Float::with_val_round(prec, &total + &image.mag(), Round::Up).0;
        }
        let factor = Interval::from_rational(
            &(&span * Rational::from((2u32, 3u32)).pow(level as i32)),
            prec,
        );
        let bound = Float::with_val_round(prec, &slope * factor.hi(), Round::Up).0;
        out.push(LuzinSample {
            level,
            holds: total <= bound,
            image_length: total,
            bound,
        });
    }
    Ok(out)
}

pub fn luzin_json(samples: &[LuzinSample]) -> serde_json::Value {
    json!({
        "check": "luzin_n",
        "status": "evidence",
        "levels": samples.iter().map(|s| json!({
            "level": s.level,
            "image_length": s.image_length.to_f64_round(Round::Up),
            "bound": s.bound.to_f64_round(Round::Up),
            "holds": s.holds,
        })).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expsum::ExponentVector;
    use crate::witnesses::{BumpWitness, Identity, StepWitness};
    use std::sync::Arc;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    fn radii() -> Vec<Rational> {
        (1..=6).map(|k| q(1, 1 << (2 * k))).collect()
    }

    #[test]
    fn bump_oscillation_vanishes() {
        let f = SampledFunction::new(Arc::new(BumpWitness));
        let s = oscillation_at(&f, &q(1, 2), &radii()).unwrap();
        for w in s.windows(2) {
            assert!(w[1].upper <= w[0].upper);
        }
        assert!(s.last().unwrap().upper.to_f64() < 1e-3);
    }

    #[test]
    fn step_jump_persists() {
        let f = SampledFunction::new(Arc::new(StepWitness));
        for s in oscillation_at(&f, &q(1, 2), &radii()).unwrap() {
            assert!(s.lower >= 0.5, "radius {}", s.radius);
        }
    }

    #[test]
    fn oscillation_rejects_boundary_point() {
        let f = SampledFunction::new(Arc::new(StepWitness));
        assert!(matches!(
            oscillation_at(&f, &q(0, 1), &radii()),
            Err(PropsError::NotInterior(_))
        ));
    }

    #[test]
    fn limset_of_constant_sequence() {
        let e = limset(&[1.0; 20], 1e-3).unwrap();
        assert_eq!(e.points, vec![1.0]);
        assert!(matches!(
            limset(&[1.0; 5], 1e-3),
            Err(PropsError::TooShort(5))
        ));
    }

    #[test]
    fn structure_score_of_two_points() {
        let e = LimitSetEstimate {
            points: vec![0.0, 1.0],
            resolution: 0.01,
            source_len: 10,
        };
        let s = cantor_structure_score(&e).unwrap();
        assert_eq!(s.isolated_points, 2);
        assert_eq!(s.max_gap_ratio, 1.0);
    }

    #[test]
    fn hausdorff_basic() {
        assert_eq!(hausdorff(&[0.0, 1.0], &[0.0, 1.0]), 0.0);
        assert_eq!(hausdorff(&[0.0], &[0.0, 0.5]), 0.5);
    }

    #[test]
    fn holder_identity() {
        let f = SampledFunction::new(Arc::new(Identity));
        let scales = [1e-2, 1e-3, 1e-4];
        let one = holder_quotient_scan(&f, &q(1, 2), 1.0, &scales).unwrap();
        assert!(one.iter().all(|s| (s.quotient - 1.0).abs() < 1e-9));
        let half = holder_quotient_scan(&f, &q(1, 2), 0.5, &scales).unwrap();
        assert!(half.windows(2).all(|w| w[1].quotient < w[0].quotient));
        assert!(matches!(
            holder_quotient_scan(&f, &q(1, 2), 0.0, &scales),
            Err(PropsError::BadAlpha)
        ));
    }

    #[test]
    fn one_to_one_examples() {
        let bump = SampledFunction::new(Arc::new(BumpWitness));
        assert!(one_to_one_probe(&bump, 101).unwrap().collision_found());
        let id = SampledFunction::new(Arc::new(Identity));
        assert!(!one_to_one_probe(&id, 101).unwrap().collision_found());
        let step = SampledFunction::new(Arc::new(StepWitness));
        assert!(one_to_one_probe(&step, 101).unwrap().collision_found());
        assert!(matches!(one_to_one_probe(&id, 1), Err(PropsError::BadGrid)));
    }

    #[test]
    fn luzin_bound_holds_for_exp() {
        let f = ExpSum::exp_term(1, ExponentVector::rational(1));
        let samples = luzin_spot_check(&f, &q(0, 1), &q(1, 1), 10).unwrap();
        assert_eq!(samples.len(), 11);
        assert!(samples.iter().all(|s| s.holds));
        assert!(samples[10].image_length.to_f64() < 0.05);
    }
}
