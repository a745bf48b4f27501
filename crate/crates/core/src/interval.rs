//! Closed real intervals with outward-rounded MPFR endpoints.
//!
//! Every operation rounds the lower endpoint toward −∞ and the upper endpoint
//! toward +∞, so the true result of the real operation applied to any points
//! of the operands is contained in the returned interval.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::float::Round;
use rug::{Float, Rational};

/// Default working precision in bits.
pub const DEFAULT_PRECISION: u32 = 128;

#[derive(Clone, Debug, PartialEq)]
pub struct Interval {
    lo: Float,
    hi: Float,
}

impl Interval {
    /// Builds `[lo, hi]`.
    ///
    /// Panics if `lo > hi` or either endpoint is NaN.
    pub fn new(lo: Float, hi: Float) -> Self {
        assert!(
            !lo.is_nan() && !hi.is_nan() && lo <= hi,
            "invalid interval [{lo}, {hi}]"
        );
        Interval { lo, hi }
    }

    pub fn point(x: Float) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn zero(prec: u32) -> Self {
        Interval::point(Float::with_val(prec, 0))
    }

    pub fn one(prec: u32) -> Self {
        Interval::point(Float::with_val(prec, 1))
    }

    pub fn from_rational(q: &Rational, prec: u32) -> Self {
        let lo = Float::with_val_round(prec, q, Round::Down).0;
        let hi = Float::with_val_round(prec, q, Round::Up).0;
        Interval { lo, hi }
    }

    pub fn from_rationals(lo: &Rational, hi: &Rational, prec: u32) -> Self {
        assert!(lo <= hi, "invalid rational interval");
        Interval {
            lo: Float::with_val_round(prec, lo, Round::Down).0,
            hi: Float::with_val_round(prec, hi, Round::Up).0,
        }
    }

    pub fn from_f64(x: f64, prec: u32) -> Self {
        Interval::point(Float::with_val(prec.max(53), x))
    }

    pub fn lo(&self) -> &Float {
        &self.lo
    }

    pub fn hi(&self) -> &Float {
        &self.hi
    }

    pub fn prec(&self) -> u32 {
        self.lo.prec().max(self.hi.prec())
    }

    /// Midpoint, rounded to nearest. Always lies in the interval.
    pub fn mid(&self) -> Float {
        let prec = self.prec() + 1;
        let sum = Float::with_val(prec, &self.lo + &self.hi);
        sum / 2u32
    }

    /// Upper bound on `hi − lo`.
    pub fn width(&self) -> Float {
        Float::with_val_round(self.prec(), &self.hi - &self.lo, Round::Up).0
    }

    /// Upper bound on the half width.
    pub fn radius(&self) -> Float {
        self.width() / 2u32
    }

    pub fn contains(&self, x: &Float) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.lo <= 0 && self.hi >= 0
    }

    /// Certified sign of every point in the interval, if it is constant.
    ///
    /// `Some(Equal)` is returned only for the degenerate interval `[0, 0]`.
    pub fn sign(&self) -> Option<Ordering> {
        if self.lo > 0 {
            Some(Ordering::Greater)
        } else if self.hi < 0 {
            Some(Ordering::Less)
        } else if self.lo == 0 && self.hi == 0 {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// Sign that is certified nonzero; `None` whenever zero is not excluded.
    pub fn strict_sign(&self) -> Option<Ordering> {
        match self.sign() {
            Some(Ordering::Equal) | None => None,
            s => s,
        }
    }

    pub fn is_subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: min_float(&self.lo, &other.lo),
            hi: max_float(&self.hi, &other.hi),
        }
    }

    /// Intersection, or `None` when disjoint.
    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = max_float(&self.lo, &other.lo);
        let hi = min_float(&self.hi, &other.hi);
        (lo <= hi).then_some(Interval { lo, hi })
    }

    pub fn abs(&self) -> Interval {
        if self.lo >= 0 {
            self.clone()
        } else if self.hi <= 0 {
            -self
        } else {
            let m = max_float(&Float::with_val(self.prec(), -&self.lo), &self.hi);
            Interval {
                lo: Float::with_val(self.prec(), 0),
                hi: m,
            }
        }
    }

    /// Upper bound on `max |x|` over the interval.
    pub fn mag(&self) -> Float {
        self.abs().hi
    }

    pub fn exp(&self) -> Interval {
        let prec = self.prec();
        Interval {
            lo: Float::with_val_round(prec, self.lo.exp_ref(), Round::Down).0,
            hi: Float::with_val_round(prec, self.hi.exp_ref(), Round::Up).0,
        }
    }

    /// Natural logarithm. Returns `None` unless the interval is strictly positive.
    pub fn ln(&self) -> Option<Interval> {
        if self.lo <= 0 {
            return None;
        }
        let prec = self.prec();
        Some(Interval {
            lo: Float::with_val_round(prec, self.lo.ln_ref(), Round::Down).0,
            hi: Float::with_val_round(prec, self.hi.ln_ref(), Round::Up).0,
        })
    }

    /// Square root. Returns `None` if the interval reaches below zero.
    pub fn sqrt(&self) -> Option<Interval> {
        if self.lo < 0 {
            return None;
        }
        let prec = self.prec();
        Some(Interval {
            lo: Float::with_val_round(prec, self.lo.sqrt_ref(), Round::Down).0,
            hi: Float::with_val_round(prec, self.hi.sqrt_ref(), Round::Up).0,
        })
    }

    pub fn square(&self) -> Interval {
        let a = self.abs();
        let prec = self.prec();
        Interval {
            lo: Float::with_val_round(prec, a.lo.square_ref(), Round::Down).0,
            hi: Float::with_val_round(prec, a.hi.square_ref(), Round::Up).0,
        }
    }

    /// Reciprocal. Returns `None` if the interval contains zero.
    pub fn recip(&self) -> Option<Interval> {
        if self.contains_zero() {
            return None;
        }
        let prec = self.prec();
        Some(Interval {
            lo: Float::with_val_round(prec, self.hi.recip_ref(), Round::Down).0,
            hi: Float::with_val_round(prec, self.lo.recip_ref(), Round::Up).0,
        })
    }

    /// Quotient. Returns `None` if the divisor contains zero.
    pub fn div(&self, other: &Interval) -> Option<Interval> {
        let prec = self.prec().max(other.prec());
        if other.contains_zero() {
            return None;
        }
        let quotients = [
            (&self.lo, &other.lo),
            (&self.lo, &other.hi),
            (&self.hi, &other.lo),
            (&self.hi, &other.hi),
        ];
        let lo = quotients
            .iter()
            .map(|(a, b)| Float::with_val_round(prec, *a / *b, Round::Down).0)
            .reduce(|x, y| min_float(&x, &y))
            .unwrap();
        let hi = quotients
            .iter()
            .map(|(a, b)| Float::with_val_round(prec, *a / *b, Round::Up).0)
            .reduce(|x, y| max_float(&x, &y))
            .unwrap();
        Some(Interval { lo, hi })
    }

    pub fn mul_rational(&self, q: &Rational) -> Interval {
        self * &Interval::from_rational(q, self.prec())
    }

    /// Widens the interval symmetrically by `r ≥ 0`.
    pub fn inflate(&self, r: &Float) -> Interval {
        let prec = self.prec();
        Interval {
            lo: Float::with_val_round(prec, &self.lo - r, Round::Down).0,
            hi: Float::with_val_round(prec, &self.hi + r, Round::Up).0,
        }
    }

    /// Same interval with endpoints rounded outward to `prec` bits.
    pub fn with_prec(&self, prec: u32) -> Interval {
        Interval {
            lo: Float::with_val_round(prec, &self.lo, Round::Down).0,
            hi: Float::with_val_round(prec, &self.hi, Round::Up).0,
        }
    }

    pub fn to_f64_mid(&self) -> f64 {
        self.mid().to_f64()
    }

    /// Decimal endpoints with `digits` significant digits, rounded outward.
    pub fn to_decimal_strings(&self, digits: usize) -> (String, String) {
        (
            self.lo.to_string_radix_round(10, Some(digits), Round::Down),
            self.hi.to_string_radix_round(10, Some(digits), Round::Up),
        )
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.to_decimal_strings(20);
        write!(f, "[{lo}, {hi}]")
    }
}

pub(crate) fn min_float(a: &Float, b: &Float) -> Float {
    if a <= b {
        a.clone()
    } else {
        b.clone()
    }
}

pub(crate) fn max_float(a: &Float, b: &Float) -> Float {
    if a >= b {
        a.clone()
    } else {
        b.clone()
    }
}

impl Add<&Interval> for &Interval {
    type Output = Interval;

    fn add(self, rhs: &Interval) -> Interval {
        let prec = self.prec().max(rhs.prec());
        Interval {
            lo: Float::with_val_round(prec, &self.lo + &rhs.lo, Round::Down).0,
            hi: Float::with_val_round(prec, &self.hi + &rhs.hi, Round::Up).0,
        }
    }
}

impl Sub<&Interval> for &Interval {
    type Output = Interval;

    fn sub(self, rhs: &Interval) -> Interval {
        let prec = self.prec().max(rhs.prec());
        Interval {
            lo: Float::with_val_round(prec, &self.lo - &rhs.hi, Round::Down).0,
            hi: Float::with_val_round(prec, &self.hi - &rhs.lo, Round::Up).0,
        }
    }
}

impl Mul<&Interval> for &Interval {
    type Output = Interval;

    fn mul(self, rhs: &Interval) -> Interval {
        let prec = self.prec().max(rhs.prec());
        let products = [
            (&self.lo, &rhs.lo),
            (&self.lo, &rhs.hi),
            (&self.hi, &rhs.lo),
            (&self.hi, &rhs.hi),
        ];
        let lo = products
            .iter()
            .map(|(a, b)| Float::with_val_round(prec, *a * *b, Round::Down).0)
            .reduce(|x, y| min_float(&x, &y))
            .unwrap();
        let hi = products
            .iter()
            .map(|(a, b)| Float::with_val_round(prec, *a * *b, Round::Up).0)
            .reduce(|x, y| max_float(&x, &y))
            .unwrap();
        Interval { lo, hi }
    }
}

impl Neg for &Interval {
    type Output = Interval;

    fn neg(self) -> Interval {
        Interval {
            lo: Float::with_val(self.hi.prec(), -&self.hi),
            hi: Float::with_val(self.lo.prec(), -&self.lo),
        }
    }
}

impl Neg for Interval {
    type Output = Interval;

    fn neg(self) -> Interval {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Interval> for Interval {
            type Output = Interval;
            fn $m(self, rhs: Interval) -> Interval { (&self).$m(&rhs) }
        }
        impl $tr<&Interval> for Interval {
            type Output = Interval;
            fn $m(self, rhs: &Interval) -> Interval { (&self).$m(rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn rational_enclosure_contains_value() {
        let third = Interval::from_rational(&q(1, 3), 64);
        assert!(third.lo() < third.hi());
        let three = Interval::from_rational(&q(3, 1), 64);
        let one = &third * &three;
        assert!(one.contains(&Float::with_val(64, 1)));
    }

    #[test]
    fn exp_and_ln_are_outward() {
        let one = Interval::one(128);
        let e = one.exp();
        assert!(e.lo() < e.hi());
        let back = e.ln().unwrap();
        assert!(back.contains(&Float::with_val(128, 1)));
        assert!(back.width() < Float::with_val(128, 1e-35));
    }

    #[test]
    fn sign_classification() {
        let pos = Interval::from_rationals(&q(1, 10), &q(2, 10), 64);
        assert_eq!(pos.sign(), Some(Ordering::Greater));
        assert_eq!((-&pos).sign(), Some(Ordering::Less));
        let straddle = Interval::from_rationals(&q(-1, 10), &q(2, 10), 64);
        assert_eq!(straddle.sign(), None);
        assert_eq!(Interval::zero(64).sign(), Some(Ordering::Equal));
        assert_eq!(Interval::zero(64).strict_sign(), None);
    }

    #[test]
    fn multiplication_of_mixed_signs() {
        let a = Interval::from_rationals(&q(-2, 1), &q(3, 1), 64);
        let b = Interval::from_rationals(&q(-5, 1), &q(1, 1), 64);
        let p = &a * &b;
        assert_eq!(p.lo().to_f64(), -15.0);
        assert_eq!(p.hi().to_f64(), 10.0);
    }

    #[test]
    fn division_rejects_zero_divisor() {
        let a = Interval::one(64);
        let b = Interval::from_rationals(&q(-1, 1), &q(1, 1), 64);
        assert!(a.div(&b).is_none());
        assert!(b.recip().is_none());
    }

    #[test]
    fn sqrt2_squared_contains_two() {
        let two = Interval::from_rational(&q(2, 1), 200);
        let r = two.sqrt().unwrap();
        assert!(r.square().contains(&Float::with_val(200, 2)));
        assert!(r.width() < Float::with_val(200, 1e-55));
    }
}
