use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::Dyadic;
use crate::error::{Error, Result};

/// A closed interval `[lo, hi]` with dyadic endpoints.
///
/// All operations round outward, so the result contains every pointwise
/// result of the operands.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DyadicInterval {
    lo: Dyadic,
    hi: Dyadic,
}

/// Binary operation selector for [`interval_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn interval_arith(x: &DyadicInterval, y: &DyadicInterval, op: ArithOp) -> DyadicInterval {
    match op {
        ArithOp::Add => x + y,
        ArithOp::Sub => x - y,
        ArithOp::Mul => x * y,
    }
}

/// Enclosure of `sqrt(x)`. Rounding adds at most `2^-ell` to the width.
pub fn interval_sqrt(x: &DyadicInterval, ell: u64) -> Result<DyadicInterval> {
    x.sqrt(ell)
}

impl DyadicInterval {
    /// Panics if `lo > hi`.
    pub fn new(lo: Dyadic, hi: Dyadic) -> Self {
        assert!(lo <= hi, "inverted interval [{lo}, {hi}]");
        DyadicInterval { lo, hi }
    }

    pub fn point(x: Dyadic) -> Self {
        DyadicInterval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn from_int<T: Into<BigInt>>(v: T) -> Self {
        Self::point(Dyadic::from_int(v))
    }

    pub fn zero() -> Self {
        Self::point(Dyadic::zero())
    }

    /// `[-r, r]` for `r >= 0`.
    pub fn symmetric(r: Dyadic) -> Self {
        let r = r.abs();
        DyadicInterval { lo: -&r, hi: r }
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn width(&self) -> Dyadic {
        &self.hi - &self.lo
    }

    /// Exact midpoint.
    pub fn mid(&self) -> Dyadic {
        (&self.lo + &self.hi).shl(-1)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.signum() <= 0 && self.hi.signum() >= 0
    }

    pub fn overlaps(&self, other: &DyadicInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn hull(&self, other: &DyadicInterval) -> DyadicInterval {
        DyadicInterval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }

    /// Sign of every element, if it is the same across the interval.
    pub fn sign(&self) -> Option<i32> {
        if self.lo.signum() > 0 {
            Some(1)
        } else if self.hi.signum() < 0 {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    /// Largest absolute value in the interval.
    pub fn mag(&self) -> Dyadic {
        self.lo.abs().max(self.hi.abs())
    }

    /// Widens the endpoints to multiples of `2^-prec`.
    pub fn round_out(&self, prec: i64) -> DyadicInterval {
        DyadicInterval {
            lo: self.lo.floor_to(prec),
            hi: self.hi.ceil_to(prec),
        }
    }

    /// Multiplication by `2^k`, exact.
    pub fn shl(&self, k: i64) -> DyadicInterval {
        DyadicInterval {
            lo: self.lo.shl(k),
            hi: self.hi.shl(k),
        }
    }

    pub fn scale(&self, k: &Dyadic) -> DyadicInterval {
        let (x, y) = (&self.lo * k, &self.hi * k);
        if k.signum() >= 0 {
            DyadicInterval { lo: x, hi: y }
        } else {
            DyadicInterval { lo: y, hi: x }
        }
    }

    pub fn square(&self) -> DyadicInterval {
        let (a, b) = (&self.lo * &self.lo, &self.hi * &self.hi);
        if self.contains_zero() {
            DyadicInterval {
                lo: Dyadic::zero(),
                hi: a.max(b),
            }
        } else if a <= b {
            DyadicInterval { lo: a, hi: b }
        } else {
            DyadicInterval { lo: b, hi: a }
        }
    }

    /// Division by a positive integer, endpoints rounded outward to `2^-prec`.
    pub fn div_int(&self, d: &BigInt, prec: i64) -> DyadicInterval {
        assert!(d.is_positive(), "div_int needs a positive divisor");
        let d = Dyadic::from_int(d.clone());
        DyadicInterval {
            lo: self.lo.div_floor(&d, prec),
            hi: self.hi.div_ceil(&d, prec),
        }
    }

    pub fn div(&self, other: &DyadicInterval, prec: i64) -> Result<DyadicInterval> {
        if other.contains_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut lo: Option<Dyadic> = None;
        let mut hi: Option<Dyadic> = None;
        for x in [&self.lo, &self.hi] {
            for y in [&other.lo, &other.hi] {
                let f = x.div_floor(y, prec);
                let c = x.div_ceil(y, prec);
                lo = Some(match lo {
                    Some(l) if l <= f => l,
                    _ => f,
                });
                hi = Some(match hi {
                    Some(h) if h >= c => h,
                    _ => c,
                });
            }
        }
        Ok(DyadicInterval {
            lo: lo.unwrap(),
            hi: hi.unwrap(),
        })
    }

    /// Enclosure of the square root; negative parts of `lo` are clamped to 0.
    pub fn sqrt(&self, ell: u64) -> Result<DyadicInterval> {
        if self.hi.signum() < 0 {
            return Err(Error::NegativeOperand);
        }
        let p = ell as i64 + 2;
        let lo = if self.lo.signum() <= 0 {
            Dyadic::zero()
        } else {
            let n = self.lo.shl(2 * p).floor();
            Dyadic::new(n.sqrt(), -p)
        };
        let n = self.hi.shl(2 * p).ceil();
        let r = n.sqrt();
        let r = if &r * &r == n { r } else { r + BigInt::one() };
        Ok(DyadicInterval {
            lo,
            hi: Dyadic::new(r, -p),
        })
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.lo.to_f64(), self.hi.to_f64())
    }
}

impl<'a> Add<&'a DyadicInterval> for &'a DyadicInterval {
    type Output = DyadicInterval;
    fn add(self, rhs: &DyadicInterval) -> DyadicInterval {
        DyadicInterval {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
        }
    }
}

impl<'a> Sub<&'a DyadicInterval> for &'a DyadicInterval {
    type Output = DyadicInterval;
    fn sub(self, rhs: &DyadicInterval) -> DyadicInterval {
        DyadicInterval {
            lo: &self.lo - &rhs.hi,
            hi: &self.hi - &rhs.lo,
        }
    }
}

impl<'a> Mul<&'a DyadicInterval> for &'a DyadicInterval {
    type Output = DyadicInterval;
    fn mul(self, rhs: &DyadicInterval) -> DyadicInterval {
        if rhs.is_point() {
            return self.scale(&rhs.lo);
        }
        if self.is_point() {
            return rhs.scale(&self.lo);
        }
        let p = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let mut lo = &p[0];
        let mut hi = &p[0];
        for x in &p[1..] {
            if x < lo {
                lo = x;
            }
            if x > hi {
                hi = x;
            }
        }
        DyadicInterval {
            lo: lo.clone(),
            hi: hi.clone(),
        }
    }
}

impl Neg for &DyadicInterval {
    type Output = DyadicInterval;
    fn neg(self) -> DyadicInterval {
        DyadicInterval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }
}

impl Neg for DyadicInterval {
    type Output = DyadicInterval;
    fn neg(self) -> DyadicInterval {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<DyadicInterval> for DyadicInterval {
            type Output = DyadicInterval;
            fn $m(self, rhs: DyadicInterval) -> DyadicInterval {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a DyadicInterval> for DyadicInterval {
            type Output = DyadicInterval;
            fn $m(self, rhs: &DyadicInterval) -> DyadicInterval {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<Dyadic> for DyadicInterval {
    fn from(x: Dyadic) -> Self {
        DyadicInterval::point(x)
    }
}

impl Default for DyadicInterval {
    fn default() -> Self {
        DyadicInterval::zero()
    }
}

impl std::fmt::Display for DyadicInterval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}
