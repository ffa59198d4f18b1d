use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact dyadic number `mantissa * 2^exponent`.
///
/// Values are kept canonical: the mantissa is odd, or the value is zero and
/// stored as `0 * 2^0`. Addition, subtraction and multiplication are exact;
/// precision is only ever lost at the explicit `floor_to`/`ceil_to`/`round_to`
/// truncation points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mantissa: BigInt,
    exponent: i64,
}

impl Dyadic {
    pub fn new(mantissa: BigInt, exponent: i64) -> Self {
        match mantissa.trailing_zeros() {
            None => Self::zero(),
            Some(0) => Dyadic { mantissa, exponent },
            Some(tz) => Dyadic {
                mantissa: mantissa >> tz,
                exponent: exponent + tz as i64,
            },
        }
    }

    pub fn zero() -> Self {
        Dyadic {
            mantissa: BigInt::zero(),
            exponent: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic {
            mantissa: BigInt::one(),
            exponent: 0,
        }
    }

    pub fn from_int<T: Into<BigInt>>(value: T) -> Self {
        Self::new(value.into(), 0)
    }

    /// `2^exponent`.
    pub fn pow2(exponent: i64) -> Self {
        Dyadic {
            mantissa: BigInt::one(),
            exponent,
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn signum(&self) -> i32 {
        if self.mantissa.is_positive() {
            1
        } else if self.mantissa.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic {
            mantissa: self.mantissa.abs(),
            exponent: self.exponent,
        }
    }

    /// Bitsize of the value seen as a reduced fraction `p / 2^q`.
    pub fn bitsize(&self) -> u64 {
        let m = self.mantissa.bits();
        if self.exponent >= 0 {
            m + self.exponent as u64
        } else {
            m.max(self.exponent.unsigned_abs() + 1)
        }
    }

    /// Multiplies by `2^k` exactly.
    pub fn shl(&self, k: i64) -> Dyadic {
        if self.is_zero() {
            return Self::zero();
        }
        Dyadic {
            mantissa: self.mantissa.clone(),
            exponent: self.exponent + k,
        }
    }

    /// Largest multiple of `2^-prec` that is `<= self`.
    pub fn floor_to(&self, prec: i64) -> Dyadic {
        if self.exponent >= -prec {
            return self.clone();
        }
        let shift = (-prec - self.exponent) as u64;
        Dyadic::new(&self.mantissa >> shift, -prec)
    }

    /// Smallest multiple of `2^-prec` that is `>= self`.
    pub fn ceil_to(&self, prec: i64) -> Dyadic {
        -(-self).floor_to(prec)
    }

    /// Nearest multiple of `2^-prec`, ties rounded up.
    pub fn round_to(&self, prec: i64) -> Dyadic {
        (self + &Dyadic::pow2(-prec - 1)).floor_to(prec)
    }

    pub fn floor(&self) -> BigInt {
        if self.exponent >= 0 {
            &self.mantissa << self.exponent as u64
        } else {
            &self.mantissa >> self.exponent.unsigned_abs()
        }
    }

    pub fn ceil(&self) -> BigInt {
        -(-self).floor()
    }

    /// Nearest integer, ties rounded up.
    pub fn round(&self) -> BigInt {
        (self + &Dyadic::pow2(-1)).floor()
    }

    /// `floor(num / den * 2^prec) * 2^-prec`.
    pub fn from_ratio_floor(num: &BigInt, den: &BigInt, prec: i64) -> Dyadic {
        assert!(!den.is_zero(), "zero denominator");
        let (num, den) = if den.is_negative() {
            (-num, -den)
        } else {
            (num.clone(), den.clone())
        };
        let q = if prec >= 0 {
            (num << prec as u64).div_floor(&den)
        } else {
            num.div_floor(&(den << prec.unsigned_abs()))
        };
        Dyadic::new(q, -prec)
    }

    pub fn from_ratio_ceil(num: &BigInt, den: &BigInt, prec: i64) -> Dyadic {
        -Dyadic::from_ratio_floor(&-num, den, prec)
    }

    /// `self / other` rounded down to a multiple of `2^-prec`.
    pub fn div_floor(&self, other: &Dyadic, prec: i64) -> Dyadic {
        let (num, den) = self.quotient_parts(other, prec);
        Dyadic::from_ratio_floor(&num, &den, 0).shl(-prec)
    }

    pub fn div_ceil(&self, other: &Dyadic, prec: i64) -> Dyadic {
        let (num, den) = self.quotient_parts(other, prec);
        Dyadic::from_ratio_ceil(&num, &den, 0).shl(-prec)
    }

    // self / other * 2^prec as an integer fraction
    fn quotient_parts(&self, other: &Dyadic, prec: i64) -> (BigInt, BigInt) {
        assert!(!other.is_zero(), "division by zero dyadic");
        let s = self.exponent - other.exponent + prec;
        if s >= 0 {
            (&self.mantissa << s as u64, other.mantissa.clone())
        } else {
            (self.mantissa.clone(), &other.mantissa << s.unsigned_abs())
        }
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exponent >= 0 {
            BigRational::from_integer(&self.mantissa << self.exponent as u64)
        } else {
            BigRational::new(
                self.mantissa.clone(),
                BigInt::one() << self.exponent.unsigned_abs(),
            )
        }
    }

    /// Approximate value; only for display and plotting.
    pub fn to_f64(&self) -> f64 {
        let bits = self.mantissa.bits() as i64;
        let (m, e) = if bits > 60 {
            let drop = bits - 60;
            ((&self.mantissa >> drop as u64), self.exponent + drop)
        } else {
            (self.mantissa.clone(), self.exponent)
        };
        let m = m.to_f64().unwrap_or(0.0);
        let e = e.clamp(-2200, 2200) as i32;
        // split the scaling so subnormal results do not flush to zero early
        m * 2f64.powi(e / 2) * 2f64.powi(e - e / 2)
    }

    /// Exact dyadic from a finite `f64`.
    pub fn from_f64(x: f64) -> Option<Dyadic> {
        if !x.is_finite() {
            return None;
        }
        if x == 0.0 {
            return Some(Dyadic::zero());
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 0 { 1i64 } else { -1 };
        let exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = (bits & ((1u64 << 52) - 1)) as i64;
        let (m, e) = if exp == 0 {
            (frac, -1074)
        } else {
            (frac | (1i64 << 52), exp - 1075)
        };
        Some(Dyadic::new(BigInt::from(sign * m), e))
    }
}

// JSON shape: {"mantissa": "<decimal>", "exponent": e}; the mantissa is a
// string so that it survives parsers limited to 64-bit numbers.
#[derive(Serialize, Deserialize)]
struct DyadicRepr {
    mantissa: String,
    exponent: i64,
}

impl Serialize for Dyadic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DyadicRepr {
            mantissa: self.mantissa.to_string(),
            exponent: self.exponent,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Dyadic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = DyadicRepr::deserialize(d)?;
        let m: BigInt = r.mantissa.parse().map_err(serde::de::Error::custom)?;
        Ok(Dyadic::new(m, r.exponent))
    }
}

impl Default for Dyadic {
    fn default() -> Self {
        Dyadic::zero()
    }
}

impl From<i64> for Dyadic {
    fn from(v: i64) -> Self {
        Dyadic::from_int(v)
    }
}

impl From<BigInt> for Dyadic {
    fn from(v: BigInt) -> Self {
        Dyadic::new(v, 0)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.mantissa)
        } else {
            write!(f, "{}*2^{}", self.mantissa, self.exponent)
        }
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (s1, s2) = (self.signum(), other.signum());
        if s1 != s2 {
            return s1.cmp(&s2);
        }
        if s1 == 0 {
            return Ordering::Equal;
        }
        match self.exponent.cmp(&other.exponent) {
            Ordering::Equal => self.mantissa.cmp(&other.mantissa),
            Ordering::Less => {
                let shifted = &other.mantissa << (other.exponent - self.exponent) as u64;
                self.mantissa.cmp(&shifted)
            }
            Ordering::Greater => {
                let shifted = &self.mantissa << (self.exponent - other.exponent) as u64;
                shifted.cmp(&other.mantissa)
            }
        }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        match self.exponent.cmp(&rhs.exponent) {
            Ordering::Equal => Dyadic::new(&self.mantissa + &rhs.mantissa, self.exponent),
            Ordering::Less => {
                let m = (&rhs.mantissa << (rhs.exponent - self.exponent) as u64) + &self.mantissa;
                Dyadic::new(m, self.exponent)
            }
            Ordering::Greater => {
                let m = (&self.mantissa << (self.exponent - rhs.exponent) as u64) + &rhs.mantissa;
                Dyadic::new(m, rhs.exponent)
            }
        }
    }
}

impl<'a> Sub<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() || rhs.is_zero() {
            return Dyadic::zero();
        }
        // odd * odd is odd: already canonical
        Dyadic {
            mantissa: &self.mantissa * &rhs.mantissa,
            exponent: self.exponent + rhs.exponent,
        }
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            mantissa: -&self.mantissa,
            exponent: self.exponent,
        }
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            mantissa: -self.mantissa,
            exponent: self.exponent,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Dyadic> for Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: Dyadic) -> Dyadic {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Dyadic> for Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: &Dyadic) -> Dyadic {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn dy() -> impl Strategy<Value = Dyadic> {
        (any::<i64>(), -80i64..80).prop_map(|(m, e)| Dyadic::new(BigInt::from(m), e))
    }

    proptest! {
        #[test]
        fn ring_ops_are_exact(x in dy(), y in dy()) {
            let (rx, ry) = (x.to_rational(), y.to_rational());
            prop_assert_eq!((&x + &y).to_rational(), &rx + &ry);
            prop_assert_eq!((&x - &y).to_rational(), &rx - &ry);
            prop_assert_eq!((&x * &y).to_rational(), &rx * &ry);
        }

        #[test]
        fn rounding_brackets(x in dy(), p in -20i64..60) {
            let (f, c, r) = (x.floor_to(p), x.ceil_to(p), x.round_to(p));
            prop_assert!(f <= x && x <= c);
            prop_assert!(&c - &f <= Dyadic::pow2(-p));
            prop_assert!((&r - &x).abs() <= Dyadic::pow2(-p - 1));
        }

        #[test]
        fn json_roundtrip(x in dy()) {
            let s = serde_json::to_string(&x).unwrap();
            prop_assert_eq!(serde_json::from_str::<Dyadic>(&s).unwrap(), x);
        }
    }
}
