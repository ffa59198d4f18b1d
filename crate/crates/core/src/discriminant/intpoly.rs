use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numerics::DyadicInterval;

/// Integer polynomial in `phi`, constant term first, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// Degree and size summary of a computed discriminant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormReport {
    pub degree: usize,
    #[serde(with = "bigint_string")]
    pub l1_norm: BigInt,
    #[serde(with = "bigint_string")]
    pub leading: BigInt,
    pub bound_ok: bool,
}

mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn l1_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    /// `p(-phi)`.
    pub fn reflect(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Multiplicity of `phi = 0` as a root, by repeated exact division by `phi`.
    pub fn multiplicity_at_zero(&self) -> usize {
        let mut p = self.clone();
        let mut m = 0;
        while !p.is_zero() && p.coeffs[0].is_zero() {
            p = IntPoly::new(p.coeffs[1..].to_vec());
            m += 1;
        }
        m
    }

    /// Interval Horner evaluation.
    pub fn eval_interval(&self, x: &DyadicInterval) -> DyadicInterval {
        let mut acc = DyadicInterval::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &DyadicInterval::from_int(c.clone());
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Plain-text form `deg, c0, c1, ...`.
    pub fn to_text(&self) -> String {
        let mut s = self.degree().to_string();
        for c in &self.coeffs {
            s.push_str(", ");
            s.push_str(&c.to_string());
        }
        if self.is_zero() {
            s.push_str(", 0");
        }
        s
    }

    pub fn from_text(s: &str) -> Result<IntPoly> {
        let mut parts = s.split(',').map(str::trim);
        let deg: usize = parts
            .next()
            .ok_or_else(|| Error::Parse("empty input".into()))?
            .parse()
            .map_err(|e| Error::Parse(format!("degree: {e}")))?;
        let coeffs: Vec<BigInt> = parts
            .map(|p| {
                p.parse::<BigInt>()
                    .map_err(|e| Error::Parse(format!("{p}: {e}")))
            })
            .collect::<Result<_>>()?;
        if coeffs.len() != deg + 1 {
            return Err(Error::Parse(format!(
                "degree {deg} but {} coefficients",
                coeffs.len()
            )));
        }
        Ok(IntPoly::new(coeffs))
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        let coeffs = v
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<_, _>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}")?;
                    }
                    write!(f, "phi")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// `N = (a-1)(b-1)(c-1)/2`, the degree of `R_{a,b,c}`.
pub fn expected_degree(a: u64, b: u64, c: u64) -> usize {
    ((a - 1) * (b - 1) * c.saturating_sub(1) / 2) as usize
}

/// `c^((a-1)(b-1)/2)`.
pub fn expected_leading(a: u64, b: u64, c: u64) -> BigInt {
    Pow::pow(BigInt::from(c), ((a - 1) * (b - 1) / 2) as u32)
}

/// Checks degree, leading coefficient and `||R||_1 <= 6^N`.
pub fn norm_and_degree_report(r: &IntPoly, a: u64, b: u64, c: u64) -> NormReport {
    let n = expected_degree(a, b, c);
    let l1 = r.l1_norm();
    let bound: BigInt = Pow::pow(BigInt::from(6), n as u32);
    let leading = r.leading();
    NormReport {
        degree: r.degree(),
        bound_ok: l1 <= bound && r.degree() == n && leading == expected_leading(a, b, c),
        l1_norm: l1,
        leading,
    }
}
