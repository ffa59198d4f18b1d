use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::numerics::DyadicInterval;

/// Dense univariate integer polynomial in the monomial basis, constant first.
///
/// Every polynomial this crate needs in monomial form (`T_n`, `V_n`, `M_n`
/// after conversion) has integer coefficients, so no rationals are involved.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialPoly {
    coeffs: Vec<BigInt>,
}

impl MonomialPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        MonomialPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        MonomialPoly { coeffs: Vec::new() }
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::new(vec![c.into()])
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &MonomialPoly) -> MonomialPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        MonomialPoly::new(out)
    }

    pub fn sub(&self, other: &MonomialPoly) -> MonomialPoly {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, k: &BigInt) -> MonomialPoly {
        MonomialPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, other: &MonomialPoly) -> MonomialPoly {
        if self.is_zero() || other.is_zero() {
            return MonomialPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        MonomialPoly::new(out)
    }

    pub fn derivative(&self) -> MonomialPoly {
        MonomialPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Quotient and remainder by a monic divisor.
    pub fn div_rem_monic(&self, divisor: &MonomialPoly) -> (MonomialPoly, MonomialPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        assert!(divisor.leading().unwrap().is_one(), "divisor must be monic");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (MonomialPoly::zero(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = std::mem::take(&mut rem[top]);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate().take(dd) {
                rem[top - dd + j] -= &c * dc;
            }
            quot[top - dd] = c;
        }
        rem.truncate(dd);
        (MonomialPoly::new(quot), MonomialPoly::new(rem))
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &x + c)
    }

    /// Interval Horner evaluation.
    pub fn eval_interval(&self, x: &DyadicInterval) -> DyadicInterval {
        let mut acc = DyadicInterval::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &DyadicInterval::from_int(c.clone());
        }
        acc
    }
}

impl fmt::Display for MonomialPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}")?;
                    }
                    write!(f, "t")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// `T_m` in the monomial basis, with `T_0 = 2`, `T_1 = t`, `T_{m+1} = t T_m - T_{m-1}`.
pub fn cheb_poly_t(m: usize) -> MonomialPoly {
    let mut prev = MonomialPoly::constant(2);
    if m == 0 {
        return prev;
    }
    let mut cur = MonomialPoly::t();
    for _ in 1..m {
        let next = MonomialPoly::t().mul(&cur).sub(&prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `V_m` with `V_m(2cos x) = sin(m x) / sin x`; `m V_m = T_m'`.
pub fn cheb_poly_v(m: usize) -> MonomialPoly {
    assert!(m >= 1, "V_m needs m >= 1");
    // same recurrence, V_0 = 0, V_1 = 1
    let mut prev = MonomialPoly::zero();
    let mut cur = MonomialPoly::constant(1);
    for _ in 1..m {
        let next = MonomialPoly::t().mul(&cur).sub(&prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_t_polys() {
        assert_eq!(cheb_poly_t(0), MonomialPoly::from_i64(&[2]));
        assert_eq!(cheb_poly_t(2), MonomialPoly::from_i64(&[-2, 0, 1]));
        assert_eq!(cheb_poly_t(3), MonomialPoly::from_i64(&[0, -3, 0, 1]));
    }

    #[test]
    fn first_v_polys() {
        assert_eq!(cheb_poly_v(1), MonomialPoly::from_i64(&[1]));
        assert_eq!(cheb_poly_v(2), MonomialPoly::from_i64(&[0, 1]));
        assert_eq!(cheb_poly_v(3), MonomialPoly::from_i64(&[-1, 0, 1]));
    }

    #[test]
    fn derivative_relation() {
        for m in 1..30 {
            let lhs = cheb_poly_v(m).scale(&BigInt::from(m));
            assert_eq!(lhs, cheb_poly_t(m).derivative(), "m = {m}");
        }
    }

    #[test]
    fn t_at_two_cos() {
        // T_m(2) = 2, T_m(-2) = 2(-1)^m, T_m(0) = 2cos(m pi/2)
        for m in 0..25 {
            let t = cheb_poly_t(m);
            assert_eq!(t.eval_i64(2), BigInt::from(2));
            assert_eq!(
                t.eval_i64(-2),
                BigInt::from(if m % 2 == 0 { 2 } else { -2 })
            );
            let expect = [2, 0, -2, 0][m % 4];
            assert_eq!(t.eval_i64(0), BigInt::from(expect));
        }
    }

    #[test]
    fn monic_division() {
        let a = MonomialPoly::from_i64(&[-1, 0, 0, 1]); // t^3 - 1
        let d = MonomialPoly::from_i64(&[-1, 1]);
        let (q, r) = a.div_rem_monic(&d);
        assert_eq!(q, MonomialPoly::from_i64(&[1, 1, 1]));
        assert!(r.is_zero());
        let (_, r) = MonomialPoly::from_i64(&[5, 0, 1]).div_rem_monic(&d);
        assert_eq!(r, MonomialPoly::from_i64(&[6]));
    }

    #[test]
    fn display() {
        assert_eq!(cheb_poly_t(3).to_string(), "t^3 - 3t");
        assert_eq!(MonomialPoly::zero().to_string(), "0");
    }
}
