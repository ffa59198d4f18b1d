use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{cheb_poly_t, MonomialPoly};
use crate::error::{Error, Result};

/// `T_m = sign * T_idx` at `2cos(pi/n)`, with `idx < n`; `idx = 0` stands for `T_0 = 2`.
pub fn fold_index(m: u64, n: u64) -> (i32, u64) {
    assert!(n >= 1, "n must be positive");
    let r = m % (2 * n);
    if r < n {
        (1, r)
    } else {
        (-1, r - n)
    }
}

/// Integer combination `f_0 + sum_{i>=1} f_i T_i`, read as an element of
/// `Z[2cos(pi/n)]`.
///
/// `coeffs[0]` is the plain constant `f_0` (not a multiple of `T_0 = 2`).
/// All indices are kept below `n` and trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChebyshevForm {
    n: u64,
    coeffs: Vec<BigInt>,
}

// Adds c*T_m to a coefficient vector of length n, folding the index.
pub(crate) fn add_t(acc: &mut [BigInt], n: u64, m: u64, c: &BigInt) {
    let (s, idx) = fold_index(m, n);
    if idx == 0 {
        if s > 0 {
            acc[0] += c << 1u32;
        } else {
            acc[0] -= c << 1u32;
        }
    } else if s > 0 {
        acc[idx as usize] += c;
    } else {
        acc[idx as usize] -= c;
    }
}

impl ChebyshevForm {
    fn trimmed(n: u64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ChebyshevForm { n, coeffs }
    }

    // No folding: used for M_1, whose degree equals its ambient index.
    pub(crate) fn raw(n: u64, coeffs: Vec<BigInt>) -> Self {
        Self::trimmed(n, coeffs)
    }

    pub fn zero(n: u64) -> Self {
        assert!(n >= 1, "ambient index must be positive");
        ChebyshevForm {
            n,
            coeffs: Vec::new(),
        }
    }

    pub fn constant<T: Into<BigInt>>(n: u64, c: T) -> Self {
        assert!(n >= 1, "ambient index must be positive");
        Self::trimmed(n, vec![c.into()])
    }

    /// The single term `T_m`, folded.
    pub fn t(n: u64, m: u64) -> Self {
        Self::from_terms(n, 0, &[(m as i64, 1)])
    }

    /// `constant + sum c * T_|m|` over `terms`, folded into `[0, n)`.
    pub fn from_terms(n: u64, constant: i64, terms: &[(i64, i64)]) -> Self {
        assert!(n >= 1, "ambient index must be positive");
        let mut acc = vec![BigInt::zero(); n as usize];
        acc[0] += constant;
        for &(m, c) in terms {
            add_t(&mut acc, n, m.unsigned_abs(), &BigInt::from(c));
        }
        Self::trimmed(n, acc)
    }

    /// Builds a form from `coeffs[0] + sum coeffs[i] T_i`; indices `>= n` are folded.
    pub fn from_coeffs(n: u64, coeffs: Vec<BigInt>) -> Self {
        assert!(n >= 1, "ambient index must be positive");
        if coeffs.len() <= n as usize {
            return Self::trimmed(n, coeffs);
        }
        let mut acc = vec![BigInt::zero(); n as usize];
        for (i, c) in coeffs.into_iter().enumerate() {
            if i == 0 {
                acc[0] += c;
            } else if !c.is_zero() {
                add_t(&mut acc, n, i as u64, &c);
            }
        }
        Self::trimmed(n, acc)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `f_0`.
    pub fn const_term(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_default()
    }

    /// `f_0, f_1, ..., f_d`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `f_i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in the `T` basis; `None` for the zero form.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Nonzero `(index, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// `|f_0| + 2 sum |f_i|`, an upper bound for `|f(x)|` on `[-2, 2]`.
    pub fn norm_t(&self) -> BigInt {
        let mut s = BigInt::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i == 0 {
                s += c.abs();
            } else {
                s += c.abs() << 1u32;
            }
        }
        s
    }

    /// Bitsize of the largest coefficient.
    pub fn tau(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
    }

    fn check(&self, other: &ChebyshevForm) -> Result<()> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &ChebyshevForm) -> Result<ChebyshevForm> {
        self.check(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Ok(Self::trimmed(self.n, out))
    }

    pub fn sub(&self, other: &ChebyshevForm) -> Result<ChebyshevForm> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ChebyshevForm {
        ChebyshevForm {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> ChebyshevForm {
        Self::trimmed(self.n, self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Product modulo `M_n` via `T_i T_j = T_{i+j} + T_{|i-j|}` and index folding.
    ///
    /// Cost is proportional to the product of the two supports, so sparse
    /// operands are cheap.
    pub fn mul_mod(&self, other: &ChebyshevForm) -> Result<ChebyshevForm> {
        self.check(other)?;
        let mut acc = vec![BigInt::zero(); self.n as usize];
        mul_acc(&mut acc, self.n, &self.coeffs, &other.coeffs);
        Ok(Self::trimmed(self.n, acc))
    }

    /// Value as an explicit polynomial in `x = 2cos(pi/n)`.
    pub fn to_monomial(&self) -> MonomialPoly {
        let mut out = MonomialPoly::zero();
        for (i, c) in self.terms() {
            let term = if i == 0 {
                MonomialPoly::constant(c.clone())
            } else {
                cheb_poly_t(i).scale(c)
            };
            out = out.add(&term);
        }
        out
    }

    /// Rewrites a monomial-basis polynomial in the `T` basis, then folds.
    pub fn from_monomial(n: u64, p: &MonomialPoly) -> ChebyshevForm {
        let mut rest = p.clone();
        let d = p.degree().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); d + 1];
        while let Some(k) = rest.degree() {
            let c = rest.leading().unwrap().clone();
            if k == 0 {
                coeffs[0] += c;
                break;
            }
            coeffs[k] += &c;
            rest = rest.sub(&cheb_poly_t(k).scale(&c));
        }
        Self::from_coeffs(n, coeffs)
    }
}

/// `acc += f * g` with folding; `f`, `g` are coefficient slices (constant first).
pub(crate) fn mul_acc(acc: &mut [BigInt], n: u64, f: &[BigInt], g: &[BigInt]) {
    let fs: Vec<(usize, &BigInt)> = f.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    let gs: Vec<(usize, &BigInt)> = g.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    for &(i, a) in &fs {
        for &(j, b) in &gs {
            let p = a * b;
            if i == 0 && j == 0 {
                acc[0] += p;
            } else if i == 0 || j == 0 {
                add_t(acc, n, (i + j) as u64, &p);
            } else {
                add_t(acc, n, (i + j) as u64, &p);
                add_t(acc, n, i.abs_diff(j) as u64, &p);
            }
        }
    }
}

impl fmt::Display for ChebyshevForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.terms() {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let a = c.abs();
            if i == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "T_{i}")?;
            } else {
                write!(f, "{a}T_{i}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fold_examples() {
        assert_eq!(fold_index(10, 10), (-1, 0));
        assert_eq!(fold_index(13, 10), (-1, 3));
        assert_eq!(fold_index(25, 10), (1, 5));
        assert_eq!(fold_index(7, 10), (1, 7));
        assert_eq!(fold_index(0, 1), (1, 0));
    }

    #[test]
    fn mul_examples() {
        let t1 = ChebyshevForm::t(10, 1);
        assert_eq!(
            t1.mul_mod(&t1).unwrap(),
            ChebyshevForm::from_terms(10, 2, &[(2, 1)])
        );
        // T_12 + T_2 with T_12 = T_{10+2} = -T_2: the product vanishes, as
        // 2cos(5 pi/10) = 0 does
        let p = ChebyshevForm::t(10, 7)
            .mul_mod(&ChebyshevForm::t(10, 5))
            .unwrap();
        assert!(p.is_zero());
        let p = ChebyshevForm::t(10, 7)
            .mul_mod(&ChebyshevForm::t(10, 6))
            .unwrap();
        assert_eq!(p, ChebyshevForm::from_terms(10, 0, &[(3, -1), (1, 1)]));
        let f = ChebyshevForm::from_terms(10, 3, &[(4, -2), (9, 5)]);
        assert_eq!(f.mul_mod(&ChebyshevForm::constant(10, 1)).unwrap(), f);
    }

    #[test]
    fn ambient_mismatch() {
        let e = ChebyshevForm::t(5, 1).mul_mod(&ChebyshevForm::t(6, 1));
        assert_eq!(e, Err(Error::AmbientMismatch(5, 6)));
    }

    #[test]
    fn t0_is_two() {
        assert_eq!(ChebyshevForm::t(7, 0), ChebyshevForm::constant(7, 2));
        assert_eq!(ChebyshevForm::t(7, 14), ChebyshevForm::constant(7, 2));
        assert_eq!(ChebyshevForm::t(7, 7), ChebyshevForm::constant(7, -2));
    }

    #[test]
    fn norm_and_display() {
        let f = ChebyshevForm::from_terms(20, -3, &[(2, 1), (5, -4)]);
        assert_eq!(f.norm_t(), BigInt::from(3 + 2 + 8));
        assert_eq!(f.to_string(), "-3 + T_2 - 4T_5");
        assert_eq!(f.tau(), 3);
    }

    #[test]
    fn monomial_round_trip() {
        let f = ChebyshevForm::from_terms(50, 7, &[(1, 2), (3, -1), (6, 4)]);
        assert_eq!(ChebyshevForm::from_monomial(50, &f.to_monomial()), f);
    }
}
