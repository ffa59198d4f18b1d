use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::intpoly::{expected_degree, expected_leading, IntPoly};
use crate::chebyshev::{fold_index, reduce_canonical, ChebyshevForm};
use crate::curves::check_ab;
use crate::error::{Error, Result};
use crate::factors::{build_factor, FactorIndex, FactorPoly};

/// Polynomial in `phi` whose coefficients are Chebyshev forms over one
/// common `n`, constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycloPoly {
    pub n: u64,
    pub coeffs: Vec<ChebyshevForm>,
}

// Sparse form with machine-size coefficients; factor forms always fit.
type Sparse = Vec<(usize, i64)>;

fn sparse_of(f: &ChebyshevForm) -> Sparse {
    f.terms()
        .map(|(i, c)| (i, c.to_i64().expect("factor coefficient fits in i64")))
        .collect()
}

#[inline]
fn add_scaled(slot: &mut BigInt, g: &BigInt, c: i64) {
    match c {
        1 => *slot += g,
        -1 => *slot -= g,
        _ => *slot += g * c,
    }
}

#[inline]
fn add_folded(acc: &mut [BigInt], n: u64, m: u64, g: &BigInt, c: i64) {
    let (s, idx) = fold_index(m, n);
    let c = if s > 0 { c } else { -c };
    if idx == 0 {
        add_scaled(&mut acc[0], g, 2 * c);
    } else {
        add_scaled(&mut acc[idx as usize], g, c);
    }
}

// acc += f * g, f sparse with small coefficients, g dense of length n.
fn mul_sparse_acc(acc: &mut [BigInt], n: u64, f: &Sparse, g: &[BigInt]) {
    for &(i, c) in f {
        for (j, gj) in g.iter().enumerate() {
            if gj.is_zero() {
                continue;
            }
            if i == 0 {
                add_scaled(&mut acc[j], gj, c);
            } else if j == 0 {
                add_folded(acc, n, i as u64, gj, c);
            } else {
                add_folded(acc, n, (i + j) as u64, gj, c);
                add_folded(acc, n, i.abs_diff(j) as u64, gj, c);
            }
        }
    }
}

impl CycloPoly {
    pub fn one(n: u64) -> Self {
        CycloPoly {
            n,
            coeffs: vec![ChebyshevForm::constant(n, 1)],
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Product with one factor; coefficients stay folded below `n`.
    pub fn mul_factor(&self, factor: &FactorPoly) -> Result<CycloPoly> {
        let n = self.n;
        if factor.forms.iter().any(|f| f.n() != n) {
            return Err(Error::AmbientMismatch(n, factor.forms[0].n()));
        }
        let sparse: Vec<Sparse> = factor.forms.iter().map(sparse_of).collect();
        let dense: Vec<Vec<BigInt>> = self
            .coeffs
            .iter()
            .map(|f| {
                let mut v = f.coeffs().to_vec();
                v.resize(n as usize, BigInt::zero());
                v
            })
            .collect();
        let out_len = dense.len() + sparse.len() - 1;
        let coeffs = (0..out_len)
            .into_par_iter()
            .map(|d| {
                let mut acc = vec![BigInt::zero(); n as usize];
                for (t, f) in sparse.iter().enumerate() {
                    if t <= d && d - t < dense.len() {
                        mul_sparse_acc(&mut acc, n, f, &dense[d - t]);
                    }
                }
                ChebyshevForm::from_coeffs(n, acc)
            })
            .collect();
        Ok(CycloPoly { n, coeffs })
    }

    /// Reduces every coefficient modulo `M_n`; each must become an integer.
    pub fn to_int_poly(&self) -> Result<IntPoly> {
        let coeffs = self
            .coeffs
            .par_iter()
            .enumerate()
            .map(|(d, f)| {
                let r = reduce_canonical(f);
                match r.degree() {
                    None | Some(0) => Ok(r.const_term()),
                    Some(_) => Err(Error::InternalInconsistency(format!(
                        "coefficient of phi^{d} is not rational: {r}"
                    ))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

pub(crate) fn check_abc(a: u64, b: u64, c: u64) -> Result<()> {
    check_ab(a, b)?;
    if c == 0 {
        return Err(Error::BadArgs("c must be positive".into()));
    }
    Ok(())
}

pub(crate) fn check_structure(r: &IntPoly, a: u64, b: u64, c: u64) -> Result<()> {
    let n = expected_degree(a, b, c);
    if r.degree() != n {
        return Err(Error::InternalInconsistency(format!(
            "degree {} instead of {n}",
            r.degree()
        )));
    }
    let lead = expected_leading(a, b, c);
    if r.leading() != lead {
        return Err(Error::InternalInconsistency(format!(
            "leading coefficient {} instead of {lead}",
            r.leading()
        )));
    }
    Ok(())
}

/// `R_{a,b,c}` by exact multiplication of the factors in `Z[2cos(pi/abc)]`.
pub fn compute_r_exact(a: u64, b: u64, c: u64) -> Result<IntPoly> {
    check_abc(a, b, c)?;
    let idx = FactorIndex::all(a, b, c)?;
    if idx.is_empty() {
        return Ok(IntPoly::one());
    }
    let n = a * b * c;
    let mut p = CycloPoly::one(n);
    for f in &idx {
        p = p.mul_factor(&build_factor(f))?;
    }
    let r = p.to_int_poly()?;
    check_structure(&r, a, b, c)?;
    Ok(r)
}
