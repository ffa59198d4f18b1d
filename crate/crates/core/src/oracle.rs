//! Brute-force checks: `R^2` as an iterated resultant, and direct interval
//! evaluation of `Q_c` at a crossing.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::chebyshev::{cheb_poly_t, cheb_poly_v};
use crate::curves::tdiff_quotient;
use crate::discriminant::{check_abc, expected_degree, IntPoly};
use crate::error::{Error, Result};
use crate::factors::{factor_sign_at_rational, FactorIndex};
use crate::numerics::{cos_pi_frac_interval, DyadicInterval};

/// Largest `N` accepted by [`resultant_r_squared`].
pub const MAX_ORACLE_DEGREE: usize = 30;

type UPoly = Vec<BigRational>;

fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Dense polynomial in `(u, v)`; `coeffs[i][j]` multiplies `u^i v^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    coeffs: Vec<Vec<BigRational>>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        BiPoly {
            coeffs: vec![vec![c]],
        }
    }

    pub fn monomial(i: usize, j: usize, c: BigRational) -> Self {
        let mut coeffs = vec![Vec::new(); i + 1];
        coeffs[i] = vec![BigRational::zero(); j + 1];
        coeffs[i][j] = c;
        BiPoly { coeffs }
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigRational {
        self.coeffs
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    fn slot(&mut self, i: usize, j: usize) -> &mut BigRational {
        if self.coeffs.len() <= i {
            self.coeffs.resize(i + 1, Vec::new());
        }
        let row = &mut self.coeffs[i];
        if row.len() <= j {
            row.resize(j + 1, BigRational::zero());
        }
        &mut row[j]
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (i, row) in other.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    *out.slot(i, j) += c;
                }
            }
        }
        out
    }

    pub fn scale(&self, k: &BigRational) -> BiPoly {
        BiPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|row| row.iter().map(|c| c * k).collect())
                .collect(),
        }
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (i, r) in self.coeffs.iter().enumerate() {
            for (j, x) in r.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (k, s) in other.coeffs.iter().enumerate() {
                    for (l, y) in s.iter().enumerate() {
                        if !y.is_zero() {
                            *out.slot(i + k, j + l) += x * y;
                        }
                    }
                }
            }
        }
        out
    }

    /// Polynomial in `v` obtained by setting `u = u0`.
    pub fn eval_u(&self, u0: &BigRational) -> UPoly {
        let mut out: UPoly = Vec::new();
        let mut pw = BigRational::one();
        for row in &self.coeffs {
            if out.len() < row.len() {
                out.resize(row.len(), BigRational::zero());
            }
            for (j, c) in row.iter().enumerate() {
                out[j] += c * &pw;
            }
            pw *= u0;
        }
        out
    }

    /// Swaps the roles of `u` and `v`.
    pub fn transpose(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    *out.slot(j, i) = c.clone();
                }
            }
        }
        out
    }
}

// h_m(s, t) = sum_{i+j=m} s^i t^j, rewritten through e1 = uv, e2 = u^2 + v^2 - 4.
fn complete_symmetric(max_m: usize) -> Vec<BiPoly> {
    let e1 = BiPoly::monomial(1, 1, q(1));
    let e2 = BiPoly::monomial(2, 0, q(1))
        .add(&BiPoly::monomial(0, 2, q(1)))
        .add(&BiPoly::constant(q(-4)));
    let mut h = vec![BiPoly::constant(q(1))];
    for m in 1..=max_m {
        let mut next = e1.mul(&h[m - 1]);
        if m >= 2 {
            next = next.add(&e2.mul(&h[m - 2]).scale(&q(-1)));
        }
        h.push(next);
    }
    h
}

// T_c(x + phi0) as a polynomial in x.
fn shifted_t(c: u64, phi0: &BigRational) -> UPoly {
    let t: Vec<BigRational> = cheb_poly_t(c as usize)
        .coeffs()
        .iter()
        .map(|x| BigRational::from_integer(x.clone()))
        .collect();
    let mut acc: UPoly = Vec::new();
    for coef in t.iter().rev() {
        // acc = acc * (x + phi0) + coef
        let mut next = vec![BigRational::zero(); acc.len() + 1];
        for (k, a) in acc.iter().enumerate() {
            next[k + 1] += a;
            next[k] += a * phi0;
        }
        next[0] += coef;
        acc = next;
    }
    acc
}

/// `R_c(u, v, phi0) = Q_c(s, t, phi0)` with `s + t = uv`, `st = u^2 + v^2 - 4`.
fn r_c_at(c: u64, phi0: &BigRational, h: &[BiPoly]) -> BiPoly {
    let p = shifted_t(c, phi0);
    let mut out = BiPoly::zero();
    for (k, pk) in p.iter().enumerate().skip(1) {
        if !pk.is_zero() {
            out = out.add(&h[k - 1].scale(pk));
        }
    }
    out
}

fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &p;
            let (top, bottom) = m.split_at_mut(r);
            for (x, y) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x -= &f * y;
            }
        }
    }
    det
}

/// Sylvester resultant with formal degrees `df`, `dg` (coefficients past
/// the actual length are zero).
pub fn sylvester_resultant(
    f: &[BigRational],
    df: usize,
    g: &[BigRational],
    dg: usize,
) -> BigRational {
    let size = df + dg;
    if size == 0 {
        return BigRational::one();
    }
    let at = |p: &[BigRational], k: usize| p.get(k).cloned().unwrap_or_else(BigRational::zero);
    let mut m = vec![vec![BigRational::zero(); size]; size];
    for r in 0..dg {
        for k in 0..=df {
            m[r][r + k] = at(f, df - k);
        }
    }
    for r in 0..df {
        for k in 0..=dg {
            m[dg + r][r + k] = at(g, dg - k);
        }
    }
    determinant(m)
}

/// Coefficients of the interpolating polynomial through `(xs[i], ys[i])`.
pub fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> UPoly {
    let n = xs.len();
    let mut dd: Vec<BigRational> = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut out: UPoly = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        // out = out * (x - xs[i]) + dd[i]
        let mut next = vec![BigRational::zero(); n];
        for k in 0..n - 1 {
            if !out[k].is_zero() {
                next[k + 1] += &out[k];
                next[k] -= &out[k] * &xs[i];
            }
        }
        next[0] += &dd[i];
        out = next;
    }
    out
}

fn v_poly(m: u64) -> UPoly {
    cheb_poly_v(m as usize)
        .coeffs()
        .iter()
        .map(|x| BigRational::from_integer(x.clone()))
        .collect()
}

// Res_u(Res_v(F, V_inner(v)), V_outer(u)) at one value of phi.
fn double_resultant(f: &BiPoly, c: u64, inner: u64, outer: u64) -> BigRational {
    let (vi, vo) = (v_poly(inner), v_poly(outer));
    let dv = (c - 1) as usize;
    let du = dv * (inner - 1) as usize;
    let xs: Vec<BigRational> = (0..=du as i64).map(q).collect();
    let ys: Vec<BigRational> = xs
        .iter()
        .map(|u0| sylvester_resultant(&f.eval_u(u0), dv, &vi, (inner - 1) as usize))
        .collect();
    let g = interpolate(&xs, &ys);
    sylvester_resultant(&g, du, &vo, (outer - 1) as usize)
}

fn to_int_poly(p: UPoly) -> Result<IntPoly> {
    let coeffs = p
        .into_iter()
        .map(|c| {
            if c.denom().is_one() {
                Ok(c.numer().clone())
            } else {
                Err(Error::InternalInconsistency(format!(
                    "non-integral resultant coefficient {c}"
                )))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPoly::new(coeffs))
}

/// Both iterated resultants of `R_c(u, v, phi)` against `V_a`, `V_b`.
///
/// Returns `(Res_u(Res_v(R_c, V_b), V_a), Res_u(Res_v(R_c, V_a), V_b))`.
pub fn resultant_pair(a: u64, b: u64, c: u64) -> Result<(IntPoly, IntPoly)> {
    check_abc(a, b, c)?;
    let n = expected_degree(a, b, c);
    if n > MAX_ORACLE_DEGREE {
        return Err(Error::TooLarge(n as u64));
    }
    if a == 1 || b == 1 || c == 1 {
        return Ok((IntPoly::one(), IntPoly::one()));
    }
    let h = complete_symmetric((c - 1) as usize);
    let xs: Vec<BigRational> = (0..=(2 * n) as i64).map(q).collect();
    let mut first = Vec::with_capacity(xs.len());
    let mut second = Vec::with_capacity(xs.len());
    for phi0 in &xs {
        let f = r_c_at(c, phi0, &h);
        first.push(double_resultant(&f, c, b, a));
        second.push(double_resultant(&f, c, a, b));
    }
    Ok((
        to_int_poly(interpolate(&xs, &first))?,
        to_int_poly(interpolate(&xs, &second))?,
    ))
}

/// `R_{a,b,c}^2` up to sign, as `Res_u(Res_v(R_c(u, v, phi), V_b(v)), V_a(u))`.
///
/// The other pairing of resultants is computed too and must agree up to
/// sign. Fails with `TooLarge` past [`MAX_ORACLE_DEGREE`].
pub fn resultant_r_squared(a: u64, b: u64, c: u64) -> Result<IntPoly> {
    let (x, y) = resultant_pair(a, b, c)?;
    if x != y && x != y.neg() {
        return Err(Error::InternalInconsistency(
            "resultant pairings disagree".into(),
        ));
    }
    Ok(x)
}

/// Sign of `Q_c(s, t, u/v)` at crossing `(i, j)`, by interval evaluation
/// from `ell` bits upward. Zero only when some factor vanishes exactly.
#[allow(clippy::too_many_arguments)]
pub fn direct_qc_sign(
    a: u64,
    b: u64,
    c: u64,
    i: u64,
    j: u64,
    u: &BigInt,
    v: &BigInt,
    ell: u64,
) -> Result<i32> {
    check_abc(a, b, c)?;
    if i == 0 || 2 * i >= a || j == 0 || j >= b {
        return Err(Error::BadArgs(format!(
            "no crossing ({i}, {j}) for a = {a}, b = {b}"
        )));
    }
    if !v.is_positive() {
        return Err(Error::BadArgs("denominator must be positive".into()));
    }
    let g = u.gcd(v);
    let (u, v) = (u / &g, v / &g);
    let (ja, ib) = ((j * a) as i64, (i * b) as i64);
    let mut prec = ell.max(16);
    let mut exact_checked = false;
    loop {
        let p = prec as i64 + 8 * c as i64;
        let t = cos_pi_frac_interval(ja + ib, a * b, p);
        let s = cos_pi_frac_interval(ja - ib, a * b, p);
        let phi = DyadicInterval::from_int(u.clone()).div_int(&v, p);
        let val = tdiff_quotient(c, &(&t + &phi), &(&s + &phi));
        if let Some(sg) = val.sign() {
            if sg != 0 {
                return Ok(sg);
            }
        }
        if !exact_checked && prec >= 128 {
            let zero = (1..=c / 2).any(|k| {
                FactorIndex::new(a, b, c, i, j, k)
                    .map(|idx| factor_sign_at_rational(&idx, &u, &v) == 0)
                    .unwrap_or(false)
            });
            if zero {
                return Ok(0);
            }
            exact_checked = true;
        }
        prec *= 2;
    }
}
