//! The linear and quadratic factors `P_{alpha,beta,gamma}` of the
//! discriminant, with `alpha = i pi/a`, `beta = j pi/b`, `gamma = k pi/c`:
//!
//! ```text
//! P(phi) = phi^2 + 4 cos(alpha) cos(beta) phi
//!          + 4 (cos^2 alpha - cos^2 gamma)(cos^2 beta - cos^2 gamma) / sin^2 gamma
//! ```
//!
//! and `P(phi) = phi + 2 cos(alpha) cos(beta)` when `gamma = pi/2`.
//!
//! Exact coefficients live in `Z[2cos(pi/n)]`, `n = abc`, where
//! `alpha = ibc pi/n`, `beta = jac pi/n`, `gamma = kab pi/n`.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::chebyshev::{sign_at_cyclotomic, ChebyshevForm};
use crate::curves::check_ab;
use crate::error::{Error, Result};
use crate::numerics::{cos_pi_frac_interval, Dyadic, DyadicInterval};

/// Index triple `(i, j, k)` of one factor, together with its ambient `(a, b, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FactorIndex {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub i: u64,
    pub j: u64,
    pub k: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FactorKind {
    Linear,
    Quadratic,
}

/// A factor with exact Chebyshev-form coefficients, constant first.
///
/// Quadratic: `forms = [f_0, f_1, f_2]` with `f_2 phi^2 + f_1 phi + f_0 =
/// 4 sin^2(gamma) P(phi)`. Linear: `forms = [g_0, g_1]` with
/// `g_1 phi + g_0 = 2 P(phi)`. The normalizations multiply out to exactly
/// `c` per double point, which is the leading coefficient of `Q_c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorPoly {
    pub index: FactorIndex,
    pub kind: FactorKind,
    pub forms: Vec<ChebyshevForm>,
}

/// Which branch of the root formula a root comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootBranch {
    /// the root of a linear factor
    Linear,
    /// the double root 0
    Double,
    /// `-2cos(alpha)cos(beta) - sqrt(Delta)/2`
    Minus,
    /// `-2cos(alpha)cos(beta) + sqrt(Delta)/2`
    Plus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorRoot {
    pub interval: DyadicInterval,
    pub multiplicity: u32,
    pub branch: RootBranch,
}

/// Outcome of [`factors_share_root`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShareRoot {
    No,
    YesEqualFactors,
    /// `sin(alpha) = sin(gamma_1)` and `sin(beta) = sin(gamma_2)` (either order)
    YesCase1,
    /// `beta = pi/6` (or `5pi/6`), `gamma_1 = alpha/2`, `gamma_2 = pi/2 - alpha/2`
    YesCase2,
    /// a common root exists but none of the patterns above applies
    YesOther,
}

impl FactorIndex {
    pub fn new(a: u64, b: u64, c: u64, i: u64, j: u64, k: u64) -> Result<Self> {
        check_ab(a, b)?;
        if c == 0 {
            return Err(Error::BadArgs("c must be positive".into()));
        }
        if i == 0 || 2 * i > a - 1 || j == 0 || j >= b || k == 0 || 2 * k > c {
            return Err(Error::BadArgs(format!(
                "index ({i}, {j}, {k}) out of range for ({a}, {b}, {c})"
            )));
        }
        Ok(FactorIndex { a, b, c, i, j, k })
    }

    /// All factor indices of `(a, b, c)` in lexicographic `(i, j, k)` order.
    pub fn all(a: u64, b: u64, c: u64) -> Result<Vec<FactorIndex>> {
        check_ab(a, b)?;
        if c == 0 {
            return Err(Error::BadArgs("c must be positive".into()));
        }
        let mut out = Vec::new();
        for i in 1..=(a - 1) / 2 {
            for j in 1..b {
                for k in 1..=c / 2 {
                    out.push(FactorIndex { a, b, c, i, j, k });
                }
            }
        }
        Ok(out)
    }

    pub fn n(&self) -> u64 {
        self.a * self.b * self.c
    }

    pub fn kind(&self) -> FactorKind {
        if 2 * self.k == self.c {
            FactorKind::Linear
        } else {
            FactorKind::Quadratic
        }
    }

    // alpha, beta, gamma as multiples of pi/n
    fn abc_units(&self) -> (i64, i64, i64) {
        let (a, b, c) = (self.a as i64, self.b as i64, self.c as i64);
        (
            self.i as i64 * b * c,
            self.j as i64 * a * c,
            self.k as i64 * a * b,
        )
    }

    /// `sign(cos beta)`.
    fn cos_beta_sign(&self) -> i32 {
        (self.b as i64 - 2 * self.j as i64).signum() as i32
    }
}

impl fmt::Display for FactorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.i, self.j, self.k)
    }
}

/// Exact Chebyshev-form coefficients of one factor.
pub fn build_factor(idx: &FactorIndex) -> FactorPoly {
    let n = idx.n();
    let (al, be, ga) = idx.abc_units();
    match idx.kind() {
        FactorKind::Linear => {
            let g0 = ChebyshevForm::from_terms(n, 0, &[(be - al, 1), (be + al, 1)]);
            let g1 = ChebyshevForm::constant(n, 2);
            FactorPoly {
                index: *idx,
                kind: FactorKind::Linear,
                forms: vec![g0, g1],
            }
        }
        FactorKind::Quadratic => {
            let f2 = ChebyshevForm::from_terms(n, 2, &[(2 * ga, -1)]);
            let f1 = ChebyshevForm::from_terms(
                n,
                0,
                &[
                    (be - al, 2),
                    (be + al, 2),
                    (2 * ga + be - al, -1),
                    (2 * ga - be + al, -1),
                    (2 * ga - be - al, -1),
                    (2 * ga + be + al, -1),
                ],
            );
            let f0 = ChebyshevForm::from_terms(
                n,
                2,
                &[
                    (2 * be - 2 * al, 1),
                    (2 * be + 2 * al, 1),
                    (4 * ga, 1),
                    (2 * ga - 2 * al, -1),
                    (2 * ga + 2 * al, -1),
                    (2 * ga - 2 * be, -1),
                    (2 * ga + 2 * be, -1),
                ],
            );
            FactorPoly {
                index: *idx,
                kind: FactorKind::Quadratic,
                forms: vec![f0, f1, f2],
            }
        }
    }
}

/// Form whose sign is that of `sin^2(gamma) - sin^2(alpha) sin^2(beta)`, hence of the
/// discriminant `Delta = 16cos^2(gamma)(1 - sin^2(alpha)sin^2(beta)/sin^2(gamma))`.
pub fn discriminant_sign_form(idx: &FactorIndex) -> ChebyshevForm {
    let (al, be, ga) = idx.abc_units();
    ChebyshevForm::from_terms(
        idx.n(),
        4,
        &[
            (2 * be - 2 * al, -1),
            (2 * be + 2 * al, -1),
            (2 * be, 2),
            (2 * al, 2),
            (2 * ga, -4),
        ],
    )
}

/// Exact sign of the discriminant of a quadratic factor.
pub fn discriminant_sign(idx: &FactorIndex) -> Result<i32> {
    if idx.kind() == FactorKind::Linear {
        return Err(Error::NotQuadratic);
    }
    if has_double_root(idx) {
        return Ok(0);
    }
    Ok(sign_at_cyclotomic(&discriminant_sign_form(idx)))
}

/// `beta = pi/2` and `gamma = alpha`, for a quadratic factor. Pure arithmetic.
pub fn has_double_root(idx: &FactorIndex) -> bool {
    idx.kind() == FactorKind::Quadratic && idx.b == 2 * idx.j && idx.i * idx.c == idx.k * idx.a
}

// cos^2(alpha) = cos^2(gamma) or cos^2(beta) = cos^2(gamma): the constant term vanishes
fn constant_term_vanishes(idx: &FactorIndex) -> bool {
    let FactorIndex { a, b, c, i, j, k } = *idx;
    i * c == k * a || j * c == k * b || (b - j) * c == k * b
}

/// Certified real roots, each of width at most `2^-ell`.
///
/// Exact zeros are returned as the point interval `[0, 0]`.
pub fn factor_roots(idx: &FactorIndex, ell: u64) -> Result<Vec<FactorRoot>> {
    let zero = DyadicInterval::zero();
    if idx.kind() == FactorKind::Linear {
        if idx.b == 2 * idx.j {
            return Ok(vec![FactorRoot {
                interval: zero,
                multiplicity: 1,
                branch: RootBranch::Linear,
            }]);
        }
        let (al, be, _) = idx.abc_units();
        let n = idx.n();
        let p = ell as i64 + 2;
        let s = &cos_pi_frac_interval(be + al, n, p) + &cos_pi_frac_interval(be - al, n, p);
        return Ok(vec![FactorRoot {
            interval: (-s).shl(-1),
            multiplicity: 1,
            branch: RootBranch::Linear,
        }]);
    }
    let ds = discriminant_sign(idx)?;
    if ds < 0 {
        return Ok(Vec::new());
    }
    if ds == 0 {
        return Ok(vec![FactorRoot {
            interval: zero,
            multiplicity: 2,
            branch: RootBranch::Double,
        }]);
    }
    let zero_branch = if constant_term_vanishes(idx) {
        Some(if idx.cos_beta_sign() > 0 {
            RootBranch::Plus
        } else {
            RootBranch::Minus
        })
    } else {
        None
    };
    let target = Dyadic::pow2(-(ell as i64));
    let mut p = ell as i64 + 24;
    loop {
        let (minus, plus) = quadratic_roots_at(idx, p)?;
        let ok = [&minus, &plus]
            .iter()
            .zip([RootBranch::Minus, RootBranch::Plus])
            .all(|(r, br)| Some(br) == zero_branch || r.width() <= target);
        if ok {
            let mk = |iv: DyadicInterval, br: RootBranch| FactorRoot {
                interval: if Some(br) == zero_branch {
                    DyadicInterval::zero()
                } else {
                    iv.round_out(ell as i64 + 2)
                },
                multiplicity: 1,
                branch: br,
            };
            let (m, pl) = (mk(minus, RootBranch::Minus), mk(plus, RootBranch::Plus));
            return Ok(vec![m, pl]);
        }
        p *= 2;
    }
}

/// Root enclosures `(minus, plus)` of a quadratic factor with positive
/// discriminant, from cosine enclosures at `p` bits.
fn quadratic_roots_at(idx: &FactorIndex, p: i64) -> Result<(DyadicInterval, DyadicInterval)> {
    let ca = cos_pi_frac_interval(idx.i as i64, idx.a, p);
    let cb = cos_pi_frac_interval(idx.j as i64, idx.b, p);
    let cg = cos_pi_frac_interval(idx.k as i64, idx.c, p);
    let four = DyadicInterval::from_int(4);
    // 4 sin^2 of each angle
    let sa = &four - &ca.square();
    let sb = &four - &cb.square();
    let sg = &four - &cg.square();
    // Delta = 4 cg^2 (sg/4 - sa sb/16) / (sg/4) = cg^2 (4 sg - sa sb) / sg
    let num = &cg.square() * &(&sg.shl(2) - &(&sa * &sb));
    let delta = num.div(&sg.round_out(p), p)?;
    let delta = DyadicInterval::new(
        if delta.lo().signum() < 0 {
            Dyadic::zero()
        } else {
            delta.lo().clone()
        },
        delta.hi().clone().max(Dyadic::zero()),
    );
    let sq = delta.sqrt(p as u64)?.shl(-1);
    let center = -(&ca * &cb).shl(-1);
    Ok((&center - &sq, &center + &sq))
}

/// Exact sign of `P(u/v)`, `v > 0`.
///
/// Linear factors are tested at `2cos(pi/ab)` with the form
/// `v T_{ib-ja} + v T_{ib+ja} + 2u = 2 v P(u/v)`; quadratic ones at
/// `2cos(pi/n)` with `u^2 f_2 + u v f_1 + v^2 f_0 = 4 v^2 sin^2(gamma) P(u/v)`.
pub fn factor_sign_at_rational(idx: &FactorIndex, u: &BigInt, v: &BigInt) -> i32 {
    assert!(v > &BigInt::from(0), "denominator must be positive");
    sign_at_cyclotomic(&factor_value_form(idx, u, v))
}

/// The form whose value at the ambient point has the sign of `P(u/v)`.
pub fn factor_value_form(idx: &FactorIndex, u: &BigInt, v: &BigInt) -> ChebyshevForm {
    match idx.kind() {
        FactorKind::Linear => {
            let n = idx.a * idx.b;
            let (ib, ja) = ((idx.i * idx.b) as i64, (idx.j * idx.a) as i64);
            let base = ChebyshevForm::from_terms(n, 0, &[(ib - ja, 1), (ib + ja, 1)]);
            base.scale(v)
                .add(&ChebyshevForm::constant(n, u * BigInt::from(2)))
                .unwrap()
        }
        FactorKind::Quadratic => {
            let f = build_factor(idx);
            let t2 = f.forms[2].scale(&(u * u));
            let t1 = f.forms[1].scale(&(u * v));
            let t0 = f.forms[0].scale(&(v * v));
            t2.add(&t1).unwrap().add(&t0).unwrap()
        }
    }
}

fn resultant_form(f: &FactorPoly, g: &FactorPoly) -> Result<ChebyshevForm> {
    let m = |x: &ChebyshevForm, y: &ChebyshevForm| x.mul_mod(y);
    match (f.kind, g.kind) {
        (FactorKind::Linear, FactorKind::Linear) => {
            let (g0, g1) = (&f.forms[0], &f.forms[1]);
            let (h0, h1) = (&g.forms[0], &g.forms[1]);
            m(g1, h0)?.sub(&m(g0, h1)?)
        }
        (FactorKind::Linear, FactorKind::Quadratic) => lin_quad_resultant(f, g),
        (FactorKind::Quadratic, FactorKind::Linear) => lin_quad_resultant(g, f),
        (FactorKind::Quadratic, FactorKind::Quadratic) => {
            let (p0, p1, p2) = (&f.forms[0], &f.forms[1], &f.forms[2]);
            let (q0, q1, q2) = (&g.forms[0], &g.forms[1], &g.forms[2]);
            let x = m(p2, q0)?.sub(&m(p0, q2)?)?;
            let y = m(p2, q1)?.sub(&m(p1, q2)?)?;
            let z = m(p1, q0)?.sub(&m(p0, q1)?)?;
            m(&x, &x)?.sub(&m(&y, &z)?)
        }
    }
}

// g_1^2 f_0 - g_1 g_0 f_1 + g_0^2 f_2
fn lin_quad_resultant(lin: &FactorPoly, quad: &FactorPoly) -> Result<ChebyshevForm> {
    let (g0, g1) = (&lin.forms[0], &lin.forms[1]);
    let (f0, f1, f2) = (&quad.forms[0], &quad.forms[1], &quad.forms[2]);
    let a = g1.mul_mod(g1)?.mul_mod(f0)?;
    let b = g1.mul_mod(g0)?.mul_mod(f1)?;
    let c = g0.mul_mod(g0)?.mul_mod(f2)?;
    a.sub(&b)?.add(&c)
}

fn proportional(f: &FactorPoly, g: &FactorPoly) -> Result<bool> {
    if f.kind != g.kind {
        return Ok(false);
    }
    let d = f.forms.len() - 1;
    let (lf, lg) = (&f.forms[d], &g.forms[d]);
    for (x, y) in f.forms.iter().zip(&g.forms) {
        if sign_at_cyclotomic(&x.mul_mod(lg)?.sub(&y.mul_mod(lf)?)?) != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn case1(x: &FactorIndex, y: &FactorIndex) -> bool {
    let FactorIndex { a, b, c, i, j, .. } = *x;
    // sin(alpha) = sin(gamma) with both in (0, pi/2]; sin(beta) = sin(gamma) allows pi - beta
    let alpha_eq = |k: u64| i * c == k * a;
    let beta_eq = |k: u64| j * c == k * b || (b - j) * c == k * b;
    (alpha_eq(x.k) && beta_eq(y.k)) || (alpha_eq(y.k) && beta_eq(x.k))
}

fn case2(x: &FactorIndex, y: &FactorIndex) -> bool {
    let FactorIndex { a, b, c, i, j, .. } = *x;
    if 6 * j != b && 6 * j != 5 * b {
        return false;
    }
    // sin(gamma_1) sin(gamma_2) = sin(alpha)/2 along sin(x/2) sin(pi/2 - x/2) = sin(x)/2
    let half_alpha = |k: u64| 2 * k * a == i * c;
    let complement = |k: u64| 2 * a * k + i * c == a * c;
    (half_alpha(x.k) && complement(y.k)) || (half_alpha(y.k) && complement(x.k))
}

/// Whether two distinct factors of the same `(a, b, c)` have a common root.
///
/// The answer is decided by the exact resultant of the two factors in
/// `Z[2cos(pi/n)]`; the returned variant then names the pattern by index
/// arithmetic.
pub fn factors_share_root(x: &FactorIndex, y: &FactorIndex) -> Result<ShareRoot> {
    if (x.a, x.b, x.c) != (y.a, y.b, y.c) {
        return Err(Error::AmbientMismatch(x.n(), y.n()));
    }
    let (f, g) = (build_factor(x), build_factor(y));
    if sign_at_cyclotomic(&resultant_form(&f, &g)?) != 0 {
        return Ok(ShareRoot::No);
    }
    let same_ab = (x.i, x.j) == (y.i, y.j);
    if same_ab && case1(x, y) {
        return Ok(ShareRoot::YesCase1);
    }
    if same_ab && case2(x, y) {
        return Ok(ShareRoot::YesCase2);
    }
    if proportional(&f, &g)? {
        return Ok(ShareRoot::YesEqualFactors);
    }
    Ok(ShareRoot::YesOther)
}
