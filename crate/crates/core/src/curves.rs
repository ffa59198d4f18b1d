//! Plane Chebyshev and Lissajous curves: double points, implicit
//! equations, factorization identities and singular-point counts.

use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{cos_pi_frac_interval, Dyadic, DyadicInterval};

/// A crossing of the plane curve `(T_a(t), T_b(t))`, reached at the two
/// parameters `t = 2cos(beta + alpha)` and `s = 2cos(beta - alpha)` with
/// `alpha = i pi / a`, `beta = j pi / b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoublePoint {
    pub i: u64,
    pub j: u64,
    pub t_param: DyadicInterval,
    pub s_param: DyadicInterval,
}

pub(crate) fn check_ab(a: u64, b: u64) -> Result<()> {
    if a == 0 || b == 0 {
        return Err(Error::BadArgs("a and b must be positive".into()));
    }
    if a.is_multiple_of(2) {
        return Err(Error::BadArgs(format!("a = {a} must be odd")));
    }
    if a.gcd(&b) != 1 {
        return Err(Error::BadArgs(format!("gcd({a}, {b}) != 1")));
    }
    Ok(())
}

/// Double points ordered by `(i, j)`; parameters certified to width `2^-ell`.
pub fn double_points(a: u64, b: u64, ell: u64) -> Result<Vec<DoublePoint>> {
    check_ab(a, b)?;
    let n = a * b;
    let mut out = Vec::with_capacity(((a - 1) * (b - 1) / 2) as usize);
    for i in 1..=(a - 1) / 2 {
        for j in 1..b {
            let (ja, ib) = ((j * a) as i64, (i * b) as i64);
            out.push(DoublePoint {
                i,
                j,
                t_param: cos_pi_frac_interval(ja + ib, n, ell as i64),
                s_param: cos_pi_frac_interval(ja - ib, n, ell as i64),
            });
        }
    }
    Ok(out)
}

/// `T_m(x)` on an interval by the three-term recurrence.
pub fn cheb_t_interval(m: u64, x: &DyadicInterval) -> DyadicInterval {
    let mut prev = DyadicInterval::from_int(2);
    if m == 0 {
        return prev;
    }
    let mut cur = x.clone();
    for _ in 1..m {
        let next = &(x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `(T_m(t) - T_m(s)) / (t - s)`, via `P_{m+1} = t P_m + T_m(s) - P_{m-1}`.
pub fn tdiff_quotient(m: u64, t: &DyadicInterval, s: &DyadicInterval) -> DyadicInterval {
    if m == 0 {
        return DyadicInterval::zero();
    }
    let (mut p_prev, mut p_cur) = (DyadicInterval::zero(), DyadicInterval::from_int(1));
    let (mut ts_prev, mut ts_cur) = (DyadicInterval::from_int(2), s.clone());
    for _ in 1..m {
        let p_next = &(&(t * &p_cur) + &ts_cur) - &p_prev;
        let ts_next = &(s * &ts_cur) - &ts_prev;
        p_prev = std::mem::replace(&mut p_cur, p_next);
        ts_prev = std::mem::replace(&mut ts_cur, ts_next);
    }
    p_cur
}

/// `C_{a,b,phi}(x, y) = T_b(x)^2 + T_a(y)^2 - 2cos(a phi) T_b(x) T_a(y) - 4 sin^2(a phi)`.
pub fn lissajous_implicit_eval(
    a: u64,
    b: u64,
    cos_a_phi: &DyadicInterval,
    x: &DyadicInterval,
    y: &DyadicInterval,
) -> DyadicInterval {
    let tb = cheb_t_interval(b, x);
    let ta = cheb_t_interval(a, y);
    let c2 = cos_a_phi.square();
    let four_sin2 = (&DyadicInterval::from_int(1) - &c2).shl(2);
    let cross = (&(&tb * &ta) * cos_a_phi).shl(1);
    &(&(&tb.square() + &ta.square()) - &cross) - &four_sin2
}

/// `E_mu(x, y)` for `mu = 2 k pi / d`: `x - y` when `mu = 0`, `x + y` when
/// `mu = pi`, else `x^2 + y^2 - 2cos(mu) x y - 4 sin^2(mu)`.
pub fn ellipse_factor_eval(
    k: u64,
    d: u64,
    x: &DyadicInterval,
    y: &DyadicInterval,
    prec: i64,
) -> DyadicInterval {
    let r = (2 * k) % (2 * d);
    if r == 0 {
        return x - y;
    }
    if r == d {
        return x + y;
    }
    // two_cos = 2cos(mu); 4 sin^2 = 4 - two_cos^2
    let two_cos = cos_pi_frac_interval(2 * k as i64, d, prec);
    let four_sin2 = &DyadicInterval::from_int(4) - &two_cos.square();
    let quad = &x.square() + &y.square();
    &(&quad - &(&two_cos * &(x * y))) - &four_sin2
}

pub fn singular_count_implicit(n: u64, m: u64) -> u64 {
    (n.saturating_sub(1) / 2) * (m.saturating_sub(1) / 2) + (n / 2) * (m / 2)
}

pub fn singular_count_lissajous(a: u64, b: u64) -> u64 {
    2 * a * b - a - b
}

fn sample_point(rng: &mut ChaCha8Rng) -> DyadicInterval {
    // uniform dyadic in [-2, 2] with 20 fractional bits
    let m: i64 = rng.gen_range(-(1i64 << 21)..=(1i64 << 21));
    DyadicInterval::point(Dyadic::new(BigInt::from(m), -20))
}

fn contains_within(v: &DyadicInterval, exact: &DyadicInterval, ell: u64) -> bool {
    let tol = DyadicInterval::symmetric(Dyadic::pow2(-(ell as i64)));
    let widened = v + &tol;
    widened.overlaps(exact)
}

/// Checks `(T_n(t) - T_n(s)) / (t - s) = prod_{k=1}^{n/2} E_{2k pi/n}(s, t)`
/// at `samples` seeded random dyadic points, to tolerance `2^-ell`.
pub fn check_tdiff_factorization(n: u64, samples: usize, ell: u64) -> bool {
    assert!(n >= 2, "n must be at least 2");
    let prec = ell as i64 + 5 * n as i64 + 16;
    let mut rng = ChaCha8Rng::seed_from_u64(0x7d1f_f000 + n);
    (0..samples).all(|_| {
        let (t, s) = (sample_point(&mut rng), sample_point(&mut rng));
        let lhs = tdiff_quotient(n, &t, &s);
        let mut rhs = DyadicInterval::from_int(1);
        for k in 1..=n / 2 {
            rhs = &rhs * &ellipse_factor_eval(k, n, &s, &t, prec);
        }
        contains_within(&rhs, &lhs, ell)
    })
}

/// Checks `T_{bd}(x) - T_{ad}(y) = prod_{k=0}^{d/2} E_{2k pi/d}(T_b(x), T_a(y))`.
pub fn check_composite_factorization(a: u64, b: u64, d: u64, samples: usize, ell: u64) -> bool {
    assert!(d >= 1, "d must be positive");
    let prec = ell as i64 + 8 * (a + b) as i64 * d as i64 + 16;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + 97 * a + 31 * b + d);
    (0..samples).all(|_| {
        let (x, y) = (sample_point(&mut rng), sample_point(&mut rng));
        let lhs = &cheb_t_interval(b * d, &x) - &cheb_t_interval(a * d, &y);
        let (tb, ta) = (cheb_t_interval(b, &x), cheb_t_interval(a, &y));
        let mut rhs = DyadicInterval::from_int(1);
        for k in 0..=d / 2 {
            rhs = &rhs * &ellipse_factor_eval(k, d, &tb, &ta, prec);
        }
        contains_within(&rhs, &lhs, ell)
    })
}
