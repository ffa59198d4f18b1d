use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use super::form::ChebyshevForm;
use super::poly::MonomialPoly;

static MINPOLY_CACHE: RwLock<Option<HashMap<u64, Arc<ChebyshevForm>>>> = RwLock::new(None);

fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

pub fn euler_phi(m: u64) -> u64 {
    factorize(m)
        .into_iter()
        .fold(m, |acc, (p, _)| acc / p * (p - 1))
}

pub fn mobius(m: u64) -> i32 {
    let f = factorize(m);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m.is_multiple_of(d) {
            small.push(d);
            if d * d != m {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The cyclotomic polynomial `Phi_m`.
///
/// Uses `Phi_m = prod_{d | m} (1 - z^d)^{mu(m/d)}` (valid for `m > 1`) as a
/// power series truncated at degree `phi(m)`; negative powers become
/// geometric series.
pub fn cyclotomic_poly(m: u64) -> MonomialPoly {
    assert!(m >= 1, "m must be positive");
    if m == 1 {
        return MonomialPoly::from_i64(&[-1, 1]);
    }
    let deg = euler_phi(m) as usize;
    let mut s = vec![BigInt::zero(); deg + 1];
    s[0] = BigInt::from(1);
    for d in divisors(m) {
        let d_us = d as usize;
        match mobius(m / d) {
            1 => {
                // multiply by (1 - z^d)
                for i in (d_us..=deg).rev() {
                    let t = s[i - d_us].clone();
                    s[i] -= t;
                }
            }
            -1 => {
                // divide by (1 - z^d): prefix sums with stride d
                for i in d_us..=deg {
                    let t = s[i - d_us].clone();
                    s[i] += t;
                }
            }
            _ => {}
        }
    }
    MonomialPoly::new(s)
}

/// Reference construction: divide `z^m - 1` by `Phi_d` for every proper divisor `d`.
pub fn cyclotomic_poly_by_division(m: u64) -> MonomialPoly {
    let mut p = vec![BigInt::zero(); m as usize + 1];
    p[0] = BigInt::from(-1);
    p[m as usize] = BigInt::from(1);
    let mut p = MonomialPoly::new(p);
    for d in divisors(m) {
        if d != m {
            let (q, r) = p.div_rem_monic(&cyclotomic_poly_by_division(d));
            assert!(r.is_zero());
            p = q;
        }
    }
    p
}

fn build_minimal_poly(n: u64) -> ChebyshevForm {
    if n == 1 {
        // 2cos(pi) = -2
        return ChebyshevForm::raw(1, vec![BigInt::from(2), BigInt::from(1)]);
    }
    let phi = cyclotomic_poly(2 * n);
    let deg = phi.degree().unwrap();
    let m = deg / 2;
    // z^-m Phi_2n(z) = c_m + sum_k c_{m+k} (z^k + z^-k) = c_m + sum_k c_{m+k} T_k
    let c = phi.coeffs();
    let coeffs: Vec<BigInt> = (0..=m).map(|k| c[m + k].clone()).collect();
    ChebyshevForm::from_coeffs(n, coeffs)
}

/// `M_n`, the minimal polynomial of `2cos(pi/n)`, in the Chebyshev basis.
///
/// Monic of degree `phi(2n)/2` for `n >= 2`; `M_1 = 2 + T_1`. Cached.
pub fn minimal_poly(n: u64) -> Arc<ChebyshevForm> {
    assert!(n >= 1, "n must be positive");
    if let Some(map) = MINPOLY_CACHE.read().unwrap().as_ref() {
        if let Some(f) = map.get(&n) {
            return f.clone();
        }
    }
    let f = Arc::new(build_minimal_poly(n));
    let mut guard = MINPOLY_CACHE.write().unwrap();
    guard
        .get_or_insert_with(HashMap::new)
        .entry(n)
        .or_insert_with(|| f.clone())
        .clone()
}

/// Remainder of `f` modulo `M_n`, of degree below `deg M_n`.
///
/// The result is the zero form exactly when `f(2cos(pi/n)) = 0`.
pub fn reduce_canonical(f: &ChebyshevForm) -> ChebyshevForm {
    let n = f.n();
    let mpoly = minimal_poly(n);
    let m = mpoly.degree().unwrap();
    let Some(deg) = f.degree() else {
        return f.clone();
    };
    if deg < m {
        return f.clone();
    }
    let mut acc: Vec<BigInt> = f.coeffs().to_vec();
    let mterms: Vec<(usize, BigInt)> = mpoly.terms().map(|(i, c)| (i, c.clone())).collect();
    for d in (m..=deg).rev() {
        if acc[d].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut acc[d]);
        let j = d - m;
        // subtract c * T_j * M_n (just c * M_n when j = 0); indices stay below n
        for (k, mk) in &mterms {
            let p = &c * mk;
            if j == 0 {
                if *k != m {
                    acc[*k] -= p;
                }
            } else if *k == 0 {
                acc[j] -= p;
            } else {
                let hi = j + k;
                let lo = j.abs_diff(*k);
                if hi != d {
                    acc[hi] -= &p;
                }
                if lo == 0 {
                    acc[0] -= &p << 1u32;
                } else {
                    acc[lo] -= p;
                }
            }
        }
    }
    acc.truncate(m);
    ChebyshevForm::from_coeffs(n, acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebyshev::poly::cheb_poly_t;

    #[test]
    fn small_minimal_polys() {
        assert_eq!(*minimal_poly(4), ChebyshevForm::t(4, 2));
        assert_eq!(
            *minimal_poly(5),
            ChebyshevForm::from_terms(5, 1, &[(1, -1), (2, 1)])
        );
        assert_eq!(
            *minimal_poly(6),
            ChebyshevForm::from_terms(6, -1, &[(2, 1)])
        );
        assert_eq!(*minimal_poly(2), ChebyshevForm::t(2, 1));
        assert_eq!(
            *minimal_poly(3),
            ChebyshevForm::from_terms(3, -1, &[(1, 1)])
        );
    }

    #[test]
    fn cyclotomic_constructions_agree() {
        for m in 1..=120 {
            assert_eq!(
                cyclotomic_poly(m),
                cyclotomic_poly_by_division(m),
                "m = {m}"
            );
        }
        assert_eq!(
            cyclotomic_poly(10),
            MonomialPoly::from_i64(&[1, -1, 1, -1, 1])
        );
    }

    #[test]
    fn minimal_poly_divides_t_n_plus_2() {
        for n in 1..=40u64 {
            let mono = minimal_poly(n).to_monomial();
            let target = cheb_poly_t(n as usize).add(&MonomialPoly::constant(2));
            let (_, r) = target.div_rem_monic(&mono);
            assert!(r.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn reduction_examples() {
        assert!(reduce_canonical(&minimal_poly(9)).is_zero());
        assert!(reduce_canonical(&ChebyshevForm::zero(9)).is_zero());
        let f = ChebyshevForm::from_terms(5, 1, &[(1, -1), (2, 1)]);
        assert!(reduce_canonical(&f).is_zero());
        // T_3 at 2cos(pi/6) is 2cos(pi/2) = 0
        assert!(reduce_canonical(&ChebyshevForm::t(6, 3)).is_zero());
        assert_eq!(
            reduce_canonical(&ChebyshevForm::t(6, 1)),
            ChebyshevForm::t(6, 1)
        );
    }

    #[test]
    fn arithmetic_helpers() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(12), 0);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }
}
