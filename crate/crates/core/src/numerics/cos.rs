//! Certified values of `2cos(k pi / n)`.
//!
//! The angle is reduced to `[0, pi/4]` using the symmetries of cosine, then
//! either a cosine or a sine Taylor series is summed in interval arithmetic.
//! `pi` itself comes from Machin's formula and is cached per precision.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use super::{Dyadic, DyadicInterval};

static PI_CACHE: RwLock<Option<(i64, DyadicInterval)>> = RwLock::new(None);

type TableKey = (u64, i64);
static TABLES: RwLock<Option<HashMap<TableKey, Arc<Vec<DyadicInterval>>>>> = RwLock::new(None);

// Total number of cached entries across all tables before the cache is flushed.
const TABLE_BUDGET: usize = 1 << 20;

fn guard_bits(prec: i64) -> i64 {
    let lg = 64 - (prec.max(1) as u64).leading_zeros() as i64;
    2 * lg + 8
}

/// Enclosure of `atan(1/m)` with width about `2^-w`.
fn atan_inv(m: u64, w: i64) -> DyadicInterval {
    let m_big = BigInt::from(m);
    let m2 = &m_big * &m_big;
    let mut power = m_big.clone();
    let mut sum = DyadicInterval::zero();
    let limit = BigInt::one() << (w as u64);
    let mut i: u64 = 0;
    loop {
        let den = &power * BigInt::from(2 * i + 1);
        if den > limit {
            // alternating tail bounded by the first omitted term < 2^-w
            sum = &sum + &DyadicInterval::symmetric(Dyadic::pow2(-w));
            return sum;
        }
        let one = BigInt::one();
        let lo = Dyadic::from_ratio_floor(&one, &den, w);
        let hi = Dyadic::from_ratio_ceil(&one, &den, w);
        let term = DyadicInterval::new(lo, hi);
        sum = if i.is_multiple_of(2) {
            &sum + &term
        } else {
            &sum - &term
        };
        power *= &m2;
        i += 1;
    }
}

/// Enclosure of pi of width at most `2^-prec`.
pub fn pi_interval(prec: i64) -> DyadicInterval {
    if let Some((p, v)) = PI_CACHE.read().unwrap().as_ref() {
        if *p >= prec {
            return v.round_out(prec + 2);
        }
    }
    let mut w = prec + 12;
    let value = loop {
        let a = atan_inv(5, w).shl(4);
        let b = atan_inv(239, w).shl(2);
        let v = &a - &b;
        if v.width() <= Dyadic::pow2(-prec - 3) {
            break v;
        }
        w += 8;
    };
    let mut cache = PI_CACHE.write().unwrap();
    match cache.as_ref() {
        Some((p, _)) if *p >= prec + 3 => {}
        _ => *cache = Some((prec + 3, value.clone())),
    }
    value.round_out(prec + 2)
}

fn cos_series(theta: &DyadicInterval, w: i64) -> DyadicInterval {
    let x2 = theta.square().round_out(w);
    let mut sum = DyadicInterval::from_int(1);
    let mut term = DyadicInterval::from_int(1);
    let tiny = Dyadic::pow2(-w);
    let mut m: u64 = 1;
    loop {
        term = (&term * &x2).div_int(&BigInt::from((2 * m - 1) * (2 * m)), w);
        if term.mag() <= tiny {
            return &sum + &DyadicInterval::symmetric(term.mag());
        }
        sum = if m % 2 == 1 {
            &sum - &term
        } else {
            &sum + &term
        };
        m += 1;
    }
}

fn sin_series(theta: &DyadicInterval, w: i64) -> DyadicInterval {
    let x2 = theta.square().round_out(w);
    let mut sum = theta.clone();
    let mut term = theta.clone();
    let tiny = Dyadic::pow2(-w);
    let mut m: u64 = 1;
    loop {
        term = (&term * &x2).div_int(&BigInt::from((2 * m) * (2 * m + 1)), w);
        if term.mag() <= tiny {
            return &sum + &DyadicInterval::symmetric(term.mag());
        }
        sum = if m % 2 == 1 {
            &sum - &term
        } else {
            &sum + &term
        };
        m += 1;
    }
}

/// Enclosure of `2cos(k pi / n)` of width at most `2^-prec`.
///
/// Rational values (`0`, `+-1`, `+-2`) are returned as exact points.
pub fn cos_pi_frac_interval(k: i64, n: u64, prec: i64) -> DyadicInterval {
    assert!(n >= 1, "n must be positive");
    let two_n = 2 * n as i128;
    let mut r = (k as i128).rem_euclid(two_n) as u64;
    if r > n {
        r = 2 * n - r;
    }
    if r == 0 {
        return DyadicInterval::from_int(2);
    }
    if r == n {
        return DyadicInterval::from_int(-2);
    }
    if 2 * r == n {
        return DyadicInterval::zero();
    }
    if 3 * r == n {
        return DyadicInterval::from_int(1);
    }
    if 3 * r == 2 * n {
        return DyadicInterval::from_int(-1);
    }
    let (r, negate) = if 2 * r > n { (n - r, true) } else { (r, false) };
    // angle r*pi/n now lies in (0, pi/2)
    let mut w = prec + guard_bits(prec);
    loop {
        let pi = pi_interval(w + 4);
        let v = if 4 * r <= n {
            let theta = (&pi * &DyadicInterval::from_int(r)).div_int(&BigInt::from(n), w);
            cos_series(&theta, w)
        } else {
            // cos(x) = sin(pi/2 - x), and pi/2 - x = (n - 2r) pi / 2n
            let theta =
                (&pi * &DyadicInterval::from_int(n - 2 * r)).div_int(&BigInt::from(2 * n), w);
            sin_series(&theta, w)
        };
        let v = v.shl(1).round_out(prec + 1);
        if v.width() <= Dyadic::pow2(-prec) {
            return if negate { -v } else { v };
        }
        w += 16;
    }
}

/// Dyadic `c` with `|c - 2cos(k pi / n)| <= 2^-ell`.
pub fn cos_pi_frac(k: i64, n: u64, ell: u64) -> Dyadic {
    let ell = ell as i64;
    let v = cos_pi_frac_interval(k, n, ell + 2);
    v.mid().round_to(ell + 2)
}

/// `[2cos(0), 2cos(pi/n), ..., 2cos((n-1)pi/n)]`, each of width `<= 2^-prec`.
///
/// Tables are shared through a bounded process-wide cache.
pub fn cos_table(n: u64, prec: i64) -> Arc<Vec<DyadicInterval>> {
    let key = (n, prec);
    if let Some(map) = TABLES.read().unwrap().as_ref() {
        if let Some(t) = map.get(&key) {
            return t.clone();
        }
    }
    let table: Arc<Vec<DyadicInterval>> = Arc::new(
        (0..n as i64)
            .map(|k| cos_pi_frac_interval(k, n, prec))
            .collect(),
    );
    if (n as usize) <= TABLE_BUDGET / 4 {
        let mut guard = TABLES.write().unwrap();
        let map = guard.get_or_insert_with(HashMap::new);
        let used: usize = map.values().map(|t| t.len()).sum();
        if used + n as usize > TABLE_BUDGET {
            map.clear();
        }
        map.insert(key, table.clone());
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_values() {
        assert_eq!(cos_pi_frac(1, 3, 10), Dyadic::one());
        assert_eq!(cos_pi_frac(1, 2, 10), Dyadic::zero());
        assert_eq!(cos_pi_frac(0, 7, 10), Dyadic::from(2));
        assert_eq!(cos_pi_frac(7, 7, 10), Dyadic::from(-2));
        assert_eq!(cos_pi_frac(-4, 6, 10), Dyadic::from(-1));
        assert_eq!(cos_pi_frac(15, 5, 10), Dyadic::from(-2));
    }

    #[test]
    fn golden_ratio() {
        // (1 + sqrt 5)/2 bracketed by integer square roots at 80 bits
        let five = BigInt::from(5) << 160u32;
        let s = five.sqrt();
        let lo = Dyadic::new(s.clone() + (BigInt::one() << 80u32), -81);
        let hi = Dyadic::new(s + BigInt::one() + (BigInt::one() << 80u32), -81);
        let c = cos_pi_frac(1, 5, 30);
        let tol = Dyadic::pow2(-30);
        assert!(c >= (&lo - &tol) && c <= (&hi + &tol));
    }

    #[test]
    fn pi_digits() {
        let p = pi_interval(200);
        assert!(p.width() <= Dyadic::pow2(-200));
        let (lo, hi) = p.to_f64_pair();
        assert!(lo <= std::f64::consts::PI + 1e-15 && hi >= std::f64::consts::PI - 1e-15);
    }

    #[test]
    fn width_contract() {
        for n in 1..40u64 {
            for k in -(n as i64)..(3 * n as i64) {
                let v = cos_pi_frac_interval(k, n, 50);
                assert!(v.width() <= Dyadic::pow2(-50));
                let x = 2.0 * (k as f64 * std::f64::consts::PI / n as f64).cos();
                let (lo, hi) = v.to_f64_pair();
                assert!(lo - 1e-12 <= x && x <= hi + 1e-12, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn table_matches_pointwise() {
        let t = cos_table(12, 40);
        for (k, v) in t.iter().enumerate() {
            assert_eq!(*v, cos_pi_frac_interval(k as i64, 12, 40));
        }
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn encloses_float_cosine(n in 1u64..400, k in -800i64..800, prec in 8i64..200) {
            let v = cos_pi_frac_interval(k, n, prec);
            prop_assert!(v.width() <= Dyadic::pow2(-prec));
            let f = 2.0 * (k as f64 * std::f64::consts::PI / n as f64).cos();
            let (lo, hi) = v.to_f64_pair();
            prop_assert!(lo - 1e-12 <= f && f <= hi + 1e-12);
        }

        #[test]
        fn reflection(n in 2u64..300, k in 0i64..300, prec in 8i64..120) {
            // 2cos((n - k) pi / n) = -2cos(k pi / n)
            let x = cos_pi_frac_interval(n as i64 - k, n, prec);
            let y = -cos_pi_frac_interval(k, n, prec);
            prop_assert!(x.overlaps(&y));
        }

        #[test]
        fn rounded_value_close(n in 1u64..200, k in 0i64..400, ell in 1u64..150) {
            let c = cos_pi_frac(k, n, ell);
            let v = cos_pi_frac_interval(k, n, ell as i64 + 8);
            let tol = DyadicInterval::symmetric(Dyadic::pow2(-(ell as i64)));
            prop_assert!((&v + &tol).contains(&c));
        }
    }
}
