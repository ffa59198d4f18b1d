use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::cyclotomic::{minimal_poly, reduce_canonical};
use super::form::ChebyshevForm;
use crate::numerics::{cos_pi_frac_interval, cos_table, Dyadic, DyadicInterval};

// Dense forms share one precomputed cosine table per (n, precision).
fn use_table(f: &ChebyshevForm) -> bool {
    let nnz = f.terms().count() as u64;
    nnz * 8 > f.n()
}

/// Interval of width `<= 2^-ell` containing `f(2cos(pi/n))`.
pub fn eval_at_cyclotomic(f: &ChebyshevForm, ell: u64) -> DyadicInterval {
    let n = f.n();
    let p = ell as i64 + f.norm_t().bits() as i64 + 1;
    let table = if use_table(f) {
        Some(cos_table(n, p))
    } else {
        None
    };
    let mut acc = DyadicInterval::from_int(f.const_term());
    for (i, c) in f.terms() {
        if i == 0 {
            continue;
        }
        let v = match &table {
            Some(t) => t[i].clone(),
            None => cos_pi_frac_interval(i as i64, n, p),
        };
        acc = &acc + &v.scale(&Dyadic::from_int(c.clone()));
    }
    acc.round_out(ell as i64 + 1)
}

/// Bits of absolute precision below which a nonzero value of `f` cannot hide.
///
/// A nonzero `f(2cos(pi/n))` is an algebraic integer whose conjugates are
/// all bounded by `||f||_T`, so `|f| >= ||f||_T^(1 - deg M_n)`; this is at
/// least as strong as `||f||_T^(1 - n/2)`.
pub fn zero_threshold_bits(f: &ChebyshevForm) -> u64 {
    let m = minimal_poly(f.n()).degree().unwrap_or(1) as u64;
    let lg = f.norm_t().bits();
    m.saturating_sub(1) * lg + 2
}

/// Exact sign of `f(2cos(pi/n))`.
///
/// Precision starts at 64 bits and doubles. A zero is certified either by
/// interval width dropping under [`zero_threshold_bits`] or, once precision
/// passes 512 bits, by exact reduction modulo `M_n`.
pub fn sign_at_cyclotomic(f: &ChebyshevForm) -> i32 {
    if f.is_zero() {
        return 0;
    }
    if f.degree() == Some(0) {
        return sign_of(&f.const_term());
    }
    let threshold = zero_threshold_bits(f);
    let mut exact_checked = false;
    let mut prec = 64u64;
    loop {
        let v = eval_at_cyclotomic(f, prec);
        match v.sign() {
            Some(s) if s != 0 => return s,
            _ => {}
        }
        if prec >= threshold {
            return 0;
        }
        if prec >= 512 && !exact_checked {
            if reduce_canonical(f).is_zero() {
                return 0;
            }
            exact_checked = true;
        }
        prec *= 2;
    }
}

fn sign_of(x: &BigInt) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_zero() {
        0
    } else {
        -1
    }
}
