//! Float oracles written directly from the trigonometric definitions, with
//! no code shared with the library.
#![allow(dead_code)]

use std::f64::consts::PI;

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `(a, b, c)` with `a in {3, 5}`, `b <= 8` coprime to `a`, `2 <= c <= 10`.
pub fn grid() -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    for a in [3u64, 5] {
        for b in 2..=8u64 {
            if gcd(a, b) != 1 {
                continue;
            }
            for c in 2..=10u64 {
                out.push((a, b, c));
            }
        }
    }
    out
}

/// Monic Chebyshev `T_n(x)`, `T_n(2cos t) = 2cos(nt)`, by recurrence.
pub fn cheb_t(n: u64, x: f64) -> f64 {
    let (mut p, mut q) = (2.0, x);
    if n == 0 {
        return p;
    }
    for _ in 1..n {
        let r = x * q - p;
        p = q;
        q = r;
    }
    q
}

/// Parameters `t = 2cos(beta + alpha)`, `s = 2cos(beta - alpha)` of crossing `(i, j)`.
pub fn crossing_params(a: u64, b: u64, i: u64, j: u64) -> (f64, f64) {
    let (al, be) = (i as f64 * PI / a as f64, j as f64 * PI / b as f64);
    (2.0 * (be + al).cos(), 2.0 * (be - al).cos())
}

/// `(T_c(t + phi) - T_c(s + phi)) / (t - s)`.
pub fn qc(c: u64, t: f64, s: f64, phi: f64) -> f64 {
    (cheb_t(c, t + phi) - cheb_t(c, s + phi)) / (t - s)
}

pub fn crossings(a: u64, b: u64) -> Vec<(u64, u64)> {
    let mut v = Vec::new();
    for i in 1..=(a - 1) / 2 {
        for j in 1..b {
            v.push((i, j));
        }
    }
    v
}

/// `R_{a,b,c}(phi)` as the product of `Q_c` over all crossings.
pub fn r_float(a: u64, b: u64, c: u64, phi: f64) -> f64 {
    crossings(a, b)
        .into_iter()
        .map(|(i, j)| {
            let (t, s) = crossing_params(a, b, i, j);
            qc(c, t, s, phi)
        })
        .product()
}

/// Real roots of `phi^2 + 4cos(al)cos(be) phi + 4(cos^2 al - cos^2 ga)(cos^2 be - cos^2 ga)/sin^2 ga`.
pub fn factor_roots_float(a: u64, b: u64, c: u64, i: u64, j: u64, k: u64) -> Vec<f64> {
    let (al, be, ga) = (
        i as f64 * PI / a as f64,
        j as f64 * PI / b as f64,
        k as f64 * PI / c as f64,
    );
    let p = 4.0 * al.cos() * be.cos();
    if 2 * k == c {
        return vec![-p / 2.0];
    }
    let q = 4.0 * (al.cos().powi(2) - ga.cos().powi(2)) * (be.cos().powi(2) - ga.cos().powi(2))
        / ga.sin().powi(2);
    let d = p * p - 4.0 * q;
    if d < -1e-12 {
        Vec::new()
    } else {
        let r = d.max(0.0).sqrt();
        vec![(-p - r) / 2.0, (-p + r) / 2.0]
    }
}

pub fn expand(factors: &[&[i64]]) -> Vec<i64> {
    let mut acc = vec![1i64];
    for f in factors {
        let mut next = vec![0i64; acc.len() + f.len() - 1];
        for (x, a) in acc.iter().enumerate() {
            for (y, b) in f.iter().enumerate() {
                next[x + y] += a * b;
            }
        }
        acc = next;
    }
    acc
}

/// `(5phi^4 + 15phi^2 - 1)(25phi^8 - 50phi^6 + 35phi^4 - 20phi^2 + 1)`, constant first.
pub fn r345_reference() -> Vec<i64> {
    expand(&[&[-1, 0, 15, 0, 5], &[1, 0, -20, 0, 35, 0, -50, 0, 25]])
}
