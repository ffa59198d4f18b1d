use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use super::exact::{check_abc, check_structure};
use super::intpoly::{expected_degree, IntPoly};
use crate::chebyshev::eval_at_cyclotomic;
use crate::error::{Error, Result};
use crate::factors::{build_factor, FactorIndex};
use crate::numerics::Dyadic;

/// Polynomial with exact dyadic coefficients, constant first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicPoly {
    pub coeffs: Vec<Dyadic>,
}

impl DyadicPoly {
    pub fn one() -> Self {
        DyadicPoly {
            coeffs: vec![Dyadic::one()],
        }
    }

    pub fn l1_norm(&self) -> Dyadic {
        self.coeffs
            .iter()
            .fold(Dyadic::zero(), |acc, c| &acc + &c.abs())
    }

    /// Exact product: scale to a common exponent and multiply integers.
    pub fn mul(&self, other: &DyadicPoly) -> DyadicPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return DyadicPoly { coeffs: Vec::new() };
        }
        let (ma, ea) = common_exponent(&self.coeffs);
        let (mb, eb) = common_exponent(&other.coeffs);
        let mut out = vec![BigInt::zero(); ma.len() + mb.len() - 1];
        for (i, x) in ma.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in mb.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        DyadicPoly {
            coeffs: out.into_iter().map(|m| Dyadic::new(m, ea + eb)).collect(),
        }
    }
}

fn common_exponent(cs: &[Dyadic]) -> (Vec<BigInt>, i64) {
    let e = cs
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.exponent())
        .min()
        .unwrap_or(0);
    let ms = cs
        .iter()
        .map(|c| {
            if c.is_zero() {
                BigInt::zero()
            } else {
                c.mantissa() << ((c.exponent() - e) as u64)
            }
        })
        .collect();
    (ms, e)
}

/// A polynomial together with a bound on the l1 distance to the one it
/// approximates.
#[derive(Clone, Debug)]
pub struct Ball {
    pub poly: DyadicPoly,
    pub radius: Dyadic,
}

impl Ball {
    fn one() -> Self {
        Ball {
            poly: DyadicPoly::one(),
            radius: Dyadic::zero(),
        }
    }

    // ||AB - A'B'|| <= ||A'|| eb + ||B'|| ea + ea eb
    fn mul(&self, other: &Ball) -> Ball {
        let radius = &(&(&self.poly.l1_norm() * &other.radius)
            + &(&other.poly.l1_norm() * &self.radius))
            + &(&self.radius * &other.radius);
        Ball {
            poly: self.poly.mul(&other.poly),
            radius,
        }
    }
}

/// Balanced product of all leaves, padded with `1` to a power of two;
/// each level is combined in parallel.
pub fn product_tree(leaves: Vec<Ball>) -> Ball {
    if leaves.is_empty() {
        return Ball::one();
    }
    let mut level = leaves;
    let size = level.len().next_power_of_two();
    level.resize(size, Ball::one());
    while level.len() > 1 {
        level = level
            .par_chunks(2)
            .map(|pair| pair[0].mul(&pair[1]))
            .collect();
    }
    level.pop().unwrap()
}

/// Working accuracy `-log2(delta)` for the factor coefficients.
///
/// `delta = 2^(1-6N)`, tightened when the factor count makes the a priori
/// error `N_f 37^N_f delta` exceed `2^-4` (only possible for tiny `N`).
pub fn working_bits(n_total: usize, n_factors: usize) -> u64 {
    let base = (6 * n_total as u64).saturating_sub(1);
    let log_growth = 37f64.log2() * n_factors as f64 + (n_factors.max(1) as f64).log2();
    let needed = log_growth.ceil() as u64 + 4;
    base.max(needed)
}

fn approximate(idx: &FactorIndex, bits: u64) -> Ball {
    let f = build_factor(idx);
    let mut coeffs = Vec::with_capacity(f.forms.len());
    let mut radius = Dyadic::zero();
    for form in &f.forms {
        let v = eval_at_cyclotomic(form, bits + 1);
        radius = &radius + &v.width();
        coeffs.push(v.mid());
    }
    Ball {
        poly: DyadicPoly { coeffs },
        radius,
    }
}

/// `R_{a,b,c}` from certified approximations of the factor coefficients
/// multiplied in a product tree, then rounded to integers.
pub fn compute_r_numeric(a: u64, b: u64, c: u64) -> Result<IntPoly> {
    check_abc(a, b, c)?;
    let idx = FactorIndex::all(a, b, c)?;
    if idx.is_empty() {
        return Ok(IntPoly::one());
    }
    let bits = working_bits(expected_degree(a, b, c), idx.len());
    let leaves: Vec<Ball> = idx.par_iter().map(|f| approximate(f, bits)).collect();
    let prod = product_tree(leaves);
    let limit = Dyadic::new(BigInt::from(7), -4); // 1/2 - 1/16
    let mut out = Vec::with_capacity(prod.poly.coeffs.len());
    for (i, x) in prod.poly.coeffs.iter().enumerate() {
        let r = x.round();
        let dist = (x - &Dyadic::from_int(r.clone())).abs();
        if &dist + &prod.radius > limit {
            return Err(Error::RoundingAmbiguous { index: i });
        }
        out.push(r);
    }
    let r = IntPoly::new(out);
    check_structure(&r, a, b, c)?;
    Ok(r)
}

// Sanity helper for tests: largest |coefficient| error actually committed.
#[cfg(test)]
fn max_rounding_error(p: &DyadicPoly) -> Dyadic {
    p.coeffs
        .iter()
        .map(|x| (x - &Dyadic::from_int(x.round())).abs())
        .max()
        .unwrap_or_else(Dyadic::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discriminant::compute_r_exact;
    use num_traits::One;

    #[test]
    fn example_345() {
        let q = IntPoly::from_i64(&[-1, 0, 15, 0, 5]);
        let e = IntPoly::from_i64(&[1, 0, -20, 0, 35, 0, -50, 0, 25]);
        assert_eq!(compute_r_numeric(3, 4, 5).unwrap(), q.mul(&e));
    }

    #[test]
    fn agrees_with_exact_small() {
        for (a, b, c) in [(3, 2, 2), (3, 4, 6), (3, 5, 4), (5, 2, 3), (3, 7, 3)] {
            assert_eq!(
                compute_r_numeric(a, b, c).unwrap(),
                compute_r_exact(a, b, c).unwrap(),
                "({a},{b},{c})"
            );
        }
    }

    #[test]
    fn tree_padding() {
        let leaf = |c: i64| Ball {
            poly: DyadicPoly {
                coeffs: vec![Dyadic::from_int(c), Dyadic::one()],
            },
            radius: Dyadic::zero(),
        };
        let p = product_tree(vec![leaf(1), leaf(2), leaf(3)]);
        let got: Vec<i64> = p
            .poly
            .coeffs
            .iter()
            .map(|d| i64::try_from(d.round()).unwrap())
            .collect();
        assert_eq!(got, vec![6, 11, 6, 1]);
        assert!(p.radius.is_zero());
        assert!(max_rounding_error(&p.poly).is_zero());
    }

    #[test]
    fn radius_bounds_error() {
        let bits = 120;
        let idx = FactorIndex::all(3, 5, 7).unwrap();
        let leaves: Vec<Ball> = idx.iter().map(|f| approximate(f, bits)).collect();
        let prod = product_tree(leaves);
        assert!(prod.radius < Dyadic::new(BigInt::one(), -8));
        assert!(max_rounding_error(&prod.poly) <= prod.radius);
        assert!(prod.radius.signum() > 0);
    }
}
