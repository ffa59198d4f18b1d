//! Chebyshev polynomials and arithmetic in `Z[2cos(pi/n)]` through
//! Chebyshev forms.

mod cyclotomic;
mod eval;
mod form;
mod poly;

pub use cyclotomic::{
    cyclotomic_poly, cyclotomic_poly_by_division, divisors, euler_phi, minimal_poly, mobius,
    reduce_canonical,
};
pub use eval::{eval_at_cyclotomic, sign_at_cyclotomic, zero_threshold_bits};
pub use form::{fold_index, ChebyshevForm};
pub use poly::{cheb_poly_t, cheb_poly_v, MonomialPoly};

/// `f * g mod M_n`.
pub fn mul_mod(f: &ChebyshevForm, g: &ChebyshevForm) -> crate::Result<ChebyshevForm> {
    f.mul_mod(g)
}
