//! The discriminant `R_{a,b,c}`: an exact path through Chebyshev forms and a
//! numeric path through certified factor approximations and a product tree.

mod exact;
mod intpoly;
mod numeric;

pub use exact::{compute_r_exact, CycloPoly};
pub use intpoly::{expected_degree, expected_leading, norm_and_degree_report, IntPoly, NormReport};
pub use numeric::{compute_r_numeric, product_tree, working_bits, Ball, DyadicPoly};

pub(crate) use exact::check_abc;
