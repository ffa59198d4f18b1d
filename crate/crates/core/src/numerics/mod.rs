//! Exact dyadic numbers, outward-rounded interval arithmetic and certified
//! cosines at rational multiples of pi.

mod cos;
mod dyadic;
mod interval;

pub use cos::{cos_pi_frac, cos_pi_frac_interval, cos_table, pi_interval};
pub use dyadic::Dyadic;
pub use interval::{interval_arith, interval_sqrt, ArithOp, DyadicInterval};
