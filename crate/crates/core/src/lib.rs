//! Chebyshev space curves `C(a, b, c, phi) = (T_a(t), T_b(t), T_c(t + phi))`:
//! the discriminant `R_{a,b,c}` whose real roots are the `phi` giving a
//! singular curve, certified isolation of those roots, and the knot
//! diagrams between them.

pub mod chebyshev;
pub mod curves;
pub mod diagram;
pub mod discriminant;
pub mod error;
pub mod factors;
pub mod numerics;
pub mod oracle;
pub mod roots;

pub use chebyshev::{ChebyshevForm, MonomialPoly};
pub use diagram::{
    compute_diagram, enumerate_diagrams, gauss_code, is_knot, render_svg, Crossing, GaussEntry,
    KnotCheck, KnotDiagram, Phi, Strand, SvgOptions,
};
pub use discriminant::{
    compute_r_exact, compute_r_numeric, norm_and_degree_report, IntPoly, NormReport,
};
pub use error::{Error, Result};
pub use factors::{FactorIndex, FactorKind, FactorPoly, FactorRoot, RootBranch, ShareRoot};
pub use numerics::{Dyadic, DyadicInterval};
pub use oracle::{direct_qc_sign, resultant_r_squared};
pub use roots::{
    isolate_roots, locate_phi, separation_audit, PhiLocation, RootCluster, RootDatabase, RootMode,
};

/// Version tag written into cached results.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
