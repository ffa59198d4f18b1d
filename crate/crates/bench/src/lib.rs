//! Shared inputs for the criterion benches.

use chebknot_core::ChebyshevForm;

/// Triples timed by the discriminant and root benches.
pub const INSTANCES: &[(u64, u64, u64)] = &[(3, 4, 5), (3, 5, 7), (5, 6, 7), (3, 8, 10)];

/// A dense form in `Z[2cos(pi/n)]` with small, deterministic coefficients.
pub fn dense_form(n: u64, seed: i64) -> ChebyshevForm {
    let terms: Vec<(i64, i64)> = (1..n as i64)
        .map(|i| (i, (i * 7 + seed * 13) % 19 - 9))
        .collect();
    ChebyshevForm::from_terms(n, seed % 5, &terms)
}
