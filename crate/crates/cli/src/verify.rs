//! Oracle checks run by `chebknot verify`.

use chebknot_core::{
    compute_r_exact, compute_r_numeric, direct_qc_sign, enumerate_diagrams, norm_and_degree_report,
    resultant_r_squared, roots::separation_audit, Dyadic, Error, RootDatabase,
};
use num_bigint::BigInt;
use serde::Serialize;

#[derive(Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub ok: bool,
    pub checks: Vec<Check>,
}

fn check(name: &'static str, ok: bool, detail: String) -> Check {
    let status = if ok { Status::Pass } else { Status::Fail };
    Check {
        name,
        status,
        detail,
    }
}

pub fn run(a: u64, b: u64, c: u64, db: &RootDatabase) -> Result<Report, Error> {
    let mut checks = Vec::new();
    let exact = compute_r_exact(a, b, c)?;

    let rep = norm_and_degree_report(&exact, a, b, c);
    checks.push(check(
        "structure",
        rep.bound_ok,
        format!("degree {}, leading {}", rep.degree, rep.leading),
    ));

    match compute_r_numeric(a, b, c) {
        Ok(numeric) => checks.push(check(
            "exact_vs_numeric",
            numeric == exact,
            format!("{} coefficients", exact.coeffs().len()),
        )),
        Err(e) => checks.push(check("exact_vs_numeric", false, e.to_string())),
    }

    match resultant_r_squared(a, b, c) {
        Ok(res) => {
            let sq = exact.mul(&exact);
            checks.push(check(
                "resultant",
                res == sq || res == sq.neg(),
                "double resultant against R^2".to_string(),
            ));
        }
        Err(Error::TooLarge(n)) => checks.push(Check {
            name: "resultant",
            status: Status::Skipped,
            detail: format!("degree {n} above the oracle limit"),
        }),
        Err(e) => return Err(e),
    }

    let diagrams = enumerate_diagrams(a, b, c)?;
    let mut compared = 0;
    let mut mismatches = 0;
    for d in &diagrams {
        for cr in &d.crossings {
            let o = direct_qc_sign(a, b, c, cr.i, cr.j, &d.phi.num, &d.phi.den, 64)?;
            compared += 1;
            if o != cr.qc_sign {
                mismatches += 1;
            }
        }
    }
    checks.push(check(
        "factor_signs",
        mismatches == 0,
        format!(
            "{compared} crossings over {} diagrams, {mismatches} mismatches",
            diagrams.len()
        ),
    ));

    match separation_audit(db) {
        Ok(gap) => {
            let n = (a * b * c) as i64;
            let bound = Dyadic::new(BigInt::from(1), -8 * n);
            checks.push(check(
                "separation",
                gap >= bound,
                format!("smallest gap above 2^{}", gap_log2(&gap)),
            ));
        }
        Err(Error::EmptyAudit) => checks.push(Check {
            name: "separation",
            status: Status::Skipped,
            detail: "fewer than two roots".to_string(),
        }),
        Err(e) => return Err(e),
    }

    let ok = checks.iter().all(|c| !matches!(c.status, Status::Fail));
    Ok(Report {
        a,
        b,
        c,
        ok,
        checks,
    })
}

fn gap_log2(d: &Dyadic) -> i64 {
    if d.is_zero() {
        return i64::MIN;
    }
    d.exponent() + d.mantissa().bits() as i64 - 1
}
