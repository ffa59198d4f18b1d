//! Knot diagrams of `C(a, b, c, phi)`: regularity, crossing signs, Gauss
//! codes, and the list of all diagrams as `phi` runs over the real line.

mod svg;

pub use svg::{render_svg, SvgOptions};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::curves::double_points;
use crate::discriminant::check_abc;
use crate::error::{Error, Result};
use crate::numerics::{Dyadic, DyadicInterval};
use crate::roots::{isolate_roots, locate_phi, RootDatabase, RootMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotCheck {
    pub knot: bool,
    pub interval_index: usize,
}

/// A rational `phi`, kept in lowest terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Phi {
    pub num: BigInt,
    pub den: BigInt,
}

impl Phi {
    pub fn new(num: BigInt, den: BigInt) -> Result<Self> {
        if !den.is_positive() {
            return Err(Error::BadArgs("denominator must be positive".into()));
        }
        let g = num.gcd(&den);
        Ok(Phi {
            num: num / &g,
            den: den / &g,
        })
    }

    pub fn from_dyadic(d: &Dyadic) -> Self {
        let e = d.exponent();
        if e >= 0 {
            Phi {
                num: d.mantissa() << (e as u64),
                den: BigInt::one(),
            }
        } else {
            Phi {
                num: d.mantissa().clone(),
                den: BigInt::one() << ((-e) as u64),
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        num_rational::BigRational::new(self.num.clone(), self.den.clone())
            .to_f64()
            .unwrap_or(f64::NAN)
    }
}

impl std::str::FromStr for Phi {
    type Err = Error;

    /// `u/v` or a bare integer.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a rational: {s:?}"));
        let (u, v) = match s.split_once('/') {
            Some((u, v)) => (u.trim(), v.trim()),
            None => (s.trim(), "1"),
        };
        let u: BigInt = u.parse().map_err(|_| bad())?;
        let v: BigInt = v.parse().map_err(|_| bad())?;
        Phi::new(u, v)
    }
}

impl std::fmt::Display for Phi {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for Phi {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Phi", 2)?;
        st.serialize_field("num", &self.num.to_string())?;
        st.serialize_field("den", &self.den.to_string())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Phi {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            num: String,
            den: String,
        }
        let r = Raw::deserialize(d)?;
        let num = r.num.parse().map_err(serde::de::Error::custom)?;
        let den = r.den.parse().map_err(serde::de::Error::custom)?;
        Phi::new(num, den).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub i: u64,
    pub j: u64,
    pub parity: i32,
    pub qc_sign: i32,
    pub sign: i32,
    pub t_param: DyadicInterval,
    pub s_param: DyadicInterval,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strand {
    Over,
    Under,
}

/// One visit of the curve to a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaussEntry {
    /// position of the crossing in `KnotDiagram::crossings`
    pub crossing: usize,
    pub strand: Strand,
    pub sign: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotDiagram {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub phi: Phi,
    /// number of roots of `R_{a,b,c}` below `phi`
    pub gap_index: usize,
    pub crossings: Vec<Crossing>,
    pub gauss: Vec<GaussEntry>,
}

/// `(-1)^(i + j + floor(ib/a) + floor(ja/b))`.
pub fn crossing_parity(a: u64, b: u64, i: u64, j: u64) -> i32 {
    if (i + j + i * b / a + j * a / b).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn is_knot_in(db: &RootDatabase, phi: &Phi) -> Result<KnotCheck> {
    let loc = locate_phi(db, &phi.num, &phi.den)?;
    Ok(KnotCheck {
        knot: !loc.on_root,
        interval_index: loc.interval_index,
    })
}

/// Whether `C(a, b, c, u/v)` has no double point.
pub fn is_knot(a: u64, b: u64, c: u64, phi: &Phi) -> Result<KnotCheck> {
    let db = isolate_roots(a, b, c, RootMode::Adaptive)?;
    is_knot_in(&db, phi)
}

// Parameters of all crossings, refined until the 2m enclosures are disjoint.
fn separated_double_points(
    a: u64,
    b: u64,
) -> Result<Vec<(u64, u64, DyadicInterval, DyadicInterval)>> {
    let mut ell = 64;
    loop {
        let dps = double_points(a, b, ell)?;
        let mut params: Vec<&DyadicInterval> =
            dps.iter().flat_map(|d| [&d.t_param, &d.s_param]).collect();
        params.sort_by(|x, y| x.lo().cmp(y.lo()));
        if params.windows(2).all(|w| !w[0].overlaps(w[1])) {
            return Ok(dps
                .into_iter()
                .map(|d| (d.i, d.j, d.t_param, d.s_param))
                .collect());
        }
        if ell > 1 << 14 {
            return Err(Error::InternalInconsistency(
                "two crossings share a parameter".into(),
            ));
        }
        ell *= 2;
    }
}

/// Visits ordered by curve parameter; at each crossing the visit with the
/// larger parameter is over exactly when `qc_sign = +1`.
pub fn gauss_code(d: &KnotDiagram) -> Vec<GaussEntry> {
    let mut visits: Vec<(&DyadicInterval, usize, bool)> = Vec::with_capacity(2 * d.crossings.len());
    for (k, cr) in d.crossings.iter().enumerate() {
        let t_larger = cr.t_param.lo() > cr.s_param.hi();
        visits.push((&cr.t_param, k, t_larger));
        visits.push((&cr.s_param, k, !t_larger));
    }
    visits.sort_by(|x, y| x.0.lo().cmp(y.0.lo()));
    visits
        .into_iter()
        .map(|(_, k, larger)| {
            let cr = &d.crossings[k];
            let over = larger == (cr.qc_sign > 0);
            GaussEntry {
                crossing: k,
                strand: if over { Strand::Over } else { Strand::Under },
                sign: cr.sign,
            }
        })
        .collect()
}

fn diagram_at(db: &RootDatabase, phi: Phi, gap_index: usize) -> Result<KnotDiagram> {
    let (a, b, c) = (db.a, db.b, db.c);
    let mut crossings = Vec::new();
    for (i, j, t_param, s_param) in separated_double_points(a, b)? {
        let above: u32 = db
            .slices
            .iter()
            .find(|s| s.i == i && s.j == j)
            .map(|s| {
                s.clusters
                    .iter()
                    .filter(|&&k| k >= gap_index)
                    .map(|&k| db.clusters[k].slice_multiplicity(i, j))
                    .sum()
            })
            .unwrap_or(0);
        let qc_sign = if above.is_multiple_of(2) { 1 } else { -1 };
        let parity = crossing_parity(a, b, i, j);
        crossings.push(Crossing {
            i,
            j,
            parity,
            qc_sign,
            sign: parity * qc_sign,
            t_param,
            s_param,
        });
    }
    let mut d = KnotDiagram {
        a,
        b,
        c,
        phi,
        gap_index,
        crossings,
        gauss: Vec::new(),
    };
    d.gauss = gauss_code(&d);
    Ok(d)
}

/// Diagram of `C(a, b, c, phi)` from an existing root database.
pub fn compute_diagram_in(db: &RootDatabase, phi: &Phi) -> Result<KnotDiagram> {
    let check = is_knot_in(db, phi)?;
    if !check.knot {
        return Err(Error::SingularCurve {
            a: db.a,
            b: db.b,
            c: db.c,
            phi: phi.to_string(),
        });
    }
    diagram_at(db, phi.clone(), check.interval_index)
}

pub fn compute_diagram(a: u64, b: u64, c: u64, phi: &Phi) -> Result<KnotDiagram> {
    check_abc(a, b, c)?;
    let db = isolate_roots(a, b, c, RootMode::Adaptive)?;
    compute_diagram_in(&db, phi)
}

// A short dyadic strictly between lo and hi, near the midpoint.
fn gap_representative(lo: &Dyadic, hi: &Dyadic) -> Dyadic {
    let mid = (lo + hi).shl(-1);
    let quarter = (hi - lo).shl(-2);
    // coarsest grid 2^-p whose step stays under a quarter of the gap
    let mut p: i64 = -3;
    while Dyadic::pow2(-p) > quarter {
        p += 1;
    }
    mid.round_to(p)
}

/// Representatives `r_0 < phi_1 < r_1 < ... < phi_s < r_s` in `(-4, 4)`.
pub fn gap_representatives(db: &RootDatabase) -> Vec<Dyadic> {
    let mut bounds = vec![Dyadic::from_int(-4)];
    for cl in &db.clusters {
        bounds.push(cl.interval.lo().clone());
        bounds.push(cl.interval.hi().clone());
    }
    bounds.push(Dyadic::from_int(4));
    bounds
        .chunks(2)
        .map(|w| gap_representative(&w[0], &w[1]))
        .collect()
}

/// Every diagram of `C(a, b, c, phi)`, one per root-free interval.
pub fn enumerate_diagrams_in(db: &RootDatabase) -> Result<Vec<KnotDiagram>> {
    gap_representatives(db)
        .into_par_iter()
        .enumerate()
        .map(|(k, r)| {
            let phi = Phi::from_dyadic(&r);
            let check = is_knot_in(db, &phi)?;
            if !check.knot || check.interval_index != k {
                return Err(Error::InternalInconsistency(format!(
                    "representative {phi} not in gap {k}"
                )));
            }
            diagram_at(db, phi, k)
        })
        .collect()
}

pub fn enumerate_diagrams(a: u64, b: u64, c: u64) -> Result<Vec<KnotDiagram>> {
    check_abc(a, b, c)?;
    let db = isolate_roots(a, b, c, RootMode::Adaptive)?;
    enumerate_diagrams_in(&db)
}
