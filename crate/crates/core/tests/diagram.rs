mod common;

use chebknot_core::diagram::{
    compute_diagram_in, crossing_parity, enumerate_diagrams_in, is_knot_in,
};
use chebknot_core::{
    compute_diagram, direct_qc_sign, enumerate_diagrams, is_knot, isolate_roots, Error, Phi,
    RootMode, Strand,
};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn phi(s: &str) -> Phi {
    s.parse().unwrap()
}

#[test]
fn figure_instances() {
    for (a, b, c, n) in [(3, 5, 7, 4), (5, 6, 7, 10), (5, 4, 7, 6)] {
        let p = phi("0");
        assert!(is_knot(a, b, c, &p).unwrap().knot);
        let d = compute_diagram(a, b, c, &p).unwrap();
        assert_eq!(d.crossings.len(), n);
        assert_eq!(d.gauss.len(), 2 * n);
        for cr in &d.crossings {
            let o = direct_qc_sign(a, b, c, cr.i, cr.j, &BigInt::from(0), &BigInt::from(1), 60)
                .unwrap();
            assert_eq!(cr.qc_sign, o, "({a},{b},{c}) ({},{})", cr.i, cr.j);
            assert_eq!(cr.sign, cr.parity * cr.qc_sign);
        }
    }
}

#[test]
fn parities_and_frozen_signs_357() {
    let d = compute_diagram(3, 5, 7, &phi("0")).unwrap();
    let parity: Vec<i32> = d.crossings.iter().map(|c| c.parity).collect();
    assert_eq!(parity, vec![-1, -1, 1, 1]);
    // float evaluation of Q_7 at the four crossings
    let float: Vec<i32> = (1..=4)
        .map(|j| {
            let (t, s) = common::crossing_params(3, 5, 1, j);
            common::qc(7, t, s, 0.0).signum() as i32
        })
        .collect();
    let qc: Vec<i32> = d.crossings.iter().map(|c| c.qc_sign).collect();
    assert_eq!(qc, float);
    assert_eq!(qc, vec![-1, 1, 1, -1]);
}

#[test]
fn random_regular_curves_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let pool = [
        (3u64, 4u64, 5u64),
        (3, 5, 7),
        (5, 4, 6),
        (3, 7, 4),
        (5, 6, 5),
        (3, 8, 3),
        (5, 2, 9),
    ];
    let dbs: Vec<_> = pool
        .iter()
        .map(|&(a, b, c)| isolate_roots(a, b, c, RootMode::Adaptive).unwrap())
        .collect();
    let mut done = 0;
    while done < 100 {
        let k = rng.gen_range(0..pool.len());
        let p = Phi::new(
            BigInt::from(rng.gen_range(-400i64..400)),
            BigInt::from(rng.gen_range(1i64..120)),
        )
        .unwrap();
        if !is_knot_in(&dbs[k], &p).unwrap().knot {
            continue;
        }
        let (a, b, c) = pool[k];
        let d = compute_diagram_in(&dbs[k], &p).unwrap();
        for cr in &d.crossings {
            let o = direct_qc_sign(a, b, c, cr.i, cr.j, &p.num, &p.den, 60).unwrap();
            assert_eq!(cr.qc_sign, o, "({a},{b},{c}) {p} ({},{})", cr.i, cr.j);
        }
        assert_eq!(d.crossings.len() as u64, (a - 1) * (b - 1) / 2);
        assert_eq!(d.gauss.len() as u64, (a - 1) * (b - 1));
        done += 1;
    }
}

#[test]
fn enumeration_345() {
    let db = isolate_roots(3, 4, 5, RootMode::Adaptive).unwrap();
    let ds = enumerate_diagrams_in(&db).unwrap();
    assert_eq!(ds.len(), 7);
    for (k, d) in ds.iter().enumerate() {
        assert_eq!(d.gap_index, k);
        let check = is_knot_in(&db, &d.phi).unwrap();
        assert!(check.knot);
        assert_eq!(check.interval_index, k);
        let r = d.phi.to_f64();
        assert!(r > -4.0 && r < 4.0);
    }
    // a second rational in each gap gives the same crossings
    let reps: Vec<f64> = ds.iter().map(|d| d.phi.to_f64()).collect();
    let bounds: Vec<f64> = std::iter::once(-4.0)
        .chain(db.clusters.iter().map(|c| c.interval.mid().to_f64()))
        .chain(std::iter::once(4.0))
        .collect();
    for (k, d) in ds.iter().enumerate() {
        let other = 0.5 * (reps[k] + bounds[k + 1]);
        let p = Phi::new(
            BigInt::from((other * 1e6).round() as i64),
            BigInt::from(1_000_000),
        )
        .unwrap();
        let e = compute_diagram_in(&db, &p).unwrap();
        assert_eq!(e.gap_index, k);
        assert_eq!(e.crossings, d.crossings);
        assert_eq!(e.gauss, d.gauss);
    }
}

#[test]
fn neighbouring_diagrams_differ_on_crossed_slices() {
    for (a, b, c) in [(3, 4, 5), (3, 5, 7), (5, 4, 6)] {
        let db = isolate_roots(a, b, c, RootMode::Adaptive).unwrap();
        let ds = enumerate_diagrams_in(&db).unwrap();
        for k in 0..db.clusters.len() {
            let root = &db.clusters[k];
            for (x, y) in ds[k].crossings.iter().zip(&ds[k + 1].crossings) {
                let flips = root.slice_multiplicity(x.i, x.j) % 2 == 1;
                assert_eq!(x.qc_sign != y.qc_sign, flips, "({a},{b},{c}) root {k}");
                assert_eq!(x.parity, y.parity);
            }
        }
        // far right every Q_c is positive
        assert!(ds.last().unwrap().crossings.iter().all(|c| c.qc_sign == 1));
    }
}

#[test]
fn gauss_code_structure() {
    let d = compute_diagram(5, 6, 7, &phi("0")).unwrap();
    let n = d.crossings.len();
    for k in 0..n {
        let visits: Vec<_> = d.gauss.iter().filter(|g| g.crossing == k).collect();
        assert_eq!(visits.len(), 2);
        assert_eq!(
            visits.iter().filter(|g| g.strand == Strand::Over).count(),
            1
        );
        assert!(visits.iter().all(|g| g.sign == d.crossings[k].sign));
    }
    // visits follow increasing parameter
    let params: Vec<f64> = {
        let mut v: Vec<f64> = d
            .crossings
            .iter()
            .flat_map(|c| [c.t_param.mid().to_f64(), c.s_param.mid().to_f64()])
            .collect();
        v.sort_by(|x, y| x.partial_cmp(y).unwrap());
        v
    };
    assert_eq!(params.len(), d.gauss.len());
    // the over visit is the one with the larger z = T_c(t + phi)
    for (k, cr) in d.crossings.iter().enumerate() {
        let (t, s) = common::crossing_params(5, 6, cr.i, cr.j);
        let (zt, zs) = (common::cheb_t(7, t), common::cheb_t(7, s));
        let over_param = if zt > zs { t } else { s };
        let pos = params
            .iter()
            .position(|p| (p - over_param).abs() < 1e-9)
            .unwrap();
        assert_eq!(d.gauss[pos].crossing, k);
        assert_eq!(d.gauss[pos].strand, Strand::Over);
    }
}

#[test]
fn diagram_json_shape() {
    let d = compute_diagram(3, 4, 5, &phi("1/3")).unwrap();
    let v = serde_json::to_value(&d).unwrap();
    assert_eq!(v["phi"]["num"], "1");
    assert_eq!(v["phi"]["den"], "3");
    assert_eq!(v["crossings"].as_array().unwrap().len(), 3);
    for key in ["i", "j", "parity", "qc_sign", "sign"] {
        assert!(v["crossings"][0].get(key).is_some());
    }
    assert!(["over", "under"].contains(&v["gauss"][0]["strand"].as_str().unwrap()));
    let back: chebknot_core::KnotDiagram = serde_json::from_value(v).unwrap();
    assert_eq!(back, d);
}

#[test]
fn knot_decisions() {
    assert!(is_knot(3, 5, 7, &phi("0")).unwrap().knot);
    assert!(is_knot(5, 6, 7, &phi("0")).unwrap().knot);
    assert!(!is_knot(3, 4, 6, &phi("0")).unwrap().knot);
    assert!(matches!(
        compute_diagram(3, 4, 6, &phi("0/5")),
        Err(Error::SingularCurve { .. })
    ));
    assert!(matches!(
        is_knot(4, 5, 7, &phi("0")),
        Err(Error::BadArgs(_))
    ));
    assert_eq!(enumerate_diagrams(1, 4, 5).unwrap().len(), 1);
    assert_eq!(crossing_parity(3, 5, 1, 1), -1);
}
