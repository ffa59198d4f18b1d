//! Real roots of `R_{a,b,c}` with multiplicities, isolated factor by factor
//! without expanding the discriminant.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::discriminant::check_abc;
use crate::error::{Error, Result};
use crate::factors::{
    factor_roots, factor_sign_at_rational, factors_share_root, FactorIndex, RootBranch, ShareRoot,
};
use crate::numerics::{Dyadic, DyadicInterval};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum RootMode {
    /// start low, refine only where roots are not yet told apart
    #[default]
    Adaptive,
    /// every factor root to width `2^(-8n-3)`, merged by the separation bound
    Certified,
}

impl std::str::FromStr for RootMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "adaptive" => Ok(RootMode::Adaptive),
            "certified" => Ok(RootMode::Certified),
            _ => Err(Error::BadArgs(format!("unknown mode {s:?}"))),
        }
    }
}

/// One factor vanishing at a cluster.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vanishing {
    pub index: FactorIndex,
    pub multiplicity: u32,
    pub branch: RootBranch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootCluster {
    pub interval: DyadicInterval,
    pub multiplicity: u32,
    pub vanishing: Vec<Vanishing>,
}

impl RootCluster {
    /// Multiplicity contributed by factors of crossing `(i, j)`.
    pub fn slice_multiplicity(&self, i: u64, j: u64) -> u32 {
        self.vanishing
            .iter()
            .filter(|v| v.index.i == i && v.index.j == j)
            .map(|v| v.multiplicity)
            .sum()
    }
}

/// Cluster indices where some factor of crossing `(i, j)` vanishes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Slice {
    pub i: u64,
    pub j: u64,
    pub clusters: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootDatabase {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub mode: RootMode,
    pub clusters: Vec<RootCluster>,
    pub slices: Vec<Slice>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiLocation {
    pub on_root: bool,
    /// number of clusters strictly below `phi`
    pub interval_index: usize,
}

/// Bits of accuracy per factor root in certified mode: `8n + 3`.
pub fn certified_bits(a: u64, b: u64, c: u64) -> u64 {
    8 * a * b * c + 3
}

#[derive(Clone, Debug)]
struct Item {
    index: FactorIndex,
    branch: RootBranch,
    multiplicity: u32,
    interval: DyadicInterval,
    bits: u64,
}

fn items_of(idx: &FactorIndex, bits: u64) -> Result<Vec<Item>> {
    Ok(factor_roots(idx, bits)?
        .into_iter()
        .map(|r| Item {
            index: *idx,
            branch: r.branch,
            multiplicity: r.multiplicity,
            interval: r.interval,
            bits,
        })
        .collect())
}

fn all_items(idx: &[FactorIndex], bits: u64) -> Result<Vec<Item>> {
    let per: Vec<Vec<Item>> = idx
        .par_iter()
        .map(|f| items_of(f, bits))
        .collect::<Result<_>>()?;
    Ok(per.into_iter().flatten().collect())
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            self.0[rx.max(ry)] = rx.min(ry);
        }
    }
}

fn sort_items(items: &mut [Item]) {
    items.sort_by(|x, y| {
        x.interval
            .lo()
            .cmp(y.interval.lo())
            .then_with(|| x.interval.hi().cmp(y.interval.hi()))
            .then_with(|| x.index.cmp(&y.index))
            .then_with(|| x.branch.cmp(&y.branch))
    });
}

fn build_database(
    a: u64,
    b: u64,
    c: u64,
    mode: RootMode,
    items: &[Item],
    uf: &mut UnionFind,
) -> RootDatabase {
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for k in 0..items.len() {
        groups.entry(uf.find(k)).or_default().push(k);
    }
    let mut clusters: Vec<RootCluster> = groups
        .into_values()
        .map(|members| {
            let mut interval = items[members[0]].interval.clone();
            for &m in &members[1..] {
                interval = interval.hull(&items[m].interval);
            }
            let mut vanishing: Vec<Vanishing> = members
                .iter()
                .map(|&m| Vanishing {
                    index: items[m].index,
                    multiplicity: items[m].multiplicity,
                    branch: items[m].branch,
                })
                .collect();
            vanishing.sort_by(|x, y| x.index.cmp(&y.index).then(x.branch.cmp(&y.branch)));
            RootCluster {
                multiplicity: vanishing.iter().map(|v| v.multiplicity).sum(),
                interval,
                vanishing,
            }
        })
        .collect();
    clusters.sort_by(|x, y| x.interval.lo().cmp(y.interval.lo()));
    let mut slices = Vec::new();
    for i in 1..=(a - 1) / 2 {
        for j in 1..b {
            let clusters = clusters
                .iter()
                .enumerate()
                .filter(|(_, cl)| {
                    cl.vanishing
                        .iter()
                        .any(|v| v.index.i == i && v.index.j == j)
                })
                .map(|(k, _)| k)
                .collect();
            slices.push(Slice { i, j, clusters });
        }
    }
    RootDatabase {
        a,
        b,
        c,
        mode,
        clusters,
        slices,
    }
}

fn isolate_certified(a: u64, b: u64, c: u64, idx: &[FactorIndex]) -> Result<RootDatabase> {
    let bits = certified_bits(a, b, c);
    let mut items = all_items(idx, bits)?;
    items.sort_by_key(|x| x.interval.mid());
    let merge_below = Dyadic::pow2(-(8 * (a * b * c) as i64) - 1);
    let mut uf = UnionFind::new(items.len());
    for k in 1..items.len() {
        let d = &items[k].interval.mid() - &items[k - 1].interval.mid();
        if d < merge_below {
            uf.union(k - 1, k);
        }
    }
    Ok(build_database(
        a,
        b,
        c,
        RootMode::Certified,
        &items,
        &mut uf,
    ))
}

#[derive(PartialEq)]
enum Verdict {
    Equal,
    Unresolved,
}

struct ShareCache(HashMap<(FactorIndex, FactorIndex), ShareRoot>);

impl ShareCache {
    fn get(&mut self, x: &FactorIndex, y: &FactorIndex) -> Result<ShareRoot> {
        let key = if x < y { (*x, *y) } else { (*y, *x) };
        if let Some(s) = self.0.get(&key) {
            return Ok(*s);
        }
        let s = factors_share_root(&key.0, &key.1)?;
        self.0.insert(key, s);
        Ok(s)
    }
}

// Two overlapping enclosures from different factors: are they the same root?
fn same_root(
    items: &[Item],
    x: usize,
    y: usize,
    cap: u64,
    merge_below: &Dyadic,
    cache: &mut ShareCache,
) -> Result<Verdict> {
    let (p, q) = (&items[x], &items[y]);
    if p.index == q.index {
        return Ok(Verdict::Unresolved);
    }
    if p.interval.is_point() && q.interval.is_point() {
        return Ok(if p.interval == q.interval {
            Verdict::Equal
        } else {
            Verdict::Unresolved
        });
    }
    if p.bits >= cap && q.bits >= cap {
        let d = (&p.interval.mid() - &q.interval.mid()).abs();
        return Ok(if &d < merge_below {
            Verdict::Equal
        } else {
            Verdict::Unresolved
        });
    }
    match cache.get(&p.index, &q.index)? {
        ShareRoot::No => Ok(Verdict::Unresolved),
        ShareRoot::YesEqualFactors => Ok(if p.branch == q.branch {
            Verdict::Equal
        } else {
            Verdict::Unresolved
        }),
        _ => {
            // exactly one common root: it is the pair that overlaps, once only one does
            let theirs: Vec<&Item> = items.iter().filter(|it| it.index == q.index).collect();
            let overlapping: usize = items
                .iter()
                .filter(|it| it.index == p.index)
                .map(|r| {
                    theirs
                        .iter()
                        .filter(|s| r.interval.overlaps(&s.interval))
                        .count()
                })
                .sum();
            Ok(if overlapping == 1 {
                Verdict::Equal
            } else {
                Verdict::Unresolved
            })
        }
    }
}

fn isolate_adaptive(
    a: u64,
    b: u64,
    c: u64,
    idx: &[FactorIndex],
    start_bits: u64,
) -> Result<RootDatabase> {
    let cap = certified_bits(a, b, c);
    let merge_below = Dyadic::pow2(-(8 * (a * b * c) as i64) - 1);
    let mut items = all_items(idx, start_bits.min(cap))?;
    let mut cache = ShareCache(HashMap::new());
    loop {
        sort_items(&mut items);
        let mut uf = UnionFind::new(items.len());
        let mut refine: Vec<FactorIndex> = Vec::new();
        // sweep: each item against later items whose interval starts before it ends
        for x in 0..items.len() {
            for y in x + 1..items.len() {
                if items[y].interval.lo() > items[x].interval.hi() {
                    break;
                }
                if same_root(&items, x, y, cap, &merge_below, &mut cache)? == Verdict::Equal {
                    uf.union(x, y);
                } else {
                    refine.push(items[x].index);
                    refine.push(items[y].index);
                }
            }
        }
        if refine.is_empty() {
            return Ok(build_database(a, b, c, RootMode::Adaptive, &items, &mut uf));
        }
        refine.sort();
        refine.dedup();
        let bits_of: HashMap<FactorIndex, u64> =
            items.iter().map(|it| (it.index, it.bits)).collect();
        let fresh: Vec<Vec<Item>> = refine
            .par_iter()
            .map(|f| items_of(f, (bits_of[f] * 2).min(cap)))
            .collect::<Result<_>>()?;
        items.retain(|it| refine.binary_search(&it.index).is_err());
        items.extend(fresh.into_iter().flatten());
    }
}

/// All real roots of `R_{a,b,c}`, grouped into clusters of equal roots.
pub fn isolate_roots(a: u64, b: u64, c: u64, mode: RootMode) -> Result<RootDatabase> {
    isolate_roots_from(a, b, c, mode, 64)
}

/// As [`isolate_roots`], with the starting precision of adaptive mode.
pub fn isolate_roots_from(
    a: u64,
    b: u64,
    c: u64,
    mode: RootMode,
    start_bits: u64,
) -> Result<RootDatabase> {
    check_abc(a, b, c)?;
    let idx = FactorIndex::all(a, b, c)?;
    match mode {
        RootMode::Certified => isolate_certified(a, b, c, &idx),
        RootMode::Adaptive => isolate_adaptive(a, b, c, &idx, start_bits.max(8)),
    }
}

fn cmp_rational_dyadic(x: &BigRational, d: &Dyadic) -> std::cmp::Ordering {
    x.cmp(&d.to_rational())
}

/// Where `u/v` falls among the roots, with an exact on-root decision.
pub fn locate_phi(db: &RootDatabase, u: &BigInt, v: &BigInt) -> Result<PhiLocation> {
    if !v.is_positive() {
        return Err(Error::BadArgs("denominator must be positive".into()));
    }
    let g = u.gcd(v);
    let (u, v) = (u / &g, v / &g);
    let phi = BigRational::new(u.clone(), v.clone());
    use std::cmp::Ordering::*;
    // first cluster whose upper end is not below phi
    let k = db
        .clusters
        .partition_point(|cl| cmp_rational_dyadic(&phi, cl.interval.hi()) == Greater);
    let Some(cl) = db.clusters.get(k) else {
        return Ok(PhiLocation {
            on_root: false,
            interval_index: k,
        });
    };
    if cmp_rational_dyadic(&phi, cl.interval.lo()) == Less {
        return Ok(PhiLocation {
            on_root: false,
            interval_index: k,
        });
    }
    let w = &cl.vanishing[0];
    let s = factor_sign_at_rational(&w.index, &u, &v);
    if s == 0 {
        return Ok(PhiLocation {
            on_root: true,
            interval_index: k,
        });
    }
    // sign(phi - root) from sign(P(phi)) and the branch of the root
    let above = match w.branch {
        RootBranch::Linear | RootBranch::Plus => s > 0,
        RootBranch::Minus => s < 0,
        RootBranch::Double => {
            return Err(Error::InternalInconsistency(
                "nonzero value inside a double-root cluster".into(),
            ))
        }
    };
    Ok(PhiLocation {
        on_root: false,
        interval_index: if above { k + 1 } else { k },
    })
}

/// Lower bound on the smallest gap between consecutive clusters.
pub fn separation_audit(db: &RootDatabase) -> Result<Dyadic> {
    if db.clusters.len() < 2 {
        return Err(Error::EmptyAudit);
    }
    Ok(db
        .clusters
        .windows(2)
        .map(|w| w[1].interval.lo() - w[0].interval.hi())
        .min()
        .unwrap())
}
