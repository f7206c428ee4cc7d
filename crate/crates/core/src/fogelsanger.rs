//! Fogelsanger decompositions of circuits at an edge, plain and ℤ₂-symmetric,
//! with checkers for their structural properties.
//!
//! The contraction is never materialised as a bare multiset: each facet of the
//! antistar is kept as an element whose row is the boundary of its image, so
//! a partition of the contracted cycle is directly a partition of preimages.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::cycles::{self, is_circuit, is_trivial_circuit, RidgeIndex};
use crate::error::{Error, Result};
use crate::gf2::{self, BitRow};
use crate::graph::Graph;
use crate::simplicial::{contract_facet, Face, MultiComplex, VertexId};
use crate::symmetric::{
    classify, is_trivial_z2, is_z2_irreducible, validate, Classification, Involution, SymmetricComplex,
};

/// Subset-quantified properties enumerate all index subsets; refuse more parts.
pub const MAX_PARTS_EXHAUSTIVE: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FogDecomposition {
    pub base: MultiComplex,
    /// `(u, v)`: `v` is contracted onto `u` (and `v*` onto `u*` when symmetric).
    pub edge: (VertexId, VertexId),
    pub symmetric: bool,
    /// The augmented parts.
    pub parts: Vec<MultiComplex>,
    /// Preimages of the contracted parts.
    pub pulled_back: Vec<MultiComplex>,
    pub contracted_parts: Vec<MultiComplex>,
    /// Added faces containing `{u, v}`; their images are added too when symmetric.
    pub dagger_parts: Vec<MultiComplex>,
}

impl FogDecomposition {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

fn edge_face(u: VertexId, v: VertexId) -> Face {
    Face::new([u, v]).expect("distinct endpoints")
}

/// `{K ⊇ {u,v} : K - u, K - v ∈ ∂S}`, found from faces of `∂S` through `u`.
fn dagger(boundary: &MultiComplex, u: VertexId, v: VertexId) -> MultiComplex {
    let mut out = MultiComplex::empty(boundary.dim() + 1);
    for f in boundary.support() {
        if f.contains(u) && !f.contains(v) {
            let k = f.with(v);
            if boundary.multiplicity(&k.without(u)) > 0 {
                out.insert_unchecked(k, 1);
            }
        }
    }
    out
}

fn check_edge(s: &MultiComplex, u: VertexId, v: VertexId) -> Result<()> {
    if u == v || !s.edges().contains(&(u.min(v), u.max(v))) {
        return Err(Error::Precondition(format!("{u}{v} is not an edge")));
    }
    Ok(())
}

/// Elements with their rows, partitioned greedily into minimal dependent sets.
fn partition(rows: &[BitRow], seed: u64) -> Result<Vec<Vec<usize>>> {
    let order = cycles::element_order(rows.len(), seed);
    let (parts, rest) = gf2::greedy_circuits(rows, &order);
    if !rest.is_empty() {
        return Err(Error::Invariant("contracted complex is not a cycle".into()));
    }
    Ok(parts)
}

pub fn fog_decompose(s: &MultiComplex, u: VertexId, v: VertexId, seed: u64) -> Result<FogDecomposition> {
    if !is_circuit(s) {
        return Err(Error::Precondition("complex is not a circuit".into()));
    }
    if is_trivial_circuit(s) {
        return Err(Error::Precondition("circuit is trivial".into()));
    }
    check_edge(s, u, v)?;
    let k = s.dim();
    let preimages = s.antistar(&edge_face(u, v)).occurrences();
    let images: Vec<Face> = preimages.iter().map(|f| contract_facet(f, u, v).expect("antistar")).collect();
    let mut index = RidgeIndex::new();
    let rows: Vec<BitRow> = images.iter().map(|f| index.row(f)).collect();

    let mut out = FogDecomposition {
        base: s.clone(),
        edge: (u, v),
        symmetric: false,
        parts: Vec::new(),
        pulled_back: Vec::new(),
        contracted_parts: Vec::new(),
        dagger_parts: Vec::new(),
    };
    for part in partition(&rows, seed)? {
        let pre = MultiComplex::from_facets(k, part.iter().map(|&e| preimages[e].clone()))?;
        let img = MultiComplex::from_facets(k, part.iter().map(|&e| images[e].clone()))?;
        let dag = dagger(&pre.boundary(), u, v);
        out.parts.push(pre.union(&dag)?);
        out.pulled_back.push(pre);
        out.contracted_parts.push(img);
        out.dagger_parts.push(dag);
    }
    Ok(out)
}

fn double_contract_facet(f: &Face, x: VertexId, y: VertexId, xs: VertexId, ys: VertexId) -> Option<Face> {
    contract_facet(&contract_facet(f, x, y)?, xs, ys)
}

pub fn z2_fog_decompose(s: &SymmetricComplex, x: VertexId, y: VertexId, seed: u64) -> Result<FogDecomposition> {
    if !is_z2_irreducible(s) {
        return Err(Error::Precondition("complex is not ℤ₂-irreducible".into()));
    }
    let c = s.complex();
    check_edge(c, x, y)?;
    let sigma = s.involution();
    let (xs, ys) = (sigma.partner(x).unwrap(), sigma.partner(y).unwrap());
    if c.graph().has_edge(x, ys) {
        return Err(Error::DecompositionUndefined(format!("{x}{ys} is an edge (the pair of {y})")));
    }
    let k = s.dim();
    let ast = c.antistar(&edge_face(x, y)).antistar(&edge_face(xs, ys));
    let mut orbits: Vec<(Face, Face)> = Vec::new();
    for (f, m) in ast.counts() {
        let image = sigma.apply_face(f).expect("validated");
        if *f < image {
            orbits.extend(std::iter::repeat_n((f.clone(), image), m));
        }
    }
    let gamma = |f: &Face| double_contract_facet(f, x, y, xs, ys).expect("double antistar");
    let mut index = RidgeIndex::new();
    let rows: Vec<BitRow> = orbits
        .iter()
        .map(|(a, b)| {
            let mut r = index.row(&gamma(a));
            index.add_boundary(&mut r, &gamma(b));
            r
        })
        .collect();

    let mut out = FogDecomposition {
        base: c.clone(),
        edge: (x, y),
        symmetric: true,
        parts: Vec::new(),
        pulled_back: Vec::new(),
        contracted_parts: Vec::new(),
        dagger_parts: Vec::new(),
    };
    for part in partition(&rows, seed)? {
        let members = || part.iter().flat_map(|&e| [orbits[e].0.clone(), orbits[e].1.clone()]);
        let pre = MultiComplex::from_facets(k, members())?;
        let img = MultiComplex::from_facets(k, members().map(|f| gamma(&f)))?;
        let dag = dagger(&pre.boundary(), x, y);
        let dag_star = sigma.apply_complex(&dag).expect("validated");
        out.parts.push(pre.union(&dag)?.union(&dag_star)?);
        out.pulled_back.push(pre);
        out.contracted_parts.push(img);
        out.dagger_parts.push(dag);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyCheck {
    pub property: String,
    pub status: Status,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub checks: Vec<PropertyCheck>,
}

impl PropertyReport {
    fn record(&mut self, property: &str, failure: Option<String>) {
        self.checks.push(PropertyCheck {
            property: property.into(),
            status: if failure.is_some() { Status::Fail } else { Status::Pass },
            detail: failure,
        });
    }

    fn skip(&mut self, property: &str, why: String) {
        self.checks.push(PropertyCheck { property: property.into(), status: Status::NotApplicable, detail: Some(why) });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn status(&self, property: &str) -> Option<Status> {
        self.checks.iter().find(|c| c.property == property).map(|c| c.status)
    }

    pub fn failures(&self) -> Vec<&PropertyCheck> {
        self.checks.iter().filter(|c| c.status == Status::Fail).collect()
    }
}

/// Faces occurring an odd number of times over all parts.
fn parity_sum<'a, I: IntoIterator<Item = &'a MultiComplex>>(parts: I) -> BTreeSet<Face> {
    let mut count: BTreeMap<Face, usize> = BTreeMap::new();
    for p in parts {
        for (f, m) in p.counts() {
            *count.entry(f.clone()).or_insert(0) += m;
        }
    }
    count.into_iter().filter(|(_, m)| m % 2 == 1).map(|(f, _)| f).collect()
}

fn support_set(s: &MultiComplex) -> BTreeSet<Face> {
    s.support().cloned().collect()
}

/// First failing index, rendered for a report.
fn first_failure<T, F: Fn(&T) -> bool>(items: &[T], ok: F) -> Option<String> {
    items.iter().position(|it| !ok(it)).map(|i| format!("part {i}"))
}

/// Nonempty proper index subsets of `0..m` as bit masks.
fn proper_subsets(m: usize) -> impl Iterator<Item = u32> {
    1u32..(1u32 << m) - 1
}

fn subset_parity(parts: &[MultiComplex], mask: u32) -> BTreeSet<Face> {
    parity_sum(parts.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| p))
}

fn edges_union(parts: &[MultiComplex]) -> BTreeSet<(VertexId, VertexId)> {
    parts.iter().flat_map(|p| p.edges()).collect()
}

/// Each facet (with multiplicity) of `pool` lies in exactly one part.
fn unique_membership(pool: &MultiComplex, parts: &[MultiComplex]) -> Option<String> {
    pool.counts().find_map(|(f, m)| {
        let holders = parts.iter().filter(|p| p.multiplicity(f) > 0).count();
        let total: usize = parts.iter().map(|p| p.multiplicity(f)).sum();
        (holders != 1 || total != m).then(|| format!("facet {f} lies in {holders} parts"))
    })
}

pub fn verify_fog_properties(d: &FogDecomposition) -> PropertyReport {
    let mut r = PropertyReport::default();
    let s = &d.base;
    let (u, v) = d.edge;
    let g = s.graph();
    let base_facets = support_set(s);

    r.record("a", first_failure(&d.parts, |p| p.contract(u, v).map(|c| is_circuit(&c)).unwrap_or(false)));

    let uv = edge_face(u, v);
    let clique_ok = |p: &MultiComplex| {
        p.support().filter(|f| !base_facets.contains(*f)).all(|f| uv.is_subset_of(f) && g.is_clique(f))
    };
    r.record("b", first_failure(&d.parts, |p| is_circuit(p) && !is_trivial_circuit(p) && clique_ok(p)));

    r.record("c", unique_membership(&s.antistar(&uv), &d.parts));

    let sum = parity_sum(&d.parts);
    r.record("d", (sum != base_facets || !s.is_simple()).then(|| "parity sum differs from the complex".into()));

    let e_ok = d.parts.iter().all(|p| p.edges().contains(&(u.min(v), u.max(v)))) && edges_union(&d.parts) == s.edges();
    r.record("e", (!e_ok).then(|| "edge sets do not cover the graph or miss uv".into()));

    let m = d.parts.len();
    if m > MAX_PARTS_EXHAUSTIVE {
        r.record("f", Some(format!("{m} parts exceed the cap {MAX_PARTS_EXHAUSTIVE}")));
    } else {
        let k = s.dim();
        let failure = proper_subsets(m).find(|&mask| {
            let sym = subset_parity(&d.parts, mask);
            !(0..m).filter(|j| mask >> j & 1 == 0).any(|j| {
                sym.iter().any(|kf| {
                    kf.len() == k + 1 && !base_facets.contains(kf) && g.is_clique(kf) && d.parts[j].multiplicity(kf) > 0
                })
            })
        });
        r.record("f", failure.map(|mask| format!("index subset mask {mask:b}")));
    }
    r
}

fn restrict(sub: &MultiComplex, sigma: &Involution) -> Result<SymmetricComplex> {
    validate(sub, &sigma.induced(&sub.vertices()))
}

pub fn verify_z2_fog_properties(d: &FogDecomposition, sigma: &Involution) -> PropertyReport {
    let mut r = PropertyReport::default();
    let s = &d.base;
    let (x, y) = d.edge;
    let (Some(xs), Some(ys)) = (sigma.partner(x), sigma.partner(y)) else {
        r.record("a", Some("edge endpoints are not paired".into()));
        return r;
    };
    let g = s.graph();
    let base_facets = support_set(s);
    let norm = |a: VertexId, b: VertexId| (a.min(b), a.max(b));

    r.record(
        "a",
        first_failure(&d.parts, |p| {
            let e = p.edges();
            e.contains(&norm(x, y)) && e.contains(&norm(xs, ys))
        }),
    );

    let vertex_union: BTreeSet<VertexId> = d.parts.iter().flat_map(|p| p.vertices()).collect();
    let b_ok = edges_union(&d.parts) == s.edges() && vertex_union == s.vertices();
    r.record("b", (!b_ok).then(|| "parts do not cover the graph".into()));

    r.record(
        "c",
        first_failure(&d.parts, |p| {
            p.contract(x, y)
                .and_then(|c| c.contract(xs, ys))
                .and_then(|c| restrict(&c, sigma))
                .map(|c| is_z2_irreducible(&c))
                .unwrap_or(false)
        }),
    );

    let (xy, xys) = (edge_face(x, y), edge_face(xs, ys));
    r.record(
        "d",
        first_failure(&d.parts, |p| {
            let irreducible = restrict(p, sigma).map(|c| is_z2_irreducible(&c) && !is_trivial_z2(&c)).unwrap_or(false);
            irreducible
                && p.support()
                    .filter(|f| !base_facets.contains(*f))
                    .all(|f| (xy.is_subset_of(f) || xys.is_subset_of(f)) && g.is_clique(f))
        }),
    );

    r.record("e", unique_membership(&s.antistar(&xy).antistar(&xys), &d.parts));

    let sum = parity_sum(&d.parts);
    r.record("f", (sum != base_facets || !s.is_simple()).then(|| "parity sum differs from the complex".into()));

    let m = d.parts.len();
    if m > MAX_PARTS_EXHAUSTIVE {
        r.record("g", Some(format!("{m} parts exceed the cap {MAX_PARTS_EXHAUSTIVE}")));
    } else {
        let meets = |mask: u32, j: usize| {
            let sym = subset_parity(&d.parts, mask);
            sym.iter().any(|f| d.parts[j].multiplicity(f) > 0)
        };
        let failure = proper_subsets(m).find(|&mask| !(0..m).filter(|j| mask >> j & 1 == 0).any(|j| meets(mask, j)));
        match failure {
            Some(mask) => r.record("g", Some(format!("index subset mask {mask:b}"))),
            None => {
                // the subset statement makes a greedy ordering always succeed
                let mut order = vec![0usize];
                let mut mask = 1u32;
                while order.len() < m {
                    let j = (0..m).find(|&j| mask >> j & 1 == 0 && meets(mask, j)).expect("subset property holds");
                    order.push(j);
                    mask |= 1 << j;
                }
                r.checks.push(PropertyCheck {
                    property: "g".into(),
                    status: Status::Pass,
                    detail: Some(format!("greedy order {order:?}")),
                });
            }
        }
    }
    r
}

/// For each contracted part of the form `T' ⊔ T'*` with small overlap `h'`,
/// the part itself must be `T ⊔ T*` with overlap at most `h' + 2`.
pub fn overlap_growth_check(d: &FogDecomposition, sigma: &Involution) -> PropertyReport {
    let mut r = PropertyReport::default();
    let k = d.base.dim();
    for (i, (part, contracted)) in d.parts.iter().zip(&d.contracted_parts).enumerate() {
        let name = format!("overlap[{i}]");
        let before = restrict(contracted, sigma).and_then(|c| classify(&c));
        let h_before = match &before {
            Ok(c @ (Classification::TrivialIrreducible { .. } | Classification::SplitPair { .. })) => {
                c.overlap().unwrap()
            }
            Ok(c) => {
                r.skip(&name, format!("contracted part is {:?}", c.kind()));
                continue;
            }
            Err(e) => {
                r.record(&name, Some(format!("contracted part: {e}")));
                continue;
            }
        };
        if h_before + 2 > 2 * k {
            r.skip(&name, format!("contracted overlap {h_before} exceeds 2k-2"));
            continue;
        }
        let after = restrict(part, sigma).and_then(|c| classify(&c));
        let failure = match after {
            Ok(Classification::SplitPair { overlap, .. }) if overlap <= h_before + 2 => None,
            Ok(c) => {
                Some(format!("part is {:?} with overlap {:?}, contracted overlap {h_before}", c.kind(), c.overlap()))
            }
            Err(e) => Some(e.to_string()),
        };
        r.record(&name, failure);
    }
    r
}

/// Edges `xy` at which a symmetric decomposition is defined.
pub fn valid_symmetric_edges(s: &SymmetricComplex) -> Vec<(VertexId, VertexId)> {
    let g: Graph = s.graph();
    let sigma = s.involution();
    let mut out = Vec::new();
    for &(a, b) in g.edges() {
        for (x, y) in [(a, b), (b, a)] {
            let ys = sigma.partner(y).unwrap();
            if !g.has_edge(x, ys) {
                out.push((x, y));
            }
        }
    }
    out
}
