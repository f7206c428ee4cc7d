//! Named instances: crosspolytopes, trivial pairs, symmetrically stacked
//! spheres, the hexahedron pair, split pairs with prescribed overlap and the
//! half-turn octahedron framework.
//!
//! Crosspolytope labels: `x_i = i` and `x_i* = i + k + 1` for `i = 1..=k+1`.

use std::collections::BTreeSet;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rigidity::{sample_gamma_generic, GammaFramework, PointGroup};
use crate::simplicial::{Face, MultiComplex, VertexId};
use crate::symmetric::{classify, validate, Classification, Involution, SymmetricComplex};

/// Boundary of the simplex on the given vertices, a `(len-2)`-complex.
pub fn simplex_boundary(vertices: &[u32]) -> MultiComplex {
    assert!(vertices.len() >= 2, "simplex boundary needs two vertices");
    let full = Face::of(vertices);
    MultiComplex::from_facets(vertices.len() - 2, full.subsets(vertices.len() - 1)).expect("simplex facets")
}

pub fn crosspolytope_involution(k: usize) -> Involution {
    let n = (k + 1) as u32;
    Involution::of(&(1..=n).map(|i| (i, i + n)).collect::<Vec<_>>())
}

/// Boundary of the (k+1)-dimensional crosspolytope with the antipodal pairing.
pub fn gen_crosspolytope(k: usize) -> Result<SymmetricComplex> {
    if k < 1 {
        return Err(Error::Range("crosspolytope needs k ≥ 1".into()));
    }
    let n = (k + 1) as u32;
    let mut facets = Vec::with_capacity(1 << (k + 1));
    for mask in 0u32..(1 << (k + 1)) {
        let vs: Vec<u32> = (1..=n).map(|i| if mask >> (i - 1) & 1 == 1 { i + n } else { i }).collect();
        facets.push(Face::of(&vs));
    }
    validate(&MultiComplex::from_facets(k, facets)?, &crosspolytope_involution(k))
}

/// `{F, F, F*, F*}` with `F = {1..k+1}`.
pub fn gen_trivial_pair(k: usize) -> Result<SymmetricComplex> {
    if k < 1 {
        return Err(Error::Range("trivial pair needs k ≥ 1".into()));
    }
    let n = (k + 1) as u32;
    let f = Face::of(&(1..=n).collect::<Vec<_>>());
    let g = Face::of(&(n + 1..=2 * n).collect::<Vec<_>>());
    validate(&MultiComplex::from_counts(k, [(f, 2), (g, 2)])?, &crosspolytope_involution(k))
}

/// Replaces `F` by the cone over `∂F` with apex `w`.
fn stack(s: &mut MultiComplex, f: &Face, w: VertexId) {
    let mut facets: Vec<(Face, usize)> = s.counts().map(|(g, m)| (g.clone(), m)).collect();
    let pos = facets.iter().position(|(g, _)| g == f).expect("stacked facet present");
    facets[pos].1 -= 1;
    for ridge in f.facets_of_boundary() {
        facets.push((ridge.with(w), 1));
    }
    *s = MultiComplex::from_counts(s.dim(), facets.into_iter().filter(|&(_, m)| m > 0)).expect("stacking keeps arity");
}

/// Symmetric double stacking on the crosspolytope: each step stacks a seeded
/// facet `F` with a new vertex `w` and `F*` with its partner `w*`.
pub fn gen_symmetric_stacked(k: usize, stacks: usize, seed: u64) -> Result<SymmetricComplex> {
    let base = gen_crosspolytope(k)?;
    let (mut s, sigma) = base.into_parts();
    let mut pairs = sigma.pairs();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut next = 2 * (k as u32 + 1) + 1;
    for _ in 0..stacks {
        let current = Involution::new(pairs.clone())?;
        let facets: Vec<Face> = s.support().cloned().collect();
        let f = facets.choose(&mut rng).expect("non-empty complex").clone();
        let f_star = current.apply_face(&f).expect("total involution");
        let (w, w_star) = (VertexId(next), VertexId(next + 1));
        next += 2;
        stack(&mut s, &f, w);
        stack(&mut s, &f_star, w_star);
        pairs.push((w, w_star));
    }
    validate(&s, &Involution::new(pairs)?)
}

/// The hexahedron pair: `T` is the bipyramid over `v2 v3 v4` with apexes `v1`
/// and `v1*`, and `S = T ⊔ T*`. Labels `v_i = i`, `v_i* = i + 4`.
pub fn gen_hexahedron_pair() -> SymmetricComplex {
    let t = hexahedron();
    let sigma = Involution::of(&[(1, 5), (2, 6), (3, 7), (4, 8)]);
    let t_star = sigma.apply_complex(&t).expect("total");
    validate(&t.union(&t_star).expect("same dimension"), &sigma).expect("hexahedron pair is symmetric")
}

/// The circuit `T` of the hexahedron pair.
pub fn hexahedron() -> MultiComplex {
    MultiComplex::of(2, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[5, 2, 3], &[5, 2, 4], &[5, 3, 4]])
}

/// Stacked k-sphere on local labels `0..`, grown by `stacks` seeded stackings.
fn stacked_sphere(k: usize, stacks: usize, rng: &mut ChaCha8Rng) -> MultiComplex {
    let mut s = simplex_boundary(&(0..k as u32 + 2).collect::<Vec<_>>());
    for next in (k as u32 + 2..).take(stacks) {
        let facets: Vec<Face> = s.support().cloned().collect();
        let f = facets.choose(rng).expect("non-empty").clone();
        stack(&mut s, &f, VertexId(next));
    }
    s
}

/// A maximal set of disjoint non-adjacent pairs, in seeded order.
fn non_edge_matching(g: &Graph, rng: &mut ChaCha8Rng) -> Vec<(VertexId, VertexId)> {
    let vs: Vec<VertexId> = g.vertices().iter().copied().collect();
    let mut candidates = Vec::new();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            if !g.has_edge(a, b) {
                candidates.push((a, b));
            }
        }
    }
    candidates.shuffle(rng);
    let mut used = BTreeSet::new();
    let mut out = Vec::new();
    for (a, b) in candidates {
        if !used.contains(&a) && !used.contains(&b) {
            used.insert(a);
            used.insert(b);
            out.push((a, b));
        }
    }
    out
}

const SPLIT_PAIR_ATTEMPTS: u64 = 64;

/// A ℤ₂-irreducible `S = T ⊔ T*` with `|V(T) ∩ V(T*)| = h`.
///
/// `T` is a seeded stacked k-sphere. The involution swaps `h/2` non-adjacent
/// vertex pairs of `T` and sends every other vertex of `T` to a fresh vertex.
pub fn gen_split_pair(k: usize, h: usize, seed: u64) -> Result<SymmetricComplex> {
    if k < 2 {
        return Err(Error::Infeasible(format!("split pairs need k ≥ 2, got {k}")));
    }
    if h % 2 == 1 {
        return Err(Error::Infeasible(format!("overlap {h} is odd; the shared set is a union of pairs")));
    }
    if h > 2 * k {
        return Err(Error::Infeasible(format!("overlap {h} exceeds 2k = {}", 2 * k)));
    }
    for attempt in 0..SPLIT_PAIR_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(SPLIT_PAIR_ATTEMPTS).wrapping_add(attempt));
        let mut stacks = 0;
        let (t, matching) = loop {
            let t = stacked_sphere(k, stacks, &mut rng);
            let m = non_edge_matching(&t.graph(), &mut rng);
            if m.len() >= h / 2 {
                break (t, m);
            }
            stacks += 1;
        };
        let shared = &matching[..h / 2];
        let in_shared: BTreeSet<VertexId> = shared.iter().flat_map(|&(a, b)| [a, b]).collect();
        let mut fresh = t.vertices().last().map_or(0, |v| v.0 + 1);
        let mut pairs: Vec<(VertexId, VertexId)> = shared.to_vec();
        for v in t.vertices() {
            if !in_shared.contains(&v) {
                pairs.push((v, VertexId(fresh)));
                fresh += 1;
            }
        }
        let sigma = Involution::new(pairs)?;
        let t_star = sigma.apply_complex(&t).expect("total on V(T)");
        if !t.intersection(&t_star).is_empty() {
            continue;
        }
        let Ok(s) = validate(&t.union(&t_star)?, &sigma) else { continue };
        if let Ok(Classification::SplitPair { overlap, .. }) = classify(&s) {
            if overlap == h {
                return Ok(s);
            }
        }
    }
    Err(Error::Infeasible(format!("no split pair with k = {k}, h = {h} after {SPLIT_PAIR_ATTEMPTS} attempts")))
}

/// Octahedron graph with the antipodal pairing and random half-turn symmetric
/// coordinates in 3-space.
pub fn gen_bricard(seed: u64) -> Result<GammaFramework> {
    let b2 = gen_crosspolytope(2)?;
    sample_gamma_generic(&b2.graph(), b2.involution(), PointGroup::new(1, 3)?, seed)
}
