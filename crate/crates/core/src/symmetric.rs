//! Free involutions, ℤ₂-symmetric complexes and their irreducible cycles.
//!
//! Invariant sub-multisets of a symmetric complex are unions of facet orbits
//! `{U, U*}`. Giving each orbit the vector `∂U + ∂U*` turns "invariant
//! subcycle" into "dependent set" of a binary matroid, so irreducibility is a
//! rank computation just like circuit detection.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::combinatorics::combinations;
use crate::cycles::{self, is_circuit, is_cycle, is_trivial_circuit, RidgeIndex};
use crate::error::{Error, Result};
use crate::gf2::{self, BitRow, Eliminator};
use crate::graph::Graph;
use crate::simplicial::{Face, MultiComplex, VertexId};

/// Exhaustive invariant-subset searches refuse graphs with more vertices.
pub const SEARCH_VERTEX_CAP: usize = 30;

/// A fixed-point-free pairing on a vertex subset.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Involution {
    partner: BTreeMap<VertexId, VertexId>,
}

impl Involution {
    pub fn new<I: IntoIterator<Item = (VertexId, VertexId)>>(pairs: I) -> Result<Self> {
        let mut partner = BTreeMap::new();
        for (a, b) in pairs {
            if a == b {
                return Err(Error::FixedVertex(a));
            }
            for v in [a, b] {
                if partner.contains_key(&v) {
                    return Err(Error::OverlappingPairs(v));
                }
            }
            partner.insert(a, b);
            partner.insert(b, a);
        }
        Ok(Involution { partner })
    }

    /// Literal constructor.
    ///
    /// # Panics
    /// Panics on fixed or overlapping pairs.
    pub fn of(pairs: &[(u32, u32)]) -> Self {
        Involution::new(pairs.iter().map(|&(a, b)| (VertexId(a), VertexId(b)))).expect("bad pairing")
    }

    pub fn empty() -> Self {
        Involution::default()
    }

    pub fn is_empty(&self) -> bool {
        self.partner.is_empty()
    }

    /// Number of pairs.
    pub fn len(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self, v: VertexId) -> Option<VertexId> {
        self.partner.get(&v).copied()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.partner.contains_key(&v)
    }

    pub fn domain(&self) -> BTreeSet<VertexId> {
        self.partner.keys().copied().collect()
    }

    /// Pairs `(a, b)` with `a < b`, sorted.
    pub fn pairs(&self) -> Vec<(VertexId, VertexId)> {
        self.partner.iter().filter(|(a, b)| a < b).map(|(&a, &b)| (a, b)).collect()
    }

    /// Image of a face; `None` if some vertex is outside the domain.
    pub fn apply_face(&self, f: &Face) -> Option<Face> {
        let mut vs = Vec::with_capacity(f.len());
        for v in f.iter() {
            vs.push(self.partner(v)?);
        }
        Face::new(vs).ok()
    }

    pub fn apply_complex(&self, s: &MultiComplex) -> Option<MultiComplex> {
        let mut out = MultiComplex::empty(s.dim());
        for (f, m) in s.counts() {
            out.insert_unchecked(self.apply_face(f)?, m);
        }
        Some(out)
    }

    pub fn apply_set(&self, set: &BTreeSet<VertexId>) -> Option<BTreeSet<VertexId>> {
        set.iter().map(|&v| self.partner(v)).collect()
    }

    /// `X* = X`.
    pub fn is_invariant(&self, set: &BTreeSet<VertexId>) -> bool {
        set.iter().all(|&v| self.partner(v).is_some_and(|w| set.contains(&w)))
    }

    /// The pairing restricted to pairs with both ends in `keep`.
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> Involution {
        Involution {
            partner: self
                .partner
                .iter()
                .filter(|(a, b)| keep.contains(a) && keep.contains(b))
                .map(|(&a, &b)| (a, b))
                .collect(),
        }
    }

    /// Smallest vertex of each pair, in order.
    pub fn representatives(&self) -> Vec<VertexId> {
        self.pairs().into_iter().map(|(a, _)| a).collect()
    }
}

/// `σ` restricted to `X_W = (X ∩ W) ∩ (X ∩ W)*`.
pub fn induced_pairing(sigma: &Involution, w: &BTreeSet<VertexId>) -> Involution {
    sigma.induced(w)
}

/// A graph with a non-adjacent vertex pairing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairedGraph {
    graph: Graph,
    pairing: Involution,
}

impl PairedGraph {
    pub fn new(graph: Graph, pairing: Involution) -> Result<Self> {
        for (a, b) in pairing.pairs() {
            for v in [a, b] {
                if !graph.has_vertex(v) {
                    return Err(Error::InvolutionDomain(v));
                }
            }
            if graph.has_edge(a, b) {
                return Err(Error::AdjacentPair(a, b));
            }
        }
        Ok(PairedGraph { graph, pairing })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn pairing(&self) -> &Involution {
        &self.pairing
    }

    /// Whether the pairing maps edges to edges (only meaningful when it is total).
    pub fn is_automorphism(&self) -> bool {
        self.pairing.domain() == *self.graph.vertices()
            && self.graph.edges().iter().all(|&(a, b)| {
                let (pa, pb) = (self.pairing.partner(a).unwrap(), self.pairing.partner(b).unwrap());
                self.graph.has_edge(pa, pb)
            })
    }
}

/// A multicomplex with a free simplicial involution on all of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricComplex {
    complex: MultiComplex,
    involution: Involution,
}

/// Checks that `sigma` is a free simplicial involution of `s`.
pub fn validate(s: &MultiComplex, sigma: &Involution) -> Result<SymmetricComplex> {
    let vertices = s.vertices();
    for &v in &vertices {
        if !sigma.contains(v) {
            return Err(Error::InvolutionDomain(v));
        }
    }
    if let Some(v) = sigma.domain().into_iter().find(|v| !vertices.contains(v)) {
        return Err(Error::InvolutionDomain(v));
    }
    for (f, m) in s.counts() {
        // a face F with F* = F is a union of pairs, so it contains a pair edge
        if let Some(u) = f.iter().find(|&u| f.contains(sigma.partner(u).unwrap())) {
            let w = sigma.partner(u).unwrap();
            return Err(Error::FixedFace(Face::new([u, w]).expect("distinct pair")));
        }
        let image = sigma.apply_face(f).expect("domain checked");
        match s.multiplicity(&image) {
            0 => return Err(Error::FacetImageMissing(f.clone())),
            n if n != m => return Err(Error::MultiplicityMismatch(f.clone())),
            _ => {}
        }
    }
    Ok(SymmetricComplex { complex: s.clone(), involution: sigma.clone() })
}

impl SymmetricComplex {
    pub fn new(s: MultiComplex, sigma: Involution) -> Result<Self> {
        validate(&s, &sigma)
    }

    pub fn complex(&self) -> &MultiComplex {
        &self.complex
    }

    pub fn involution(&self) -> &Involution {
        &self.involution
    }

    pub fn dim(&self) -> usize {
        self.complex.dim()
    }

    pub fn graph(&self) -> Graph {
        self.complex.graph()
    }

    pub fn paired_graph(&self) -> PairedGraph {
        PairedGraph::new(self.graph(), self.involution.clone()).expect("free involution is non-adjacent")
    }

    pub fn into_parts(self) -> (MultiComplex, Involution) {
        (self.complex, self.involution)
    }

    /// Restricts the involution to the vertices of an invariant sub-multiset.
    pub fn restrict(&self, sub: &MultiComplex) -> Result<SymmetricComplex> {
        validate(sub, &self.involution.induced(&sub.vertices()))
    }
}

/// Orbit elements `{U, U*}` with their boundary vectors.
struct OrbitMatrix {
    reps: Vec<(Face, Face)>,
    rows: Vec<BitRow>,
}

fn orbit_matrix(s: &SymmetricComplex) -> OrbitMatrix {
    let sigma = s.involution();
    let mut index = RidgeIndex::new();
    let mut reps = Vec::new();
    let mut rows = Vec::new();
    for (f, m) in s.complex().counts() {
        let image = sigma.apply_face(f).expect("validated");
        if *f > image {
            continue;
        }
        let mut row = index.row(f);
        index.add_boundary(&mut row, &image);
        for _ in 0..m {
            reps.push((f.clone(), image.clone()));
            rows.push(row.clone());
        }
    }
    OrbitMatrix { reps, rows }
}

impl OrbitMatrix {
    fn collect(&self, k: usize, elements: &[usize]) -> MultiComplex {
        let mut out = MultiComplex::empty(k);
        for &e in elements {
            out.insert_unchecked(self.reps[e].0.clone(), 1);
            out.insert_unchecked(self.reps[e].1.clone(), 1);
        }
        out
    }
}

/// A non-empty cycle with no proper non-empty invariant subcycle.
pub fn is_z2_irreducible(s: &SymmetricComplex) -> bool {
    if s.complex().is_empty() || !is_cycle(s.complex()) {
        return false;
    }
    let m = orbit_matrix(s);
    gf2::rank(&m.rows) + 1 == m.rows.len()
}

/// Partition of a symmetric cycle into ℤ₂-irreducible cycles.
pub fn decompose_into_irreducibles(s: &SymmetricComplex, seed: u64) -> Result<Vec<SymmetricComplex>> {
    if !is_cycle(s.complex()) {
        return Err(Error::NotACycle);
    }
    let m = orbit_matrix(s);
    let order = cycles::element_order(m.rows.len(), seed);
    let (parts, rest) = gf2::greedy_circuits(&m.rows, &order);
    if !rest.is_empty() {
        return Err(Error::Invariant("symmetric cycle left independent orbits".into()));
    }
    parts.iter().map(|p| s.restrict(&m.collect(s.dim(), p))).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClassKind {
    Reducible,
    TrivialIrreducible,
    Circuit,
    SplitPair,
}

/// Structure of a symmetric cycle: either it is reducible or one of the three
/// irreducible shapes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// Has a proper invariant subcycle (the witness).
    Reducible {
        witness: MultiComplex,
    },
    /// `{F, F, F*, F*}`.
    TrivialIrreducible {
        circuit: MultiComplex,
    },
    Circuit,
    /// `S = T ⊔ T*` for a nontrivial circuit `T`.
    SplitPair {
        circuit: MultiComplex,
        overlap: usize,
    },
}

impl Classification {
    pub fn kind(&self) -> ClassKind {
        match self {
            Classification::Reducible { .. } => ClassKind::Reducible,
            Classification::TrivialIrreducible { .. } => ClassKind::TrivialIrreducible,
            Classification::Circuit => ClassKind::Circuit,
            Classification::SplitPair { .. } => ClassKind::SplitPair,
        }
    }

    /// `|V(T) ∩ V(T*)|` for the split shapes.
    pub fn overlap(&self) -> Option<usize> {
        match self {
            Classification::TrivialIrreducible { .. } => Some(0),
            Classification::SplitPair { overlap, .. } => Some(*overlap),
            _ => None,
        }
    }

    pub fn split_circuit(&self) -> Option<&MultiComplex> {
        match self {
            Classification::TrivialIrreducible { circuit } | Classification::SplitPair { circuit, .. } => Some(circuit),
            _ => None,
        }
    }
}

/// Shared vertices of `T` and `T*`.
pub fn overlap_vertices(t: &MultiComplex, sigma: &Involution) -> BTreeSet<VertexId> {
    let vt = t.vertices();
    let vts = sigma.apply_set(&vt).expect("circuit inside symmetric complex");
    vt.intersection(&vts).copied().collect()
}

pub fn classify(s: &SymmetricComplex) -> Result<Classification> {
    if !is_cycle(s.complex()) {
        return Err(Error::NotACycle);
    }
    if s.complex().is_empty() {
        return Err(Error::Precondition("empty complex has no classification".into()));
    }
    let m = orbit_matrix(s);
    let mut e = Eliminator::new();
    for r in &m.rows {
        if let Some(combo) = e.insert(r) {
            let elements: Vec<usize> = combo.ones().collect();
            if elements.len() < m.rows.len() {
                return Ok(Classification::Reducible { witness: m.collect(s.dim(), &elements) });
            }
        }
    }
    if is_circuit(s.complex()) {
        return Ok(Classification::Circuit);
    }
    let t = cycles::decompose_into_circuits(s.complex(), 0)?.parts.swap_remove(0);
    let t_star = s.involution().apply_complex(&t).expect("validated");
    if t == t_star || t.union(&t_star)? != *s.complex() {
        return Err(Error::Invariant("irreducible cycle is not a circuit and its image".into()));
    }
    if is_trivial_circuit(&t) {
        return Ok(Classification::TrivialIrreducible { circuit: t });
    }
    let overlap = overlap_vertices(&t, s.involution()).len();
    Ok(Classification::SplitPair { circuit: t, overlap })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SmallShape {
    TrivialPair,
    Crosspolytope,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexCountReport {
    pub vertices: usize,
    pub lower_bound: usize,
    pub equality: bool,
    pub shape: Option<SmallShape>,
    /// `|V| ≥ 2k+2`, and equality exactly for the two small shapes.
    pub holds: bool,
}

/// Every facet of a free complex on `2k+2` vertices is a transversal of the
/// pairs, so the crosspolytope is recognised by counting.
pub fn is_crosspolytope(s: &SymmetricComplex) -> bool {
    let k = s.dim();
    s.complex().vertices().len() == 2 * k + 2 && s.complex().is_simple() && s.complex().len() == 1usize << (k + 1)
}

pub fn min_vertex_count_check(s: &SymmetricComplex) -> Result<VertexCountReport> {
    if !is_z2_irreducible(s) {
        return Err(Error::Precondition("complex is not ℤ₂-irreducible".into()));
    }
    let k = s.dim();
    let vertices = s.complex().vertices().len();
    let lower_bound = 2 * k + 2;
    let shape = if is_trivial_z2(s) {
        Some(SmallShape::TrivialPair)
    } else if is_crosspolytope(s) {
        Some(SmallShape::Crosspolytope)
    } else {
        None
    };
    let equality = vertices == lower_bound;
    Ok(VertexCountReport {
        vertices,
        lower_bound,
        equality,
        shape,
        holds: vertices >= lower_bound && equality == shape.is_some(),
    })
}

/// `{F, F, F*, F*}`.
pub fn is_trivial_z2(s: &SymmetricComplex) -> bool {
    let c = s.complex();
    let counts: Vec<(&Face, usize)> = c.counts().collect();
    counts.len() == 2 && counts.iter().all(|&(_, m)| m == 2)
}

/// Invariant vertex sets made of `size` pairs.
fn invariant_subsets(sigma: &Involution, size: usize) -> impl Iterator<Item = BTreeSet<VertexId>> + '_ {
    let pairs = sigma.pairs();
    combinations(pairs.len(), size).into_iter().map(move |c| c.iter().flat_map(|&i| [pairs[i].0, pairs[i].1]).collect())
}

fn separates(g: &Graph, x: &BTreeSet<VertexId>) -> bool {
    !g.remove_vertices(x).is_connected()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparatorReport {
    pub separator: BTreeSet<VertexId>,
    /// `S = T ⊔ T*` with `V(T) ∩ V(T*) = X`.
    pub split_pair: bool,
    /// `|X| = 2k` and `G[X]` is the graph of the (k-1)-crosspolytope.
    pub crosspolytope_link: bool,
    pub dichotomy_holds: bool,
}

/// `G[X]` is a complete multipartite graph with all parts of size two.
fn is_cocktail_party(g: &Graph, x: &BTreeSet<VertexId>) -> bool {
    let h = g.induced(x);
    let adj = h.adjacency();
    adj.iter().all(|(&v, nbrs)| {
        let missing: Vec<VertexId> = x.iter().copied().filter(|&w| w != v && !nbrs.contains(&w)).collect();
        missing.len() == 1 && {
            let w = missing[0];
            x.iter().filter(|&&z| z != w && !adj[&w].contains(&z)).count() == 1
        }
    })
}

/// Smallest ∗-invariant vertex separator with at most `bound` vertices, with
/// the two-way structure check for it.
pub fn invariant_separator(s: &SymmetricComplex, bound: usize) -> Result<Option<SeparatorReport>> {
    let k = s.dim();
    if bound > 2 * k {
        return Err(Error::SeparatorBound { bound, limit: 2 * k });
    }
    let n = s.complex().vertices().len();
    if n > SEARCH_VERTEX_CAP {
        return Err(Error::SearchTooLarge(n, SEARCH_VERTEX_CAP));
    }
    let classification = classify(s)?;
    if classification.kind() == ClassKind::Reducible {
        return Err(Error::Precondition("complex is not ℤ₂-irreducible".into()));
    }
    let g = s.graph();
    for pairs in 0..=bound / 2 {
        if let Some(x) = invariant_subsets(s.involution(), pairs).find(|x| separates(&g, x)) {
            let split_pair = classification.split_circuit().is_some_and(|t| overlap_vertices(t, s.involution()) == x);
            let crosspolytope_link = x.len() == 2 * k && is_cocktail_party(&g, &x);
            return Ok(Some(SeparatorReport {
                separator: x,
                split_pair,
                crosspolytope_link,
                dichotomy_holds: split_pair || crosspolytope_link,
            }));
        }
    }
    Ok(None)
}

/// `max{2(k-t), k+1, 2t}`.
pub fn c_threshold(k: usize, t: usize) -> Result<usize> {
    if t > k {
        return Err(Error::Range(format!("t = {t} exceeds k = {k}")));
    }
    Ok((2 * (k - t)).max(k + 1).max(2 * t))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RigidityConditions {
    pub k: usize,
    pub t: usize,
    pub threshold: usize,
    pub kind: ClassKind,
    pub overlap: Option<usize>,
    /// Circuit, or split pair with overlap at least the threshold.
    pub cond_ii: bool,
    /// No invariant set smaller than the threshold disconnects the graph.
    pub cond_iii: bool,
    pub separator: Option<BTreeSet<VertexId>>,
    /// False for trivial irreducibles and for the half-turn case k = 2, t = 1,
    /// where the rigidity equivalence is not claimed.
    pub hypotheses_hold: bool,
    pub agree: bool,
}

pub fn rigidity_conditions(s: &SymmetricComplex, t: usize) -> Result<RigidityConditions> {
    let k = s.dim();
    if k < 2 {
        return Err(Error::Precondition(format!("dimension {k} is below 2")));
    }
    let threshold = c_threshold(k, t)?;
    let n = s.complex().vertices().len();
    if n > SEARCH_VERTEX_CAP {
        return Err(Error::SearchTooLarge(n, SEARCH_VERTEX_CAP));
    }
    let classification = classify(s)?;
    let kind = classification.kind();
    if kind == ClassKind::Reducible {
        return Err(Error::Precondition("complex is not ℤ₂-irreducible".into()));
    }
    let overlap = classification.overlap();
    let cond_ii = match &classification {
        Classification::Circuit => true,
        Classification::SplitPair { overlap, .. } => *overlap >= threshold,
        _ => false,
    };
    let g = s.graph();
    let mut separator = None;
    'search: for pairs in 0..threshold.div_ceil(2) {
        for x in invariant_subsets(s.involution(), pairs) {
            if x.len() < threshold && separates(&g, &x) {
                separator = Some(x);
                break 'search;
            }
        }
    }
    let cond_iii = separator.is_none();
    Ok(RigidityConditions {
        k,
        t,
        threshold,
        kind,
        overlap,
        cond_ii,
        cond_iii,
        separator,
        hypotheses_hold: kind != ClassKind::TrivialIrreducible && !(k == 2 && t == 1),
        agree: cond_ii == cond_iii,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{
        gen_crosspolytope, gen_hexahedron_pair, gen_split_pair, gen_symmetric_stacked, gen_trivial_pair,
    };

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    #[test]
    fn validate_examples() {
        assert!(gen_crosspolytope(2).is_ok());
        assert!(gen_hexahedron_pair().complex().len() == 12);
        let tet = crate::generators::simplex_boundary(&[1, 2, 3, 4]);
        let err = validate(&tet, &Involution::of(&[(1, 2), (3, 4)])).unwrap_err();
        assert!(matches!(err, Error::FixedFace(_)));
        let tets = tet.union(&crate::generators::simplex_boundary(&[5, 6, 7, 8])).unwrap();
        let shifted = Involution::of(&[(1, 5), (2, 6), (3, 7), (4, 9)]);
        assert!(matches!(validate(&tets, &shifted), Err(Error::InvolutionDomain(_))));
        let single = MultiComplex::of(2, &[&[1, 2, 3]]);
        assert!(matches!(
            validate(
                &single.union(&MultiComplex::of(2, &[&[4, 5, 7]])).unwrap(),
                &Involution::of(&[(1, 4), (2, 5), (3, 6), (7, 8)])
            ),
            Err(Error::InvolutionDomain(_))
        ));
        let unequal = MultiComplex::of(2, &[&[1, 2, 3], &[1, 2, 3], &[4, 5, 6]]);
        assert!(matches!(
            validate(&unequal, &Involution::of(&[(1, 4), (2, 5), (3, 6)])),
            Err(Error::MultiplicityMismatch(_))
        ));
        let missing = MultiComplex::of(2, &[&[1, 2, 3], &[4, 5, 6], &[1, 2, 6]]);
        assert!(matches!(
            validate(&missing, &Involution::of(&[(1, 4), (2, 5), (3, 6)])),
            Err(Error::FacetImageMissing(_))
        ));
        assert!(matches!(Involution::new([(v(1), v(1))]), Err(Error::FixedVertex(_))));
    }

    #[test]
    fn induced_pairing_examples() {
        let b2 = gen_crosspolytope(2).unwrap();
        let sigma = b2.involution();
        assert_eq!(induced_pairing(sigma, &b2.complex().vertices()), *sigma);
        // x1 = 1, x1* = 4, x2 = 2
        let w = BTreeSet::from([v(1), v(4), v(2)]);
        assert_eq!(induced_pairing(sigma, &w), Involution::of(&[(1, 4)]));
        assert!(induced_pairing(sigma, &BTreeSet::from([v(1)])).is_empty());
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_z2_irreducible(&gen_trivial_pair(2).unwrap()));
        assert!(is_z2_irreducible(&gen_crosspolytope(2).unwrap()));
        assert!(is_z2_irreducible(&gen_hexahedron_pair()));
        let hex = gen_hexahedron_pair();
        let shifted = hex.complex().map_vertices(|w| VertexId(w.0 + 100)).unwrap();
        let both = hex.complex().union(&shifted).unwrap();
        let sigma = Involution::new(
            hex.involution()
                .pairs()
                .into_iter()
                .chain(hex.involution().pairs().into_iter().map(|(a, b)| (VertexId(a.0 + 100), VertexId(b.0 + 100)))),
        )
        .unwrap();
        let doubled = validate(&both, &sigma).unwrap();
        assert!(!is_z2_irreducible(&doubled));
        assert!(matches!(classify(&doubled).unwrap(), Classification::Reducible { .. }));
    }

    #[test]
    fn classify_examples() {
        let hex = gen_hexahedron_pair();
        match classify(&hex).unwrap() {
            Classification::SplitPair { circuit, overlap } => {
                assert_eq!(circuit.len(), 6);
                assert_eq!(overlap, 2);
                let star = hex.involution().apply_complex(&circuit).unwrap();
                assert_eq!(circuit.symmetric_difference(&star).unwrap(), *hex.complex());
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(classify(&gen_crosspolytope(3).unwrap()).unwrap(), Classification::Circuit);
        assert_eq!(classify(&gen_trivial_pair(2).unwrap()).unwrap().kind(), ClassKind::TrivialIrreducible);
        assert!(matches!(
            classify(
                &validate(&MultiComplex::of(2, &[&[1, 2, 3], &[4, 5, 6]]), &Involution::of(&[(1, 4), (2, 5), (3, 6)]))
                    .unwrap()
            ),
            Err(Error::NotACycle)
        ));
    }

    #[test]
    fn split_pair_uniqueness_on_hexahedra() {
        let hex = gen_hexahedron_pair();
        let t = classify(&hex).unwrap().split_circuit().unwrap().clone();
        let star = hex.involution().apply_complex(&t).unwrap();
        for c in cycles::enumerate_circuits(hex.complex(), 20).unwrap() {
            assert!(c == t || c == star);
        }
    }

    #[test]
    fn vertex_count_examples() {
        let r = min_vertex_count_check(&gen_crosspolytope(2).unwrap()).unwrap();
        assert!(r.equality && r.holds && r.shape == Some(SmallShape::Crosspolytope));
        let r = min_vertex_count_check(&gen_trivial_pair(2).unwrap()).unwrap();
        assert_eq!(r.vertices, 6);
        assert!(r.equality && r.holds && r.shape == Some(SmallShape::TrivialPair));
        let r = min_vertex_count_check(&gen_symmetric_stacked(2, 1, 0).unwrap()).unwrap();
        assert_eq!(r.vertices, 8);
        assert!(!r.equality && r.holds && r.shape.is_none());
    }

    #[test]
    fn separator_examples() {
        let hex = gen_hexahedron_pair();
        let r = invariant_separator(&hex, 4).unwrap().unwrap();
        assert_eq!(r.separator, BTreeSet::from([v(1), v(5)]));
        assert!(r.split_pair && r.dichotomy_holds);
        assert!(matches!(invariant_separator(&hex, 6), Err(Error::SeparatorBound { .. })));
        let b3 = gen_crosspolytope(3).unwrap();
        assert_eq!(invariant_separator(&b3, 4).unwrap(), None);
        // The link of an antipodal pair separates it from the rest.
        let r = invariant_separator(&b3, 6).unwrap().unwrap();
        assert_eq!(r.separator.len(), 6);
        assert!(r.crosspolytope_link && !r.split_pair && r.dichotomy_holds);
        let pair = gen_split_pair(3, 4, 1).unwrap();
        let r = invariant_separator(&pair, 6).unwrap().unwrap();
        assert_eq!(r.separator.len(), 4);
        assert!(r.split_pair);
    }

    #[test]
    fn threshold_values() {
        assert_eq!(c_threshold(2, 1).unwrap(), 3);
        assert_eq!(c_threshold(3, 0).unwrap(), 6);
        assert_eq!(c_threshold(2, 2).unwrap(), 4);
        assert_eq!(c_threshold(3, 1).unwrap(), 4);
        assert!(c_threshold(2, 3).is_err());
    }

    #[test]
    fn rigidity_conditions_examples() {
        let r = rigidity_conditions(&gen_crosspolytope(3).unwrap(), 0).unwrap();
        assert!(r.cond_ii && r.cond_iii && r.agree);
        let r = rigidity_conditions(&gen_hexahedron_pair(), 0).unwrap();
        assert_eq!(r.overlap, Some(2));
        assert!(!r.cond_ii && !r.cond_iii && r.agree);
        let r = rigidity_conditions(&gen_split_pair(3, 4, 1).unwrap(), 0).unwrap();
        assert!(!r.cond_ii && !r.cond_iii);
        let r = rigidity_conditions(&gen_split_pair(3, 6, 1).unwrap(), 0).unwrap();
        assert!(r.cond_ii && r.cond_iii);
    }
}
