//! Simplicial k-multicomplexes.
//!
//! A [`MultiComplex`] is a multiset of (k+1)-vertex facets. Faces are stored as
//! sorted vertex arrays so equality, hashing and parity counting work on the
//! canonical form directly. Everything here is an immutable value; operations
//! return new complexes.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A vertex label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

/// A finite set of vertices kept in sorted order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Face(Vec<VertexId>);

impl Face {
    /// Builds a face, rejecting repeated vertices.
    pub fn new<I, V>(vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        V: Into<VertexId>,
    {
        let mut vs: Vec<VertexId> = vertices.into_iter().map(Into::into).collect();
        vs.sort_unstable();
        if let Some(w) = vs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        Ok(Face(vs))
    }

    /// Convenience constructor for literals in tests and generators.
    ///
    /// # Panics
    /// Panics on repeated vertices.
    pub fn of(vertices: &[u32]) -> Self {
        Face::new(vertices.iter().copied()).expect("face with repeated vertex")
    }

    pub(crate) fn from_sorted(vs: Vec<VertexId>) -> Self {
        debug_assert!(vs.windows(2).all(|w| w[0] < w[1]));
        Face(vs)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    /// `self - v`; unchanged if `v` is absent.
    pub fn without(&self, v: VertexId) -> Face {
        Face(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    /// `self + v`; unchanged if `v` is already present.
    pub fn with(&self, v: VertexId) -> Face {
        match self.0.binary_search(&v) {
            Ok(_) => self.clone(),
            Err(pos) => {
                let mut vs = self.0.clone();
                vs.insert(pos, v);
                Face(vs)
            }
        }
    }

    /// Replaces `from` by `to`. Returns `None` if the result would repeat a vertex.
    pub fn replace(&self, from: VertexId, to: VertexId) -> Option<Face> {
        if !self.contains(from) {
            return Some(self.clone());
        }
        if self.contains(to) {
            return None;
        }
        Some(self.without(from).with(to))
    }

    /// Applies a vertex map; `None` if two vertices collide.
    pub fn map<F: Fn(VertexId) -> VertexId>(&self, f: F) -> Option<Face> {
        let mut vs: Vec<VertexId> = self.0.iter().map(|&v| f(v)).collect();
        vs.sort_unstable();
        if vs.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(Face(vs))
    }

    /// All subsets of the given size, in lexicographic order.
    pub fn subsets(&self, size: usize) -> Vec<Face> {
        let n = self.0.len();
        if size > n {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            out.push(Face(idx.iter().map(|&i| self.0[i]).collect()));
            let mut i = size;
            while i > 0 && idx[i - 1] == i - 1 + n - size {
                i -= 1;
            }
            if i == 0 {
                return out;
            }
            idx[i - 1] += 1;
            for j in i..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }

    /// The faces of codimension one, i.e. `self - v` for each vertex.
    pub fn facets_of_boundary(&self) -> impl Iterator<Item = Face> + '_ {
        self.0.iter().map(move |&v| self.without(v))
    }

    pub fn intersection(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| other.contains(*v)).collect())
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A simplicial k-multicomplex: facets of size k+1 with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiComplex {
    k: usize,
    facets: BTreeMap<Face, usize>,
}

impl MultiComplex {
    pub fn empty(k: usize) -> Self {
        MultiComplex { k, facets: BTreeMap::new() }
    }

    /// Builds a complex from facet occurrences; repeated facets add multiplicity.
    pub fn from_facets<I: IntoIterator<Item = Face>>(k: usize, facets: I) -> Result<Self> {
        let mut out = MultiComplex::empty(k);
        for f in facets {
            out.insert(f, 1)?;
        }
        Ok(out)
    }

    /// Builds from `(facet, multiplicity)` pairs.
    pub fn from_counts<I: IntoIterator<Item = (Face, usize)>>(k: usize, counts: I) -> Result<Self> {
        let mut out = MultiComplex::empty(k);
        for (f, m) in counts {
            if m == 0 {
                return Err(Error::ZeroMultiplicity(f));
            }
            out.insert(f, m)?;
        }
        Ok(out)
    }

    /// Literal constructor for tests and generators.
    ///
    /// # Panics
    /// Panics on malformed facets.
    pub fn of(k: usize, facets: &[&[u32]]) -> Self {
        MultiComplex::from_facets(k, facets.iter().map(|f| Face::of(f))).expect("malformed complex")
    }

    fn insert(&mut self, face: Face, mult: usize) -> Result<()> {
        if face.len() != self.k + 1 {
            return Err(Error::FacetArity { facet: face, expected: self.k + 1 });
        }
        *self.facets.entry(face).or_insert(0) += mult;
        Ok(())
    }

    pub(crate) fn insert_unchecked(&mut self, face: Face, mult: usize) {
        debug_assert_eq!(face.len(), self.k + 1);
        if mult > 0 {
            *self.facets.entry(face).or_insert(0) += mult;
        }
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Number of facets counted with multiplicity.
    pub fn len(&self) -> usize {
        self.facets.values().sum()
    }

    pub fn multiplicity(&self, face: &Face) -> usize {
        self.facets.get(face).copied().unwrap_or(0)
    }

    /// `(facet, multiplicity)` in canonical order.
    pub fn counts(&self) -> impl Iterator<Item = (&Face, usize)> {
        self.facets.iter().map(|(f, &m)| (f, m))
    }

    /// Distinct facets in canonical order.
    pub fn support(&self) -> impl Iterator<Item = &Face> {
        self.facets.keys()
    }

    /// Facet occurrences in canonical order, repeated by multiplicity.
    pub fn occurrences(&self) -> Vec<Face> {
        self.facets.iter().flat_map(|(f, &m)| std::iter::repeat_n(f.clone(), m)).collect()
    }

    /// True when every multiplicity is one.
    pub fn is_simple(&self) -> bool {
        self.facets.values().all(|&m| m == 1)
    }

    pub fn vertices(&self) -> BTreeSet<VertexId> {
        self.facets.keys().flat_map(|f| f.iter()).collect()
    }

    /// All j-faces, each listed once.
    pub fn faces(&self, j: usize) -> Result<BTreeSet<Face>> {
        if j > self.k {
            return Err(Error::Dimension { requested: j, k: self.k });
        }
        Ok(self.facets.keys().flat_map(|f| f.subsets(j + 1)).collect())
    }

    pub fn edges(&self) -> BTreeSet<(VertexId, VertexId)> {
        let mut out = BTreeSet::new();
        for f in self.facets.keys() {
            let vs = f.vertices();
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    out.insert((vs[i], vs[j]));
                }
            }
        }
        out
    }

    pub fn graph(&self) -> Graph {
        Graph::new(self.vertices(), self.edges()).expect("complex graph is simple")
    }

    /// k-subsets lying in an odd number of facet occurrences.
    ///
    /// For k = 0 the result is the empty 0-complex; the augmented boundary is
    /// not modelled.
    pub fn boundary(&self) -> MultiComplex {
        if self.k == 0 {
            return MultiComplex::empty(0);
        }
        let mut parity: HashMap<Face, bool> = HashMap::new();
        for (f, m) in &self.facets {
            if m % 2 == 0 {
                continue;
            }
            for ridge in f.facets_of_boundary() {
                let e = parity.entry(ridge).or_insert(false);
                *e = !*e;
            }
        }
        let mut out = MultiComplex::empty(self.k - 1);
        for (f, odd) in parity {
            if odd {
                out.facets.insert(f, 1);
            }
        }
        out
    }

    /// Facet-set symmetric difference of two simplicial complexes.
    pub fn symmetric_difference(&self, other: &MultiComplex) -> Result<MultiComplex> {
        if self.k != other.k {
            return Err(Error::DimensionMismatch { left: self.k, right: other.k });
        }
        for c in [self, other] {
            if let Some((f, m)) = c.facets.iter().find(|(_, &m)| m > 1) {
                return Err(Error::UnsupportedMultiset { facet: f.clone(), multiplicity: *m });
            }
        }
        let mut out = MultiComplex::empty(self.k);
        for f in self.facets.keys() {
            if !other.facets.contains_key(f) {
                out.facets.insert(f.clone(), 1);
            }
        }
        for f in other.facets.keys() {
            if !self.facets.contains_key(f) {
                out.facets.insert(f.clone(), 1);
            }
        }
        Ok(out)
    }

    /// Facets not containing `face`. The antistar of the empty face is empty.
    pub fn antistar(&self, face: &Face) -> MultiComplex {
        MultiComplex {
            k: self.k,
            facets: self.facets.iter().filter(|(f, _)| !face.is_subset_of(f)).map(|(f, &m)| (f.clone(), m)).collect(),
        }
    }

    /// Contracts `v` onto `u`: drop facets containing both, then rename `v` to `u`.
    /// Colliding facets add their multiplicities.
    pub fn contract(&self, u: VertexId, v: VertexId) -> Result<MultiComplex> {
        if u == v {
            return Err(Error::ContractSameVertex(u));
        }
        let mut out = MultiComplex::empty(self.k);
        for (f, &m) in &self.facets {
            if let Some(img) = contract_facet(f, u, v) {
                out.insert_unchecked(img, m);
            }
        }
        Ok(out)
    }

    /// Facets are adjacent when they share k vertices; true for at most one facet.
    pub fn is_strongly_connected(&self) -> bool {
        let facets: Vec<&Face> = self.facets.keys().collect();
        if facets.len() <= 1 {
            return true;
        }
        let mut uf = UnionFind::new(facets.len());
        let mut first_with_ridge: HashMap<Face, usize> = HashMap::new();
        for (i, f) in facets.iter().enumerate() {
            for ridge in f.facets_of_boundary() {
                match first_with_ridge.get(&ridge) {
                    Some(&j) => uf.union(i, j),
                    None => {
                        first_with_ridge.insert(ridge, i);
                    }
                }
            }
        }
        let root = uf.find(0);
        (1..facets.len()).all(|i| uf.find(i) == root)
    }

    /// True when every edge outside `{u,v}` lies in some facet of the antistar
    /// of `{u,v}`, in which case `G(S/uv) = G(S)/uv`.
    pub fn contraction_keeps_graph(&self, u: VertexId, v: VertexId) -> bool {
        let uv = Face::from_sorted(if u < v { vec![u, v] } else { vec![v, u] });
        let ast = self.antistar(&uv);
        let kept = ast.edges();
        self.edges().into_iter().filter(|&(a, b)| !(a == uv.0[0] && b == uv.0[1])).all(|e| kept.contains(&e))
    }

    /// Multiset sum.
    pub fn union(&self, other: &MultiComplex) -> Result<MultiComplex> {
        if self.k != other.k {
            return Err(Error::DimensionMismatch { left: self.k, right: other.k });
        }
        let mut out = self.clone();
        for (f, &m) in &other.facets {
            out.insert_unchecked(f.clone(), m);
        }
        Ok(out)
    }

    /// Multiset difference; `None` if `other` is not a sub-multiset.
    pub fn difference(&self, other: &MultiComplex) -> Option<MultiComplex> {
        let mut out = self.clone();
        for (f, &m) in &other.facets {
            let have = out.facets.get_mut(f)?;
            if *have < m {
                return None;
            }
            *have -= m;
            if *have == 0 {
                out.facets.remove(f);
            }
        }
        Some(out)
    }

    pub fn is_submultiset_of(&self, other: &MultiComplex) -> bool {
        self.facets.iter().all(|(f, &m)| other.multiplicity(f) >= m)
    }

    /// Facets shared by both, with the smaller multiplicity.
    pub fn intersection(&self, other: &MultiComplex) -> MultiComplex {
        MultiComplex {
            k: self.k,
            facets: self
                .facets
                .iter()
                .filter_map(|(f, &m)| {
                    let n = other.multiplicity(f).min(m);
                    (n > 0).then(|| (f.clone(), n))
                })
                .collect(),
        }
    }

    /// Renames vertices; `None` if a facet degenerates.
    pub fn map_vertices<F: Fn(VertexId) -> VertexId>(&self, f: F) -> Option<MultiComplex> {
        let mut out = MultiComplex::empty(self.k);
        for (face, &m) in &self.facets {
            out.insert_unchecked(face.map(&f)?, m);
        }
        Some(out)
    }

    /// Parity sum of several simplicial complexes.
    pub fn symmetric_difference_all<'a, I>(k: usize, parts: I) -> Result<MultiComplex>
    where
        I: IntoIterator<Item = &'a MultiComplex>,
    {
        let mut acc = MultiComplex::empty(k);
        for p in parts {
            acc = acc.symmetric_difference(p)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for MultiComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        let mut first = true;
        for (face, &m) in &self.facets {
            for _ in 0..m {
                if !first {
                    write!(f, " ")?;
                }
                first = false;
                write!(f, "{face}")?;
            }
        }
        write!(f, "]")
    }
}

/// Image of a facet under contraction of `v` onto `u`, `None` if it contains both.
pub(crate) fn contract_facet(f: &Face, u: VertexId, v: VertexId) -> Option<Face> {
    match (f.contains(u), f.contains(v)) {
        (true, true) => None,
        (_, true) => Some(f.without(v).with(u)),
        _ => Some(f.clone()),
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
