//! Cycles and circuits of the simplicial matroid over GF(2).
//!
//! Each facet occurrence is a row vector indexed by (k-1)-faces. A multiset is
//! a cycle when its rows sum to zero and a circuit when, in addition, its rows
//! have rank one less than its size.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf2::{self, BitRow, Eliminator};
use crate::simplicial::{Face, MultiComplex};

/// Assigns column indices to (k-1)-faces on first sight.
#[derive(Debug, Default, Clone)]
pub struct RidgeIndex {
    columns: HashMap<Face, usize>,
}

impl RidgeIndex {
    pub fn new() -> Self {
        RidgeIndex::default()
    }

    pub fn column(&mut self, ridge: Face) -> usize {
        let next = self.columns.len();
        *self.columns.entry(ridge).or_insert(next)
    }

    /// Boundary vector of one facet.
    pub fn row(&mut self, facet: &Face) -> BitRow {
        let mut r = BitRow::new();
        self.add_boundary(&mut r, facet);
        r
    }

    pub fn add_boundary(&mut self, row: &mut BitRow, facet: &Face) {
        for ridge in facet.facets_of_boundary() {
            let c = self.column(ridge);
            row.flip(c);
        }
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }
}

/// Boundary rows of the facet occurrences of a multicomplex.
#[derive(Debug, Clone)]
pub struct Gf2Matrix {
    pub facets: Vec<Face>,
    pub rows: Vec<BitRow>,
    pub columns: usize,
}

impl Gf2Matrix {
    pub fn boundary_of(s: &MultiComplex) -> Self {
        let facets = s.occurrences();
        let mut index = RidgeIndex::new();
        let rows = facets.iter().map(|f| index.row(f)).collect();
        Gf2Matrix { facets, rows, columns: index.len() }
    }

    pub fn rank(&self) -> usize {
        gf2::rank(&self.rows)
    }

    fn collect(&self, k: usize, elements: &[usize]) -> MultiComplex {
        let mut out = MultiComplex::empty(k);
        for &e in elements {
            out.insert_unchecked(self.facets[e].clone(), 1);
        }
        out
    }
}

pub fn gf2_rank(s: &MultiComplex) -> usize {
    Gf2Matrix::boundary_of(s).rank()
}

pub fn is_cycle(s: &MultiComplex) -> bool {
    s.boundary().is_empty()
}

/// Non-empty cycle whose facet rows have rank `|S| - 1`.
pub fn is_circuit(s: &MultiComplex) -> bool {
    !s.is_empty() && is_cycle(s) && gf2_rank(s) + 1 == s.len()
}

/// Exactly two copies of a single facet.
pub fn is_trivial_circuit(s: &MultiComplex) -> bool {
    let mut counts = s.counts();
    matches!((counts.next(), counts.next()), (Some((_, 2)), None))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitDecomposition {
    pub parts: Vec<MultiComplex>,
}

impl CircuitDecomposition {
    /// Multiset sum of the parts.
    pub fn reassemble(&self, k: usize) -> MultiComplex {
        self.parts.iter().fold(MultiComplex::empty(k), |acc, p| acc.union(p).expect("parts share dimension"))
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Facet occurrence order used by the greedy extraction: canonical for seed 0,
/// a seeded shuffle otherwise.
pub(crate) fn element_order(n: usize, seed: u64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    if seed != 0 {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    order
}

/// Partitions a cycle into simplicial circuits by repeatedly removing the first
/// fundamental circuit found while inserting facet rows.
pub fn decompose_into_circuits(s: &MultiComplex, seed: u64) -> Result<CircuitDecomposition> {
    if !is_cycle(s) {
        return Err(Error::NotACycle);
    }
    let m = Gf2Matrix::boundary_of(s);
    let order = element_order(m.facets.len(), seed);
    let (parts, rest) = gf2::greedy_circuits(&m.rows, &order);
    if !rest.is_empty() {
        return Err(Error::Invariant("cycle left independent facets after extraction".into()));
    }
    Ok(CircuitDecomposition { parts: parts.iter().map(|p| m.collect(s.dim(), p)).collect() })
}

/// Every distinct circuit contained in `s`, found by walking the cycle space.
/// Only feasible when the cycle space has dimension at most `max_dim`.
pub fn enumerate_circuits(s: &MultiComplex, max_dim: usize) -> Result<Vec<MultiComplex>> {
    let m = Gf2Matrix::boundary_of(s);
    let basis = gf2::kernel_basis(&m.rows);
    if basis.len() > max_dim {
        return Err(Error::EnumerationTooLarge(basis.len()));
    }
    let mut found: Vec<MultiComplex> = Vec::new();
    for mask in 1u64..(1u64 << basis.len()) {
        let mut support = BitRow::new();
        for (i, b) in basis.iter().enumerate() {
            if mask >> i & 1 == 1 {
                support.xor_assign(b);
            }
        }
        let elements: Vec<usize> = support.ones().collect();
        let mut e = Eliminator::new();
        for &el in &elements {
            e.insert(&m.rows[el]);
        }
        if e.rank() + 1 == elements.len() {
            let c = m.collect(s.dim(), &elements);
            if !found.contains(&c) {
                found.push(c);
            }
        }
    }
    found.sort_by_key(|c| c.occurrences());
    Ok(found)
}
