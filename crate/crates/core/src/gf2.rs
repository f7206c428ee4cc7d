//! Bit-packed GF(2) vectors and incremental elimination.
//!
//! [`Eliminator`] keeps an echelon basis of the vectors inserted so far together
//! with, for each basis row, the set of inserted elements it is the sum of. A
//! dependent insertion therefore comes back with its fundamental circuit: the
//! set of elements (including the new one) whose vectors sum to zero.

use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub fn new() -> Self {
        BitRow::default()
    }

    pub fn unit(i: usize) -> Self {
        let mut r = BitRow::new();
        r.set(i);
        r
    }

    pub fn from_ones<I: IntoIterator<Item = usize>>(ones: I) -> Self {
        let mut r = BitRow::new();
        for i in ones {
            r.flip(i);
        }
        r
    }

    fn ensure(&mut self, words: usize) {
        if self.words.len() < words {
            self.words.resize(words, 0);
        }
    }

    pub fn get(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    pub fn set(&mut self, i: usize) {
        self.ensure(i / 64 + 1);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn flip(&mut self, i: usize) {
        self.ensure(i / 64 + 1);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        self.ensure(other.words.len());
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }
}

/// Incremental GF(2) row echelon form with combination tracking.
#[derive(Clone, Debug, Default)]
pub struct Eliminator {
    rows: Vec<(BitRow, BitRow)>,
    pivot_of: HashMap<usize, usize>,
    inserted: usize,
}

impl Eliminator {
    pub fn new() -> Self {
        Eliminator::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Number of elements inserted so far; the next insertion gets this index.
    pub fn inserted(&self) -> usize {
        self.inserted
    }

    /// Inserts the next element. Returns `None` if it is independent of the
    /// current basis, otherwise the set of element indices summing to zero.
    pub fn insert(&mut self, v: &BitRow) -> Option<BitRow> {
        let idx = self.inserted;
        self.inserted += 1;
        let mut r = v.clone();
        let mut combo = BitRow::unit(idx);
        while let Some(col) = r.first_one() {
            match self.pivot_of.get(&col) {
                Some(&row) => {
                    r.xor_assign(&self.rows[row].0);
                    combo.xor_assign(&self.rows[row].1);
                }
                None => {
                    self.pivot_of.insert(col, self.rows.len());
                    self.rows.push((r, combo));
                    return None;
                }
            }
        }
        Some(combo)
    }

    /// Whether `v` lies in the span, without inserting it.
    pub fn reduces_to_zero(&self, v: &BitRow) -> bool {
        let mut r = v.clone();
        while let Some(col) = r.first_one() {
            match self.pivot_of.get(&col) {
                Some(&row) => r.xor_assign(&self.rows[row].0),
                None => return false,
            }
        }
        true
    }
}

pub fn rank(rows: &[BitRow]) -> usize {
    let mut e = Eliminator::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// A basis of the dependencies among `rows`, one fundamental circuit per
/// dependent row in insertion order.
pub fn kernel_basis(rows: &[BitRow]) -> Vec<BitRow> {
    let mut e = Eliminator::new();
    rows.iter().filter_map(|r| e.insert(r)).collect()
}

/// Splits `order` into disjoint minimal dependent sets, repeatedly taking the
/// first fundamental circuit that appears when inserting in `order`.
///
/// Elements left over when no dependency remains are returned separately.
pub fn greedy_circuits(rows: &[BitRow], order: &[usize]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut remaining: Vec<usize> = order.to_vec();
    let mut parts = Vec::new();
    'outer: loop {
        let mut e = Eliminator::new();
        for &el in remaining.iter() {
            if let Some(combo) = e.insert(&rows[el]) {
                let positions: Vec<usize> = combo.ones().collect();
                let part: Vec<usize> = positions.iter().map(|&p| remaining[p]).collect();
                let mut drop = vec![false; remaining.len()];
                for p in positions {
                    drop[p] = true;
                }
                remaining = remaining.iter().zip(drop).filter(|(_, d)| !d).map(|(&x, _)| x).collect();
                parts.push(part);
                continue 'outer;
            }
        }
        return (parts, remaining);
    }
}
