//! Exact rank computations over ℚ.
//!
//! Rows are scaled to integers first; rank then uses fraction-free Bareiss
//! elimination, where every intermediate entry is a minor of the input and
//! each division is exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Multiplies a row by the lcm of its denominators.
pub fn integer_row(row: &[Q]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

/// Rank by fraction-free elimination; consumes the matrix.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let Some(cols) = m.first().map(Vec::len) else { return 0 };
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let (top, bottom) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[c];
        for row in bottom.iter_mut() {
            let factor = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let v = pivot * &row[j] - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    bareiss_rank(rows.iter().map(|r| integer_row(r)).collect())
}

/// Incremental echelon basis over ℤ with content removal; used where rows
/// have to be accepted one at a time.
#[derive(Clone, Debug, Default)]
pub struct RowEchelon {
    rows: Vec<(usize, Vec<BigInt>)>,
}

fn remove_content(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

impl RowEchelon {
    pub fn new() -> Self {
        RowEchelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, row: &[Q]) -> Vec<BigInt> {
        let mut r = integer_row(row);
        for (p, b) in &self.rows {
            if r[*p].is_zero() {
                continue;
            }
            let (bp, rp) = (b[*p].clone(), r[*p].clone());
            for (x, y) in r.iter_mut().zip(b) {
                *x = &bp * &*x - &rp * y;
            }
            remove_content(&mut r);
        }
        r
    }

    /// Adds the row if it is independent of the basis; reports whether it was.
    pub fn insert(&mut self, row: &[Q]) -> bool {
        let r = self.reduce(row);
        match r.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                self.rows.push((p, r));
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, row: &[Q]) -> bool {
        self.reduce(row).iter().all(Zero::is_zero)
    }
}

/// Indices of a maximal independent subset, chosen greedily in `order`.
pub fn greedy_independent(rows: &[Vec<Q>], order: &[usize]) -> Vec<usize> {
    let mut e = RowEchelon::new();
    order.iter().copied().filter(|&i| e.insert(&rows[i])).collect()
}

/// Sign-aware absolute value helper for bit-size diagnostics.
pub fn max_bits(rows: &[Vec<Q>]) -> u64 {
    rows.iter().flat_map(|r| r.iter()).map(|x| x.numer().abs().bits().max(x.denom().bits())).max().unwrap_or(0)
}
