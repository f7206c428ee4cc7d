//! Face counts, the g₂ invariant and the symmetric lower bound.

use serde::Serialize;

use crate::combinatorics::{binomial, binomial_i64};
use crate::cycles::is_circuit;
use crate::error::{Error, Result};
use crate::simplicial::MultiComplex;
use crate::symmetric::{classify, invariant_separator, ClassKind, SymmetricComplex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FVector {
    /// `counts[j]` is the number of distinct j-faces.
    pub counts: Vec<usize>,
}

pub fn f_vector(s: &MultiComplex) -> FVector {
    FVector { counts: (0..=s.dim()).map(|j| s.faces(j).expect("j ≤ k").len()).collect() }
}

/// `|E| - (k+1)|V| + C(k+2, 2)`.
pub fn g2(s: &MultiComplex) -> i64 {
    let k = s.dim();
    s.edges().len() as i64 - (k as i64 + 1) * s.vertices().len() as i64 + binomial(k + 2, 2) as i64
}

/// `C(k+1, 2) - (k+1)`.
pub fn symmetric_g2_bound(k: usize) -> i64 {
    binomial(k + 1, 2) as i64 - (k as i64 + 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub g2: i64,
    pub bound: i64,
    pub satisfied: bool,
    pub equality: bool,
    /// k ≥ 2 and either the complex is a circuit, or it is a nontrivial
    /// irreducible cycle with no invariant separator of size at most 2k.
    pub hypotheses_hold: bool,
    pub hypothesis_note: String,
}

pub fn check_lower_bound(s: &SymmetricComplex) -> BoundReport {
    let k = s.dim();
    let g2 = g2(s.complex());
    let bound = symmetric_g2_bound(k);
    let (hypotheses_hold, hypothesis_note) = lower_bound_hypotheses(s);
    BoundReport { g2, bound, satisfied: g2 >= bound, equality: g2 == bound, hypotheses_hold, hypothesis_note }
}

fn lower_bound_hypotheses(s: &SymmetricComplex) -> (bool, String) {
    let k = s.dim();
    if k < 2 {
        return (false, format!("dimension {k} is below 2"));
    }
    if is_circuit(s.complex()) {
        return (true, "symmetric circuit".into());
    }
    match classify(s) {
        Ok(c) if c.kind() == ClassKind::Reducible => (false, "not ℤ₂-irreducible".into()),
        Ok(c) if c.kind() == ClassKind::TrivialIrreducible => (false, "trivial irreducible".into()),
        Ok(_) => match invariant_separator(s, 2 * k) {
            Ok(None) => (true, "no invariant separator of size ≤ 2k".into()),
            Ok(Some(r)) => (false, format!("invariant separator of size {}", r.separator.len())),
            Err(e) => (false, e.to_string()),
        },
        Err(e) => (false, e.to_string()),
    }
}

/// Number of j-faces of a symmetrically stacked k-sphere on `n` vertices.
pub fn phi(j: usize, n: usize, k: usize) -> Result<i64> {
    if j > k {
        return Err(Error::Range(format!("j = {j} exceeds k = {k}")));
    }
    if n < 2 * k + 2 || n % 2 == 1 {
        return Err(Error::Range(format!("n = {n} must be even and at least 2k+2 = {}", 2 * k + 2)));
    }
    let (j, n, k) = (j as i64, n as i64, k as i64);
    let extra = n - 2 * k - 2;
    Ok(if j < k {
        (1i64 << (j + 1)) * binomial_i64(k + 1, j + 1) + extra * binomial_i64(k + 1, j)
    } else {
        (1i64 << (k + 1)) + k * extra
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_crosspolytope, gen_symmetric_stacked, gen_trivial_pair, simplex_boundary};

    #[test]
    fn g2_examples() {
        assert_eq!(g2(gen_crosspolytope(2).unwrap().complex()), 0);
        assert_eq!(g2(gen_crosspolytope(3).unwrap().complex()), 2);
        assert_eq!(g2(&simplex_boundary(&[1, 2, 3, 4])), 0);
    }

    #[test]
    fn bound_examples() {
        let r = check_lower_bound(&gen_crosspolytope(3).unwrap());
        assert_eq!((r.g2, r.bound), (2, 2));
        assert!(r.satisfied && r.equality && r.hypotheses_hold);
        let r = check_lower_bound(&gen_crosspolytope(2).unwrap());
        assert_eq!((r.g2, r.bound), (0, 0));
        for s in 0..4 {
            let r = check_lower_bound(&gen_symmetric_stacked(3, s, s as u64).unwrap());
            assert!(r.equality, "stacks {s}");
        }
        assert!(!check_lower_bound(&gen_trivial_pair(2).unwrap()).hypotheses_hold);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(2, 6, 2).unwrap(), 8);
        assert_eq!(phi(1, 6, 2).unwrap(), 12);
        assert_eq!(phi(3, 10, 3).unwrap(), 22);
        assert!(phi(3, 10, 2).is_err());
        assert!(phi(1, 7, 2).is_err());
    }
}
