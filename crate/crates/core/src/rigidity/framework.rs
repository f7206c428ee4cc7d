//! Point groups, frameworks and random (symmetric) realizations.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::linalg::Q;
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::simplicial::VertexId;
use crate::symmetric::{Involution, PairedGraph};

pub type Vector = Vec<Q>;

/// Coordinates are drawn from `[-COORD_BOX, COORD_BOX]`.
pub const COORD_BOX: i64 = 1 << 16;

/// Cyclic group of order two generated by `diag(1,…,1,-1,…,-1)` with `t`
/// entries `+1` in dimension `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PointGroup {
    pub t: usize,
    pub d: usize,
}

impl PointGroup {
    pub fn new(t: usize, d: usize) -> Result<Self> {
        if d == 0 || t >= d {
            return Err(Error::PointGroup { t, d });
        }
        Ok(PointGroup { t, d })
    }

    pub fn sign(&self, coord: usize) -> i64 {
        if coord < self.t {
            1
        } else {
            -1
        }
    }

    pub fn apply(&self, v: &[Q]) -> Vector {
        v.iter().enumerate().map(|(i, x)| if i < self.t { x.clone() } else { -x.clone() }).collect()
    }

    /// `dim(T ∩ M_sym) = C(t+1,2) + C(d-t,2)`.
    pub fn trivial_sym_dim(&self) -> usize {
        binomial(self.t + 1, 2) + binomial(self.d - self.t, 2)
    }

    /// `dim(T ∩ M_ant) = C(d+1,2) - dim(T ∩ M_sym)`.
    pub fn trivial_ant_dim(&self) -> usize {
        binomial(self.d + 1, 2) - self.trivial_sym_dim()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Framework {
    graph: Graph,
    coords: BTreeMap<VertexId, Vector>,
    d: usize,
}

impl Framework {
    pub fn new(graph: Graph, coords: BTreeMap<VertexId, Vector>, d: usize) -> Result<Self> {
        for &v in graph.vertices() {
            match coords.get(&v) {
                None => return Err(Error::MissingCoordinates(v)),
                Some(p) if p.len() != d => return Err(Error::CoordinateLength(v)),
                Some(_) => {}
            }
        }
        let coords = coords.into_iter().filter(|(v, _)| graph.has_vertex(*v)).collect();
        Ok(Framework { graph, coords, d })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn coords(&self) -> &BTreeMap<VertexId, Vector> {
        &self.coords
    }

    pub fn position(&self, v: VertexId) -> &Vector {
        &self.coords[&v]
    }

    /// Column block of each vertex in the rigidity matrix.
    pub fn vertex_index(&self) -> BTreeMap<VertexId, usize> {
        self.graph.vertices().iter().enumerate().map(|(i, &v)| (v, i)).collect()
    }

    pub(crate) fn with_graph(&self, graph: Graph) -> Result<Framework> {
        Framework::new(graph, self.coords.clone(), self.d)
    }
}

/// A framework whose paired vertices satisfy `p(u*) = I·p(u)` exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaFramework {
    framework: Framework,
    pairing: Involution,
    group: PointGroup,
}

impl GammaFramework {
    pub fn new(framework: Framework, pairing: Involution, group: PointGroup) -> Result<Self> {
        if framework.dim() != group.d {
            return Err(Error::Precondition(format!(
                "framework dimension {} differs from group dimension {}",
                framework.dim(),
                group.d
            )));
        }
        PairedGraph::new(framework.graph().clone(), pairing.clone())?;
        for (a, b) in pairing.pairs() {
            if *framework.position(b) != group.apply(framework.position(a)) {
                return Err(Error::NotSymmetric(a));
            }
        }
        Ok(GammaFramework { framework, pairing, group })
    }

    pub fn framework(&self) -> &Framework {
        &self.framework
    }

    pub fn pairing(&self) -> &Involution {
        &self.pairing
    }

    pub fn group(&self) -> PointGroup {
        self.group
    }

    pub fn into_framework(self) -> Framework {
        self.framework
    }
}

fn random_vector(rng: &mut ChaCha8Rng, d: usize) -> Vector {
    (0..d).map(|_| Q::from_integer(BigInt::from(rng.random_range(-COORD_BOX..=COORD_BOX)))).collect()
}

pub fn sample_generic(g: &Graph, d: usize, seed: u64) -> Framework {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coords = g.vertices().iter().map(|&v| (v, random_vector(&mut rng, d))).collect();
    Framework::new(g.clone(), coords, d).expect("every vertex sampled")
}

/// Random integer coordinates for each orbit representative and each unpaired
/// vertex; partners get the image under the group generator.
pub fn sample_gamma_generic(g: &Graph, sigma: &Involution, group: PointGroup, seed: u64) -> Result<GammaFramework> {
    PairedGraph::new(g.clone(), sigma.clone())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coords = BTreeMap::new();
    for &v in g.vertices() {
        match sigma.partner(v) {
            Some(w) if w < v => {}
            Some(w) => {
                let p = random_vector(&mut rng, group.d);
                coords.insert(w, group.apply(&p));
                coords.insert(v, p);
            }
            None => {
                coords.insert(v, random_vector(&mut rng, group.d));
            }
        }
    }
    GammaFramework::new(Framework::new(g.clone(), coords, group.d)?, sigma.clone(), group)
}

pub(crate) fn sub(a: &[Q], b: &[Q]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn is_zero_vector(a: &[Q]) -> bool {
    a.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_crosspolytope;

    #[test]
    fn point_group_bounds_and_dims() {
        assert!(PointGroup::new(3, 3).is_err());
        assert!(PointGroup::new(0, 0).is_err());
        let g = PointGroup::new(0, 3).unwrap();
        assert_eq!((g.trivial_sym_dim(), g.trivial_ant_dim()), (3, 3));
        let g = PointGroup::new(1, 3).unwrap();
        assert_eq!((g.trivial_sym_dim(), g.trivial_ant_dim()), (2, 4));
    }

    #[test]
    fn antipodal_sample_is_exactly_symmetric() {
        let b2 = gen_crosspolytope(2).unwrap();
        let gf = sample_gamma_generic(&b2.graph(), b2.involution(), PointGroup::new(0, 3).unwrap(), 4).unwrap();
        for (a, b) in b2.involution().pairs() {
            let neg: Vector = gf.framework().position(a).iter().map(|x| -x.clone()).collect();
            assert_eq!(*gf.framework().position(b), neg);
        }
        let again = sample_gamma_generic(&b2.graph(), b2.involution(), PointGroup::new(0, 3).unwrap(), 4).unwrap();
        assert_eq!(gf, again);
    }

    #[test]
    fn empty_pairing_is_plain_sample() {
        let g = Graph::complete(&[VertexId(1), VertexId(2), VertexId(3)]);
        let gf = sample_gamma_generic(&g, &Involution::empty(), PointGroup::new(0, 2).unwrap(), 1).unwrap();
        assert_eq!(gf.framework().coords().len(), 3);
    }

    #[test]
    fn asymmetric_coordinates_rejected() {
        let b2 = gen_crosspolytope(2).unwrap();
        let f = sample_generic(&b2.graph(), 3, 0);
        let err = GammaFramework::new(f, b2.involution().clone(), PointGroup::new(0, 3).unwrap());
        assert!(matches!(err, Err(Error::NotSymmetric(_))));
    }
}
