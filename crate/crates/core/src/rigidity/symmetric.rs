//! Γ-symmetric generic rigidity, Maxwell bounds, block splitting, the affine
//! span formula and the gluing hypotheses.

use std::collections::BTreeSet;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::framework::{sample_gamma_generic, GammaFramework, PointGroup};
use super::linalg::{q_frac, rank, Q};
use super::matrix::{affine_span_dim, framework_span, report_for, rigid_rank, rigidity_matrix, trivial_motions};
use super::matrix::{BlockData, Confidence, RigidityReport};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::simplicial::VertexId;
use crate::symmetric::{Involution, PairedGraph};

pub const DEFAULT_TRIALS: usize = 3;
pub const RESAMPLE_CAP: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MaxwellBound {
    pub bound: i64,
    /// `n ≥ 2d`; the bound is a necessary condition only under this hypothesis.
    pub hypothesis_holds: bool,
}

/// `d n - 2 min{C(t+1,2) + C(d-t,2), C(d+1,2) - C(t+1,2) - C(d-t,2)}`.
pub fn symmetric_maxwell_bound(group: PointGroup, n: usize) -> MaxwellBound {
    let sym = group.trivial_sym_dim() as i64;
    let ant = group.trivial_ant_dim() as i64;
    MaxwellBound { bound: (group.d * n) as i64 - 2 * sym.min(ant), hypothesis_holds: n >= 2 * group.d }
}

/// Whether the pairing is total on `V(G)` and maps edges to edges, i.e. the
/// graph is ℤ₂-symmetric and the symmetric Maxwell bound applies.
pub fn is_z2_symmetric_graph(g: &Graph, sigma: &Involution) -> bool {
    PairedGraph::new(g.clone(), sigma.clone()).is_ok_and(|pg| pg.is_automorphism())
}

fn trial_seed(seed: u64, trial: usize, attempt: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add((trial as u64) << 32).wrapping_add(attempt as u64)
}

fn sample_nondegenerate(
    g: &Graph,
    sigma: &Involution,
    group: PointGroup,
    seed: u64,
    trial: usize,
) -> Result<GammaFramework> {
    let needed = (group.d - 1).min(g.vertex_count().saturating_sub(1));
    for attempt in 0..RESAMPLE_CAP {
        let gf = sample_gamma_generic(g, sigma, group, trial_seed(seed, trial, attempt))?;
        if framework_span(gf.framework()) >= needed {
            return Ok(gf);
        }
    }
    Err(Error::SamplingFailed(RESAMPLE_CAP))
}

/// Samples `trials` symmetric realizations in parallel and returns the report
/// together with a realization of maximal rank.
pub fn gamma_rigidity_with_witness(
    g: &Graph,
    sigma: &Involution,
    group: PointGroup,
    trials: usize,
    seed: u64,
) -> Result<(RigidityReport, GammaFramework)> {
    let trials = trials.max(1);
    let samples: Vec<(RigidityReport, GammaFramework)> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let gf = sample_nondegenerate(g, sigma, group, seed, i)?;
            Ok((report_for(gf.framework())?, gf))
        })
        .collect::<Result<_>>()?;
    let ranks: Vec<usize> = samples.iter().map(|(r, _)| r.rank).collect();
    let best = (0..samples.len()).max_by_key(|&i| (ranks[i], std::cmp::Reverse(i))).expect("at least one trial");
    let (mut report, witness) = samples.into_iter().nth(best).expect("index in range");
    report.trial_ranks = ranks;
    let edges = g.edge_count();
    let n = g.vertex_count();
    let symmetric = !sigma.is_empty() && is_z2_symmetric_graph(g, sigma);
    let maxwell = symmetric_maxwell_bound(group, n);
    if report.rigid {
        report.confidence = Confidence::Witness;
        if n >= group.d && (edges as i64) < rigid_rank(group.d, n) {
            return Err(Error::Invariant(format!("rigid verdict with {edges} edges below d n - C(d+1,2)")));
        }
        if symmetric && maxwell.hypothesis_holds && (edges as i64) < maxwell.bound {
            return Err(Error::Invariant(format!(
                "rigid verdict with {edges} edges below symmetric bound {}",
                maxwell.bound
            )));
        }
    } else if symmetric && maxwell.hypothesis_holds && (edges as i64) < maxwell.bound {
        report.confidence = Confidence::Certified { edges, bound: maxwell.bound, symmetric: true };
    } else if n >= group.d && (edges as i64) < rigid_rank(group.d, n) {
        report.confidence = Confidence::Certified { edges, bound: rigid_rank(group.d, n), symmetric: false };
    } else {
        report.confidence = Confidence::Sampled { trials };
    }
    Ok((report, witness))
}

pub fn is_gamma_rigid(
    g: &Graph,
    sigma: &Involution,
    group: PointGroup,
    trials: usize,
    seed: u64,
) -> Result<RigidityReport> {
    gamma_rigidity_with_witness(g, sigma, group, trials, seed).map(|(r, _)| r)
}

/// Generic (unsymmetric) rigidity in dimension `d` by sampling.
pub fn is_generically_rigid(g: &Graph, d: usize, trials: usize, seed: u64) -> Result<RigidityReport> {
    // Any group works with an empty pairing; it only fixes the dimension.
    let group = PointGroup::new(0, d)?;
    is_gamma_rigid(g, &Involution::empty(), group, trials, seed)
}

/// Ranks of the rigidity matrix on the symmetric and anti-symmetric motion
/// spaces, and the dimensions of the trivial motions in each.
pub fn symmetric_block_split(gf: &GammaFramework) -> Result<BlockData> {
    let f = gf.framework();
    let g = f.graph();
    let sigma = gf.pairing();
    if !is_z2_symmetric_graph(g, sigma) {
        return Err(Error::Precondition("pairing is not a fixed-point-free automorphism of the graph".into()));
    }
    let group = gf.group();
    let d = group.d;
    let index = f.vertex_index();
    let matrix = rigidity_matrix(f);
    let reps = sigma.representatives();
    let restricted = |sign: i64| -> Vec<Vec<Q>> {
        matrix
            .iter()
            .map(|row| {
                let mut out = Vec::with_capacity(reps.len() * d);
                for &u in &reps {
                    let (iu, iw) = (index[&u], index[&sigma.partner(u).expect("total")]);
                    for a in 0..d {
                        let s = sign * group.sign(a);
                        let v = &row[iu * d + a] + Q::from_integer(s.into()) * &row[iw * d + a];
                        out.push(v);
                    }
                }
                out
            })
            .collect()
    };
    let rank_sym = rank(&restricted(1));
    let rank_ant = rank(&restricted(-1));
    let full = rank(&matrix);
    // Projection m ↦ (m ± τm)/2 with (τm)(u) = I·m(u*); the trivial space is τ-invariant.
    let project = |sign: i64| -> Vec<Vec<Q>> {
        let half = q_frac(1, 2);
        trivial_motions(f)
            .iter()
            .map(|m| {
                let mut out = vec![Q::zero(); m.len()];
                for (&v, &iv) in &index {
                    let iw = index[&sigma.partner(v).expect("total")];
                    for a in 0..d {
                        let s = Q::from_integer((sign * group.sign(a)).into());
                        out[iv * d + a] = (&m[iv * d + a] + s * &m[iw * d + a]) * &half;
                    }
                }
                out
            })
            .collect()
    };
    let trivial_sym = rank(&project(1));
    let trivial_ant = rank(&project(-1));
    let (expected_trivial_sym, expected_trivial_ant) = (group.trivial_sym_dim(), group.trivial_ant_dim());
    Ok(BlockData {
        rank_sym,
        rank_ant,
        rank: full,
        trivial_sym,
        trivial_ant,
        expected_trivial_sym,
        expected_trivial_ant,
        consistent: rank_sym + rank_ant == full
            && trivial_sym == expected_trivial_sym
            && trivial_ant == expected_trivial_ant,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpanCheck {
    pub direct: usize,
    /// `min{n, d-t} + min{n-1, t}`, the value for generic `P`.
    pub formula: usize,
}

pub fn affine_span_dim_symmetric(points: &[Vec<Q>], group: PointGroup) -> SpanCheck {
    let images: Vec<Vec<Q>> = points.iter().map(|p| group.apply(p)).collect();
    let all: Vec<&[Q]> = points.iter().chain(&images).map(Vec::as_slice).collect();
    let n = points.len();
    let formula = if n == 0 { 0 } else { n.min(group.d - group.t) + (n - 1).min(group.t) };
    SpanCheck { direct: affine_span_dim(&all), formula }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GluingVerdict {
    /// `|X_{V1} ∩ X_{V2}|`, counted in vertices.
    pub m: usize,
    pub shared: usize,
    pub required: i64,
    /// Γ-rigidity of both pieces implies Γ-rigidity of the union.
    pub implied: bool,
}

fn paired_within(sigma: &Involution, vs: &BTreeSet<VertexId>) -> BTreeSet<VertexId> {
    sigma.induced(vs).domain()
}

pub fn check_gluing(g1: &Graph, g2: &Graph, sigma: &Involution, group: PointGroup) -> GluingVerdict {
    let shared_set: BTreeSet<VertexId> = g1.vertices().intersection(g2.vertices()).copied().collect();
    let x1 = paired_within(sigma, g1.vertices());
    let x2 = paired_within(sigma, g2.vertices());
    let m = x1.intersection(&x2).count();
    let (d, t) = (group.d as i64, group.t as i64);
    let required = if m > 0 {
        let half = m as i64 / 2;
        d + m as i64 - 1 - half.min(d - t) - (half - 1).min(t)
    } else {
        d
    };
    let shared = shared_set.len();
    GluingVerdict { m, shared, required, implied: shared as i64 >= required }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_bricard, gen_crosspolytope};
    use crate::rigidity::linalg::q;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn grp(t: usize, d: usize) -> PointGroup {
        PointGroup::new(t, d).unwrap()
    }

    #[test]
    fn maxwell_table_in_three_space() {
        for n in [6, 8, 10] {
            assert_eq!(symmetric_maxwell_bound(grp(0, 3), n).bound, 3 * n as i64 - 6);
            assert_eq!(symmetric_maxwell_bound(grp(1, 3), n).bound, 3 * n as i64 - 4);
            assert_eq!(symmetric_maxwell_bound(grp(2, 3), n).bound, 3 * n as i64 - 6);
        }
        assert!(!symmetric_maxwell_bound(grp(0, 3), 5).hypothesis_holds);
    }

    #[test]
    fn octahedron_under_each_group() {
        let b2 = gen_crosspolytope(2).unwrap();
        let (g, s) = (b2.graph(), b2.involution().clone());
        let r = is_gamma_rigid(&g, &s, grp(0, 3), 3, 0).unwrap();
        assert!(r.rigid && r.rank == 12);
        let r = is_gamma_rigid(&g, &s, grp(2, 3), 3, 0).unwrap();
        assert!(r.rigid);
        let r = is_gamma_rigid(&g, &s, grp(1, 3), 3, 0).unwrap();
        assert!(!r.rigid);
        assert_eq!(r.confidence, Confidence::Certified { edges: 12, bound: 14, symmetric: true });
        assert_eq!(r.verdict(), "not rigid (certified: Maxwell 12 < 14)");
    }

    #[test]
    fn block_law_on_octahedron() {
        let b2 = gen_crosspolytope(2).unwrap();
        for t in 0..3 {
            let gf = sample_gamma_generic(&b2.graph(), b2.involution(), grp(t, 3), 7).unwrap();
            let b = symmetric_block_split(&gf).unwrap();
            assert!(b.consistent, "t={t}: {b:?}");
        }
        let gf = gen_bricard(1).unwrap();
        let b = symmetric_block_split(&gf).unwrap();
        assert_eq!((b.expected_trivial_sym, b.expected_trivial_ant), (2, 4));
        assert!(b.rank <= 11);
        let gf = sample_gamma_generic(&b2.graph(), b2.involution(), grp(0, 3), 7).unwrap();
        let b = symmetric_block_split(&gf).unwrap();
        assert_eq!((b.expected_trivial_sym, b.expected_trivial_ant, b.rank), (3, 3, 12));
    }

    #[test]
    fn block_split_rejects_non_automorphism() {
        let g = Graph::from_edges([(VertexId(1), VertexId(2)), (VertexId(2), VertexId(3))]).unwrap();
        let s = Involution::of(&[(1, 3)]);
        let gf = sample_gamma_generic(&g, &s, grp(0, 2), 0).unwrap();
        // 1-2 maps to 3-2 which is an edge, but 2 is unpaired.
        assert!(symmetric_block_split(&gf).is_err());
    }

    #[test]
    fn span_formula_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut pts = |n: usize, d: usize| -> Vec<Vec<Q>> {
            (0..n).map(|_| (0..d).map(|_| q(rng.random_range(-1000..1000))).collect()).collect()
        };
        assert_eq!(affine_span_dim_symmetric(&pts(1, 3), grp(0, 3)), SpanCheck { direct: 1, formula: 1 });
        let c = affine_span_dim_symmetric(&pts(2, 3), grp(1, 3));
        assert_eq!((c.direct, c.formula), (3, 3));
        let c = affine_span_dim_symmetric(&pts(4, 4), grp(2, 4));
        assert_eq!((c.direct, c.formula), (4, 4));
        for (n, t, d) in [(1, 1, 3), (3, 2, 5), (2, 0, 4), (5, 3, 4)] {
            let c = affine_span_dim_symmetric(&pts(n, d), grp(t, d));
            assert_eq!(c.direct, c.formula, "n={n} t={t} d={d}");
        }
    }

    #[test]
    fn gluing_thresholds() {
        let v = |ids: &[u32]| ids.iter().map(|&i| VertexId(i)).collect::<Vec<_>>();
        // B2 halves sharing the pairs (1,4) and (2,5).
        let sigma = Involution::of(&[(1, 4), (2, 5), (3, 6)]);
        let g1 = Graph::complete(&v(&[1, 2, 3, 4, 5]));
        let g2 = Graph::complete(&v(&[1, 2, 4, 5, 6]));
        let r = check_gluing(&g1, &g2, &sigma, grp(0, 3));
        assert_eq!((r.m, r.shared, r.required, r.implied), (4, 4, 4, true));
        let h1 = Graph::complete(&v(&[1, 2, 3, 7]));
        let h2 = Graph::complete(&v(&[1, 2, 3, 8]));
        let r = check_gluing(&h1, &h2, &Involution::empty(), grp(0, 3));
        assert_eq!((r.m, r.required, r.implied), (0, 3, true));
        let h2 = Graph::complete(&v(&[1, 2, 8, 9]));
        assert!(!check_gluing(&h1, &h2, &Involution::empty(), grp(0, 3)).implied);
    }

    #[test]
    fn generic_octahedron_is_rigid_in_every_trial() {
        let g = gen_crosspolytope(2).unwrap().graph();
        let r = is_generically_rigid(&g, 3, 3, 0).unwrap();
        assert_eq!(r.trial_ranks, vec![12, 12, 12]);
        assert_eq!(r.confidence, Confidence::Witness);
    }
}
