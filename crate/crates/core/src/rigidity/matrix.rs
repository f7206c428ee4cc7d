//! Rigidity matrices, trivial motions and the infinitesimal rigidity test.

use num_traits::Zero;
use serde::Serialize;

use super::framework::{is_zero_vector, sub, Framework};
use super::linalg::{rank, Q};
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::graph::Edge;

/// Rows follow the canonical edge order; vertex `i` (in sorted order) owns
/// columns `i*d .. i*d + d`.
pub fn rigidity_matrix(f: &Framework) -> Vec<Vec<Q>> {
    let d = f.dim();
    let index = f.vertex_index();
    let cols = d * index.len();
    f.graph()
        .edges()
        .iter()
        .map(|&(a, b)| {
            let mut row = vec![Q::zero(); cols];
            let diff = sub(f.position(a), f.position(b));
            let (ia, ib) = (index[&a], index[&b]);
            for c in 0..d {
                row[ia * d + c] = diff[c].clone();
                row[ib * d + c] = -diff[c].clone();
            }
            row
        })
        .collect()
}

/// Edges whose endpoints coincide; their rows are zero.
pub fn degenerate_edges(f: &Framework) -> Vec<Edge> {
    f.graph().edges().iter().copied().filter(|&(a, b)| f.position(a) == f.position(b)).collect()
}

/// Translations followed by the rotation generators `e_a ∧ e_b`, evaluated at `p`.
pub fn trivial_motions(f: &Framework) -> Vec<Vec<Q>> {
    let d = f.dim();
    let n = f.graph().vertex_count();
    let mut out = Vec::with_capacity(binomial(d + 1, 2));
    for a in 0..d {
        let mut m = vec![Q::zero(); d * n];
        for i in 0..n {
            m[i * d + a] = Q::from_integer(1.into());
        }
        out.push(m);
    }
    for a in 0..d {
        for b in a + 1..d {
            let mut m = vec![Q::zero(); d * n];
            for (i, p) in f.coords().values().enumerate() {
                m[i * d + a] = p[b].clone();
                m[i * d + b] = -p[a].clone();
            }
            out.push(m);
        }
    }
    out
}

pub fn trivial_dim(f: &Framework) -> usize {
    rank(&trivial_motions(f))
}

/// Whether `motion` satisfies `(p(i)-p(j))·(m(i)-m(j)) = 0` on every edge.
pub fn is_infinitesimal_motion(f: &Framework, motion: &[Q]) -> bool {
    rigidity_matrix(f).iter().all(|row| row.iter().zip(motion).fold(Q::zero(), |acc, (x, y)| acc + x * y).is_zero())
}

pub fn affine_span_dim(points: &[&[Q]]) -> usize {
    let Some(first) = points.first() else { return 0 };
    let diffs: Vec<Vec<Q>> = points[1..].iter().map(|p| sub(p, first)).filter(|v| !is_zero_vector(v)).collect();
    rank(&diffs)
}

pub fn framework_span(f: &Framework) -> usize {
    let pts: Vec<&[Q]> = f.coords().values().map(Vec::as_slice).collect();
    affine_span_dim(&pts)
}

/// `d n - C(d+1, 2)`, the rank of a rigid framework with full span.
pub fn rigid_rank(d: usize, n: usize) -> i64 {
    (d * n) as i64 - binomial(d + 1, 2) as i64
}

/// How a verdict was reached.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Confidence {
    /// Rank of one given framework.
    Exact,
    /// A sampled realization attained the rigid rank.
    Witness,
    /// The edge count is below the applicable Maxwell bound.
    Certified { edges: usize, bound: i64, symmetric: bool },
    /// Every sample was rank deficient; flexibility is probable, not proved.
    Sampled { trials: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockData {
    pub rank_sym: usize,
    pub rank_ant: usize,
    pub rank: usize,
    pub trivial_sym: usize,
    pub trivial_ant: usize,
    pub expected_trivial_sym: usize,
    pub expected_trivial_ant: usize,
    /// `rank_sym + rank_ant = rank` and both trivial dimensions match the formulas.
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RigidityReport {
    pub d: usize,
    pub vertices: usize,
    pub rank: usize,
    pub rows: usize,
    pub columns: usize,
    pub target: i64,
    pub dof: i64,
    pub trivial_dim: usize,
    pub rigid: bool,
    pub trial_ranks: Vec<usize>,
    pub confidence: Confidence,
    pub degenerate_edges: Vec<Edge>,
    pub block: Option<BlockData>,
}

impl RigidityReport {
    pub fn verdict(&self) -> String {
        match &self.confidence {
            _ if self.rigid => format!("rigid (rank {})", self.rank),
            Confidence::Certified { edges, bound, .. } => {
                format!("not rigid (certified: Maxwell {edges} < {bound})")
            }
            Confidence::Sampled { trials } => {
                format!("not rigid (sampled: rank {} < {} in {trials} trials)", self.rank, self.target)
            }
            _ => format!("not rigid (rank {} < {})", self.rank, self.target),
        }
    }
}

pub(crate) fn report_for(f: &Framework) -> Result<RigidityReport> {
    let d = f.dim();
    let n = f.graph().vertex_count();
    let span = framework_span(f);
    let needed = d.saturating_sub(1).min(n.saturating_sub(1));
    if span < needed {
        return Err(Error::DegenerateSpan { span, needed: d.saturating_sub(1) });
    }
    let r = rank(&rigidity_matrix(f));
    // Frameworks on fewer than d vertices are rigid when complete: the
    // target is the rank of the complete graph on those points.
    let target = if n >= d { rigid_rank(d, n) } else { binomial(n, 2) as i64 };
    Ok(RigidityReport {
        d,
        vertices: n,
        rank: r,
        rows: f.graph().edge_count(),
        columns: d * n,
        target,
        dof: target - r as i64,
        trivial_dim: trivial_dim(f),
        rigid: r as i64 == target,
        trial_ranks: vec![r],
        confidence: Confidence::Exact,
        degenerate_edges: degenerate_edges(f),
        block: None,
    })
}

/// Infinitesimal rigidity of one framework.
pub fn is_inf_rigid(f: &Framework) -> Result<RigidityReport> {
    report_for(f)
}
