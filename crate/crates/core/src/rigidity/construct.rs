//! Coning, vertex splitting with explicit realizations, and the contraction
//! inference rules.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::framework::{sub, Framework, GammaFramework, PointGroup, Vector, COORD_BOX};
use super::linalg::{greedy_independent, q, rank, Q};
use super::matrix::{report_for, rigidity_matrix, RigidityReport};
use super::symmetric::gamma_rigidity_with_witness;
use crate::combinatorics::combinations;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::simplicial::VertexId;
use crate::symmetric::{Involution, PairedGraph};

/// Largest number of halvings of the split offset before giving up.
pub const MAX_HALVINGS: u32 = 64;
const DIRECTION_ATTEMPTS: usize = 100;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    pub framework: Framework,
    pub apex: VertexId,
    /// The apex lies in the hyperplane containing the base; the cone is then
    /// never rigid when the base has more than `d` vertices.
    pub apex_on_hyperplane: bool,
}

/// Embeds `f` in `x_{d+1} = 0` and joins a new apex to every vertex.
pub fn cone(f: &Framework, apex: Vector) -> Result<Cone> {
    let d = f.dim();
    let apex_id = f.graph().fresh_vertex();
    if apex.len() != d + 1 {
        return Err(Error::CoordinateLength(apex_id));
    }
    let mut graph = f.graph().clone();
    graph.add_vertex(apex_id);
    for &v in f.graph().vertices() {
        graph.add_edge(apex_id, v)?;
    }
    let mut coords: BTreeMap<VertexId, Vector> = f
        .coords()
        .iter()
        .map(|(&v, p)| {
            let mut p = p.clone();
            p.push(q(0));
            (v, p)
        })
        .collect();
    let apex_on_hyperplane = apex[d] == q(0);
    coords.insert(apex_id, apex);
    Ok(Cone { framework: Framework::new(graph, coords, d + 1)?, apex: apex_id, apex_on_hyperplane })
}

/// Splitting `vertex` into itself and `new_vertex`: edges to `moved` pass to
/// the new vertex, which is also joined to `along` and to `vertex`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexSplit {
    pub vertex: VertexId,
    pub new_vertex: VertexId,
    pub along: Vec<VertexId>,
    pub moved: Vec<VertexId>,
}

impl VertexSplit {
    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        let u = self.vertex;
        let nbrs = g.neighbors(u);
        if g.has_vertex(self.new_vertex) {
            return Err(Error::Precondition(format!("split vertex {} already present", self.new_vertex)));
        }
        for w in self.along.iter().chain(&self.moved) {
            if !nbrs.contains(w) {
                return Err(Error::Precondition(format!("{w} is not a neighbour of {u}")));
            }
        }
        if self.moved.iter().any(|w| self.along.contains(w)) {
            return Err(Error::Precondition("moved and along sets overlap".into()));
        }
        let mut out = g.clone();
        for &w in &self.moved {
            out.remove_edge(u, w);
        }
        for &w in self.along.iter().chain(&self.moved).chain([&u]) {
            out.add_edge(self.new_vertex, w)?;
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realized<F> {
    pub framework: F,
    /// Number of times the offset was halved before the rows became independent.
    pub halvings: u32,
}

fn rows_independent(f: &Framework) -> bool {
    rank(&rigidity_matrix(f)) == f.graph().edge_count()
}

fn difference_space(f: &Framework, split: &VertexSplit) -> Vec<Vector> {
    let p = f.position(split.vertex);
    split.along.iter().map(|&w| sub(f.position(w), p)).collect()
}

fn check_split_hypotheses(f: &Framework, split: &VertexSplit) -> Result<()> {
    let d = f.dim();
    if split.along.len() + 1 > d {
        return Err(Error::Precondition(format!("|C| = {} exceeds d - 1 = {}", split.along.len(), d - 1)));
    }
    let diffs = difference_space(f, split);
    if rank(&diffs) < diffs.len() {
        return Err(Error::Precondition(format!("difference vectors at {} are dependent", split.vertex)));
    }
    Ok(())
}

/// A random integer vector outside each of the given subspaces.
fn avoiding_direction(spaces: &[Vec<Vector>], d: usize, rng: &mut ChaCha8Rng) -> Result<Vector> {
    for _ in 0..DIRECTION_ATTEMPTS {
        let z: Vector =
            (0..d).map(|_| Q::from_integer(BigInt::from(rng.random_range(-COORD_BOX..=COORD_BOX)))).collect();
        let ok = spaces.iter().all(|s| {
            let mut with = s.clone();
            with.push(z.clone());
            rank(&with) == rank(s) + 1
        });
        if ok {
            return Ok(z);
        }
    }
    Err(Error::SamplingFailed(DIRECTION_ATTEMPTS))
}

/// Places each new vertex at `base + ε·direction` for `ε = 1, 1/2, 1/4, …`
/// until the rigidity matrix has independent rows.
fn scale_search(
    graph: Graph,
    coords: &BTreeMap<VertexId, Vector>,
    placed: &[(VertexId, Vector, Vector)],
    d: usize,
) -> Result<Realized<Framework>> {
    let mut eps = q(1);
    let half = Q::new(1.into(), 2.into());
    for halvings in 0..=MAX_HALVINGS {
        let mut c = coords.clone();
        for (v, base, dir) in placed {
            c.insert(*v, base.iter().zip(dir).map(|(b, z)| b + &eps * z).collect());
        }
        let f = Framework::new(graph.clone(), c, d)?;
        if rows_independent(&f) {
            return Ok(Realized { framework: f, halvings });
        }
        eps *= &half;
    }
    Err(Error::NumericalWitnessNotFound(MAX_HALVINGS))
}

/// Whiteley's vertex split with an explicit realization: `q(u') = p(u) + εz`
/// with `z` outside the span of `{p(w) - p(u) : w ∈ C}`.
pub fn split_and_realize(f: &Framework, split: &VertexSplit, seed: u64) -> Result<Realized<Framework>> {
    if !rows_independent(f) {
        return Err(Error::Precondition("rigidity matrix rows are dependent".into()));
    }
    check_split_hypotheses(f, split)?;
    let graph = split.apply(f.graph())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let z = avoiding_direction(&[difference_space(f, split)], f.dim(), &mut rng)?;
    let placed = [(split.new_vertex, f.position(split.vertex).clone(), z)];
    scale_search(graph, f.coords(), &placed, f.dim())
}

/// Symmetric double split: `first` acts on `u`, `second` on `u*`, and the new
/// vertices are paired with `q(v') = p(u*) + I(εz)`.
pub fn split_pair_and_realize(
    gf: &GammaFramework,
    first: &VertexSplit,
    second: &VertexSplit,
    seed: u64,
) -> Result<Realized<GammaFramework>> {
    let f = gf.framework();
    let group = gf.group();
    let sigma = gf.pairing();
    if sigma.partner(first.vertex) != Some(second.vertex) {
        return Err(Error::Precondition(format!("{} and {} are not paired", first.vertex, second.vertex)));
    }
    if first.new_vertex == second.new_vertex {
        return Err(Error::Precondition("split vertices coincide".into()));
    }
    if !rows_independent(f) {
        return Err(Error::Precondition("rigidity matrix rows are dependent".into()));
    }
    check_split_hypotheses(f, first)?;
    check_split_hypotheses(f, second)?;
    let graph = second.apply(&first.apply(f.graph())?)?;
    let s1 = difference_space(f, first);
    let s2 = difference_space(f, second);
    let image = |s: &[Vector]| s.iter().map(|v| group.apply(v)).collect::<Vec<_>>();
    let spaces = [s1.clone(), image(&s2), s2, image(&s1)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let z = avoiding_direction(&spaces, f.dim(), &mut rng)?;
    let placed = [
        (first.new_vertex, f.position(first.vertex).clone(), z.clone()),
        (second.new_vertex, f.position(second.vertex).clone(), group.apply(&z)),
    ];
    let realized = scale_search(graph, f.coords(), &placed, f.dim())?;
    let mut pairs = sigma.pairs();
    pairs.push((first.new_vertex, second.new_vertex));
    let gf = GammaFramework::new(realized.framework, Involution::new(pairs)?, group)?;
    Ok(Realized { framework: gf, halvings: realized.halvings })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ContractionMode {
    /// `u, v` unpaired; only `uv` is contracted.
    Single,
    /// `x, y` paired; `xy` and `x*y*` are contracted together.
    Double,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContractionReport {
    pub mode: ContractionMode,
    pub c_set: Vec<VertexId>,
    pub d_set: Vec<VertexId>,
    pub contracted: RigidityReport,
    /// Rank data of the constructed realization of the full graph.
    pub witness: Option<RigidityReport>,
    pub inferred_rigid: bool,
    pub halvings: Option<u32>,
}

fn paired_count(sigma: &Involution, set: &[VertexId]) -> usize {
    set.iter().filter(|v| sigma.partner(**v).is_some_and(|w| set.contains(&w))).count()
}

/// First `(d-1)`-subset of `N(a) ∩ N(b)` containing at most one pair.
fn witness_set(g: &Graph, sigma: &Involution, a: VertexId, b: VertexId, d: usize) -> Option<Vec<VertexId>> {
    let common: Vec<VertexId> = g.neighbors(a).intersection(&g.neighbors(b)).copied().collect();
    combinations(common.len(), d - 1)
        .into_iter()
        .map(|idx| idx.into_iter().map(|i| common[i]).collect::<Vec<_>>())
        .find(|c| paired_count(sigma, c) <= 2)
}

/// Edges of `G'` at `x` that do not exist at `x` in `G`; they come from `y`.
fn moved_edges(j: &Graph, original: &Graph, x: VertexId) -> Vec<VertexId> {
    j.neighbors(x).into_iter().filter(|&w| !original.has_edge(x, w)).collect()
}

/// Contraction inference: tests Γ-rigidity of `G/xy` (and `/x*y*` when `x, y`
/// are paired) and, if rigid, splits the contracted vertices back with an
/// explicit realization that certifies Γ-rigidity of `G`.
pub fn rigidity_via_contraction(
    g: &Graph,
    sigma: &Involution,
    x: VertexId,
    y: VertexId,
    group: PointGroup,
    trials: usize,
    seed: u64,
) -> Result<ContractionReport> {
    PairedGraph::new(g.clone(), sigma.clone())?;
    let d = group.d;
    let fail = |what: String| Error::Precondition(what);
    if !g.has_edge(x, y) {
        return Err(fail(format!("{x}{y} is not an edge")));
    }
    let mode = match (sigma.partner(x), sigma.partner(y)) {
        (None, None) => ContractionMode::Single,
        (Some(_), Some(_)) => ContractionMode::Double,
        _ => return Err(fail(format!("exactly one of {x}, {y} is paired"))),
    };
    let c_set = witness_set(g, sigma, x, y, d)
        .ok_or_else(|| fail(format!("no {}-subset of N({x}) ∩ N({y}) with at most one pair", d - 1)))?;
    let mut contracted = g.contract_edge(x, y);
    let mut d_set = Vec::new();
    let mut stars = None;
    if mode == ContractionMode::Double {
        let (xs, ys) = (sigma.partner(x).unwrap(), sigma.partner(y).unwrap());
        if !g.has_edge(xs, ys) {
            return Err(fail(format!("{xs}{ys} is not an edge")));
        }
        if g.has_edge(x, ys) || g.has_edge(xs, y) {
            return Err(fail(format!("{x}{ys} or {xs}{y} is an edge")));
        }
        d_set = witness_set(g, sigma, xs, ys, d)
            .ok_or_else(|| fail(format!("no {}-subset of N({xs}) ∩ N({ys}) with at most one pair", d - 1)))?;
        contracted = contracted.contract_edge(xs, ys);
        stars = Some((xs, ys));
    }
    let kept: BTreeSet<VertexId> = contracted.vertices().clone();
    let sub_sigma = sigma.induced(&kept);
    let (report, witness) = gamma_rigidity_with_witness(&contracted, &sub_sigma, group, trials, seed)?;
    let mut out = ContractionReport {
        mode,
        c_set: c_set.clone(),
        d_set: d_set.clone(),
        contracted: report.clone(),
        witness: None,
        inferred_rigid: false,
        halvings: None,
    };
    if !report.rigid {
        return Ok(out);
    }

    // J: a maximal independent edge set of G' containing the rows at x (and x*).
    let f = witness.framework();
    let edges: Vec<(VertexId, VertexId)> = contracted.edges().iter().copied().collect();
    let pos = |a: VertexId, b: VertexId| edges.iter().position(|&e| e == (a.min(b), a.max(b))).expect("edge of G'");
    let mut order: Vec<usize> = c_set.iter().map(|&w| pos(x, w)).collect();
    if let Some((xs, _)) = stars {
        order.extend(d_set.iter().map(|&w| pos(xs, w)));
    }
    let forced = order.len();
    let rest: Vec<usize> = (0..edges.len()).filter(|i| !order.contains(i)).collect();
    order.extend(rest);
    let j = greedy_independent(&rigidity_matrix(f), &order);
    if j.len() < forced || j[..forced] != order[..forced] {
        return Err(fail("rows at the contracted vertex are dependent at the sampled realization".into()));
    }
    let j_graph = Graph::new(kept.iter().copied(), j.iter().map(|&i| edges[i]))?;
    let j_framework = f.with_graph(j_graph.clone())?;
    let first = VertexSplit { vertex: x, new_vertex: y, along: c_set.clone(), moved: moved_edges(&j_graph, g, x) };
    let realized: Framework = match stars {
        None => {
            let r = split_and_realize(&j_framework, &first, seed)?;
            out.halvings = Some(r.halvings);
            r.framework
        }
        Some((xs, ys)) => {
            let second =
                VertexSplit { vertex: xs, new_vertex: ys, along: d_set.clone(), moved: moved_edges(&j_graph, g, xs) };
            let jgf = GammaFramework::new(j_framework, sub_sigma.clone(), group)?;
            let r = split_pair_and_realize(&jgf, &first, &second, seed)?;
            out.halvings = Some(r.halvings);
            r.framework.into_framework()
        }
    };
    if !realized.graph().edges().is_subset(g.edges()) {
        return Err(Error::Invariant("split graph is not a subgraph of G".into()));
    }
    let full = GammaFramework::new(realized.with_graph(g.clone())?, sigma.clone(), group)?;
    let witness_report = report_for(full.framework())?;
    out.inferred_rigid = witness_report.rigid;
    out.witness = Some(witness_report);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_crosspolytope, gen_hexahedron_pair, gen_symmetric_stacked};
    use crate::rigidity::framework::{sample_gamma_generic, sample_generic};
    use crate::rigidity::matrix::is_inf_rigid;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    #[test]
    fn cone_over_triangle() {
        let tri = sample_generic(&Graph::complete(&[v(1), v(2), v(3)]), 2, 0);
        let c = cone(&tri, vec![q(0), q(0), q(1)]).unwrap();
        assert!(!c.apex_on_hyperplane);
        let r = is_inf_rigid(&c.framework).unwrap();
        assert!(r.rigid && r.rank == 6);
        let flat = cone(&tri, vec![q(5), q(7), q(0)]).unwrap();
        assert!(flat.apex_on_hyperplane);
        assert!(!is_inf_rigid(&flat.framework).unwrap().rigid);
        let empty = Framework::new(Graph::default(), BTreeMap::new(), 2).unwrap();
        let c = cone(&empty, vec![q(0), q(0), q(1)]).unwrap();
        assert_eq!(c.framework.graph().vertex_count(), 1);
    }

    #[test]
    fn coning_preserves_rigidity() {
        let oct = gen_crosspolytope(2).unwrap().graph();
        let f = sample_generic(&oct, 3, 1);
        let c = cone(&f, vec![q(3), q(-2), q(5), q(11)]).unwrap();
        assert_eq!(is_inf_rigid(&f).unwrap().rigid, is_inf_rigid(&c.framework).unwrap().rigid);
        let mut minus = oct.clone();
        minus.remove_edge(v(1), v(2));
        let f = sample_generic(&minus, 3, 1);
        let c = cone(&f, vec![q(3), q(-2), q(5), q(11)]).unwrap();
        assert!(!is_inf_rigid(&f).unwrap().rigid);
        assert!(!is_inf_rigid(&c.framework).unwrap().rigid);
    }

    #[test]
    fn split_of_k4_adds_d_to_rank() {
        let k4 = sample_generic(&Graph::complete(&[v(1), v(2), v(3), v(4)]), 3, 0);
        let split = VertexSplit { vertex: v(4), new_vertex: v(5), along: vec![v(1), v(2)], moved: vec![v(3)] };
        let r = split_and_realize(&k4, &split, 0).unwrap();
        let before = rank(&rigidity_matrix(&k4));
        let after = rank(&rigidity_matrix(&r.framework));
        assert_eq!(after, before + 3);
        assert!(is_inf_rigid(&r.framework).unwrap().rigid);
    }

    #[test]
    fn dependent_differences_rejected() {
        let coords: BTreeMap<VertexId, Vector> =
            [(v(1), vec![q(0), q(0), q(0)]), (v(2), vec![q(1), q(0), q(0)]), (v(3), vec![q(2), q(0), q(0)])]
                .into_iter()
                .collect();
        let g = Graph::from_edges([(v(1), v(2)), (v(1), v(3))]).unwrap();
        let f = Framework::new(g, coords, 3).unwrap();
        let split = VertexSplit { vertex: v(1), new_vertex: v(9), along: vec![v(2), v(3)], moved: vec![] };
        assert!(matches!(split_and_realize(&f, &split, 0), Err(Error::Precondition(_))));
    }

    #[test]
    fn symmetric_double_split_on_octahedron() {
        let b2 = gen_crosspolytope(2).unwrap();
        let gf = sample_gamma_generic(&b2.graph(), b2.involution(), PointGroup::new(0, 3).unwrap(), 5).unwrap();
        let first = VertexSplit { vertex: v(1), new_vertex: v(7), along: vec![v(2), v(3)], moved: vec![] };
        let second = VertexSplit { vertex: v(4), new_vertex: v(8), along: vec![v(5), v(6)], moved: vec![] };
        let r = split_pair_and_realize(&gf, &first, &second, 0).unwrap();
        let rep = is_inf_rigid(r.framework.framework()).unwrap();
        assert!(rep.rigid);
        assert_eq!(rep.rank, r.framework.framework().graph().edge_count());
    }

    #[test]
    fn contraction_on_stacked_spheres() {
        let s = gen_symmetric_stacked(2, 1, 0).unwrap();
        let (w, a) = (v(7), *s.graph().neighbors(v(7)).iter().next().unwrap());
        let r =
            rigidity_via_contraction(&s.graph(), s.involution(), a, w, PointGroup::new(0, 3).unwrap(), 3, 0).unwrap();
        assert_eq!(r.mode, ContractionMode::Double);
        assert!(r.contracted.rigid && r.inferred_rigid);
        let s = gen_symmetric_stacked(3, 1, 0).unwrap();
        let w = v(9);
        let a = *s.graph().neighbors(w).iter().next().unwrap();
        let r =
            rigidity_via_contraction(&s.graph(), s.involution(), a, w, PointGroup::new(1, 4).unwrap(), 3, 0).unwrap();
        assert!(r.inferred_rigid);
    }

    #[test]
    fn contraction_hypotheses() {
        let b2 = gen_crosspolytope(2).unwrap();
        // 1 ~ 2 and 1 ~ 5 = 2*, so x y* is an edge.
        let err =
            rigidity_via_contraction(&b2.graph(), b2.involution(), v(1), v(2), PointGroup::new(0, 3).unwrap(), 1, 0);
        assert!(matches!(err, Err(Error::Precondition(_))));
        let hex = gen_hexahedron_pair();
        let r =
            rigidity_via_contraction(&hex.graph(), hex.involution(), v(2), v(3), PointGroup::new(0, 3).unwrap(), 3, 0)
                .unwrap();
        assert!(!r.contracted.rigid && !r.inferred_rigid);
    }
}
