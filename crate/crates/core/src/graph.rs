//! Simple undirected graphs on [`VertexId`]s.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::simplicial::{Face, VertexId};

pub type Edge = (VertexId, VertexId);

fn ordered(a: VertexId, b: VertexId) -> Edge {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeSet<Edge>,
}

impl Graph {
    /// Edges are normalised to `(min, max)`; loops and dangling endpoints are errors.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = Edge>,
    {
        let vertices: BTreeSet<VertexId> = vertices.into_iter().collect();
        let mut es = BTreeSet::new();
        for (a, b) in edges {
            if a == b || !vertices.contains(&a) || !vertices.contains(&b) {
                return Err(Error::BadEdge(a, b));
            }
            es.insert(ordered(a, b));
        }
        Ok(Graph { vertices, edges: es })
    }

    /// Graph whose vertex set is the set of edge endpoints.
    pub fn from_edges<E: IntoIterator<Item = Edge>>(edges: E) -> Result<Self> {
        let edges: Vec<Edge> = edges.into_iter().collect();
        let vs: BTreeSet<VertexId> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        Graph::new(vs, edges)
    }

    pub fn complete(vertices: &[VertexId]) -> Self {
        let mut edges = BTreeSet::new();
        for (i, &a) in vertices.iter().enumerate() {
            for &b in &vertices[i + 1..] {
                edges.insert(ordered(a, b));
            }
        }
        Graph { vertices: vertices.iter().copied().collect(), edges }
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        a != b && self.edges.contains(&ordered(a, b))
    }

    pub fn adjacency(&self) -> BTreeMap<VertexId, BTreeSet<VertexId>> {
        let mut adj: BTreeMap<VertexId, BTreeSet<VertexId>> =
            self.vertices.iter().map(|&v| (v, BTreeSet::new())).collect();
        for &(a, b) in &self.edges {
            adj.get_mut(&a).unwrap().insert(b);
            adj.get_mut(&b).unwrap().insert(a);
        }
        adj
    }

    pub fn neighbors(&self, v: VertexId) -> BTreeSet<VertexId> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Every pair of vertices of `face` is an edge.
    pub fn is_clique(&self, face: &Face) -> bool {
        let vs = face.vertices();
        (0..vs.len()).all(|i| (i + 1..vs.len()).all(|j| self.has_edge(vs[i], vs[j])))
    }

    /// Connected in the usual sense; the empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn components(&self) -> Vec<BTreeSet<VertexId>> {
        let adj = self.adjacency();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &self.vertices {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = BTreeSet::from([start]);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &adj[&v] {
                    if seen.insert(w) {
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn remove_vertices(&self, removed: &BTreeSet<VertexId>) -> Graph {
        Graph {
            vertices: self.vertices.difference(removed).copied().collect(),
            edges: self.edges.iter().filter(|(a, b)| !removed.contains(a) && !removed.contains(b)).copied().collect(),
        }
    }

    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> Graph {
        Graph {
            vertices: self.vertices.intersection(keep).copied().collect(),
            edges: self.edges.iter().filter(|(a, b)| keep.contains(a) && keep.contains(b)).copied().collect(),
        }
    }

    /// Identifies `v` with `u`, dropping the edge `uv` and merging parallel edges.
    pub fn contract_edge(&self, u: VertexId, v: VertexId) -> Graph {
        let rename = |w: VertexId| if w == v { u } else { w };
        let vertices = self.vertices.iter().map(|&w| rename(w)).collect();
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| (rename(a), rename(b)))
            .filter(|(a, b)| a != b)
            .map(|(a, b)| ordered(a, b))
            .collect();
        Graph { vertices, edges }
    }

    pub fn add_vertex(&mut self, v: VertexId) {
        self.vertices.insert(v);
    }

    pub fn add_edge(&mut self, a: VertexId, b: VertexId) -> Result<()> {
        if a == b {
            return Err(Error::BadEdge(a, b));
        }
        self.vertices.insert(a);
        self.vertices.insert(b);
        self.edges.insert(ordered(a, b));
        Ok(())
    }

    pub fn remove_edge(&mut self, a: VertexId, b: VertexId) -> bool {
        self.edges.remove(&ordered(a, b))
    }

    pub fn union(&self, other: &Graph) -> Graph {
        Graph {
            vertices: self.vertices.union(&other.vertices).copied().collect(),
            edges: self.edges.union(&other.edges).copied().collect(),
        }
    }

    /// A vertex id larger than every current vertex.
    pub fn fresh_vertex(&self) -> VertexId {
        VertexId(self.vertices.iter().next_back().map_or(0, |v| v.0 + 1))
    }
}
