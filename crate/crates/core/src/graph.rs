//! Undirected multigraphs with explicit vertex ids.
//!
//! Edge ids are always dense (`0..m`) and equal to the position of the edge
//! in [`Multigraph::edges`]. Parallel edges and loops are kept as distinct
//! entries so that the multigraph lemma stays observable.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

pub type VertexId = u32;
pub type EdgeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub a: VertexId,
    pub b: VertexId,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.a == self.b
    }

    /// Endpoints with the smaller id first.
    pub fn key(&self) -> (VertexId, VertexId) {
        (self.a.min(self.b), self.a.max(self.b))
    }

    pub fn other(&self, v: VertexId) -> VertexId {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }

    pub fn touches(&self, v: VertexId) -> bool {
        self.a == v || self.b == v
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertices: BTreeSet<VertexId>,
    edges: Vec<Edge>,
}

impl Multigraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on vertices `0..n` with no edges.
    pub fn with_vertices(n: usize) -> Self {
        Multigraph {
            vertices: (0..n as VertexId).collect(),
            edges: Vec::new(),
        }
    }

    /// Builds a graph from an edge list; endpoints become vertices.
    pub fn from_edges(edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Self {
        let mut g = Multigraph::new();
        for (a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn add_vertex(&mut self, v: VertexId) {
        self.vertices.insert(v);
    }

    /// Adds an edge (inserting missing endpoints) and returns its id.
    pub fn add_edge(&mut self, a: VertexId, b: VertexId) -> EdgeId {
        self.vertices.insert(a);
        self.vertices.insert(b);
        self.edges.push(Edge { a, b });
        self.edges.len() - 1
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    pub fn vertex_set(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Edge {
        self.edges[id]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Number of edge ends at `v`; a loop counts twice.
    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .iter()
            .map(|e| (e.a == v) as usize + (e.b == v) as usize)
            .sum()
    }

    /// Distinct neighbours of `v`, excluding `v` itself.
    pub fn neighbors(&self, v: VertexId) -> BTreeSet<VertexId> {
        self.edges
            .iter()
            .filter(|e| e.touches(v) && !e.is_loop())
            .map(|e| e.other(v))
            .collect()
    }

    pub fn has_edge_between(&self, a: VertexId, b: VertexId) -> bool {
        self.edges
            .iter()
            .any(|e| (e.a == a && e.b == b) || (e.a == b && e.b == a))
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    pub fn first_loop(&self) -> Option<EdgeId> {
        self.edges.iter().position(Edge::is_loop)
    }

    /// First pair of distinct edges with the same endpoint set.
    pub fn first_parallel_pair(&self) -> Option<(EdgeId, EdgeId)> {
        let mut seen: BTreeMap<(VertexId, VertexId), EdgeId> = BTreeMap::new();
        for (id, e) in self.edges.iter().enumerate() {
            if e.is_loop() {
                continue;
            }
            if let Some(&first) = seen.get(&e.key()) {
                return Some((first, id));
            }
            seen.insert(e.key(), id);
        }
        None
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        !self.has_loops() && self.first_parallel_pair().is_none()
    }

    /// Every pair of distinct vertices adjacent (loops and multiplicity ignored).
    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        let pairs: BTreeSet<_> = self
            .edges
            .iter()
            .filter(|e| !e.is_loop())
            .map(Edge::key)
            .collect();
        pairs.len() == n * n.saturating_sub(1) / 2
    }

    /// Connected components of the graph induced on the vertices not in
    /// `removed`.
    pub fn components_without(&self, removed: &BTreeSet<VertexId>) -> Vec<BTreeSet<VertexId>> {
        let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for e in &self.edges {
            if removed.contains(&e.a) || removed.contains(&e.b) || e.is_loop() {
                continue;
            }
            adj.entry(e.a).or_default().push(e.b);
            adj.entry(e.b).or_default().push(e.a);
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for v in self.vertices() {
            if removed.contains(&v) || seen.contains(&v) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut stack = vec![v];
            seen.insert(v);
            while let Some(x) = stack.pop() {
                comp.insert(x);
                for &y in adj.get(&x).map(Vec::as_slice).unwrap_or(&[]) {
                    if seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components_without(&BTreeSet::new()).len() <= 1
    }

    /// Copy of the graph with edge `id` deleted; remaining edge ids shift down
    /// to stay dense. The vertex set is unchanged.
    pub fn without_edge(&self, id: EdgeId) -> Multigraph {
        let mut g = self.clone();
        g.edges.remove(id);
        g
    }

    /// Copy of the graph with the given vertices and their incident edges
    /// deleted.
    pub fn without_vertices(&self, removed: &BTreeSet<VertexId>) -> Multigraph {
        Multigraph {
            vertices: self.vertices.difference(removed).copied().collect(),
            edges: self
                .edges
                .iter()
                .filter(|e| !removed.contains(&e.a) && !removed.contains(&e.b))
                .copied()
                .collect(),
        }
    }

    /// Vertices whose removal increases the number of components.
    pub fn cut_vertices(&self) -> Vec<VertexId> {
        let base = self.components_without(&BTreeSet::new()).len();
        self.vertices()
            .filter(|&v| self.components_without(&BTreeSet::from([v])).len() > base)
            .collect()
    }

    /// Edges whose deletion increases the number of components.
    pub fn bridges(&self) -> Vec<EdgeId> {
        let base = self.components_without(&BTreeSet::new()).len();
        (0..self.edge_count())
            .filter(|&id| {
                !self.edges[id].is_loop()
                    && self.without_edge(id).components_without(&BTreeSet::new()).len() > base
            })
            .collect()
    }

    /// Degree multiset, ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Relabels vertices to `0..n` in ascending id order.
    pub fn compacted(&self) -> (Multigraph, BTreeMap<VertexId, VertexId>) {
        let map: BTreeMap<VertexId, VertexId> = self
            .vertices()
            .enumerate()
            .map(|(i, v)| (v, i as VertexId))
            .collect();
        let g = Multigraph {
            vertices: map.values().copied().collect(),
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    a: map[&e.a],
                    b: map[&e.b],
                })
                .collect(),
        };
        (g, map)
    }
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let isolated: Vec<_> = self.vertices().filter(|&v| self.degree(v) == 0).collect();
        for v in isolated {
            writeln!(f, "# isolated {v}")?;
        }
        for e in &self.edges {
            writeln!(f, "{} {}", e.a, e.b)?;
        }
        Ok(())
    }
}

pub(crate) fn check_vertices<'a>(
    g: &Multigraph,
    vs: impl IntoIterator<Item = &'a VertexId>,
) -> Result<()> {
    for &v in vs {
        if !g.contains_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
    }
    Ok(())
}

/// Named graphs used throughout the tests and the CLI.
pub mod families {
    use super::{Multigraph, VertexId};

    pub fn path(vertices: usize) -> Multigraph {
        let mut g = Multigraph::with_vertices(vertices);
        for i in 1..vertices as VertexId {
            g.add_edge(i - 1, i);
        }
        g
    }

    pub fn cycle(n: usize) -> Multigraph {
        let mut g = path(n);
        g.add_edge(n as VertexId - 1, 0);
        g
    }

    pub fn complete(n: usize) -> Multigraph {
        let mut g = Multigraph::with_vertices(n);
        for i in 0..n as VertexId {
            for j in i + 1..n as VertexId {
                g.add_edge(i, j);
            }
        }
        g
    }

    /// `K_{a,b}` with the `a`-side on `0..a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Multigraph {
        let mut g = Multigraph::with_vertices(a + b);
        for i in 0..a as VertexId {
            for j in 0..b as VertexId {
                g.add_edge(i, a as VertexId + j);
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    #[test]
    fn parallel_edges_and_loops_are_kept() {
        let g = Multigraph::from_edges([(0, 1), (0, 1), (1, 1)]);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.first_parallel_pair(), Some((0, 1)));
        assert_eq!(g.first_loop(), Some(2));
        assert!(!g.is_simple());
        assert_eq!(g.degree(1), 4);
    }

    #[test]
    fn completeness_ignores_multiplicity() {
        assert!(complete(4).is_complete());
        let mut k3 = complete(3);
        k3.add_edge(0, 1);
        k3.add_edge(2, 2);
        assert!(k3.is_complete());
        assert!(!cycle(4).is_complete());
        assert!(Multigraph::with_vertices(1).is_complete());
    }

    #[test]
    fn cut_structure() {
        let p = path(4);
        assert_eq!(p.cut_vertices(), vec![1, 2]);
        assert_eq!(p.bridges(), vec![0, 1, 2]);
        assert!(cycle(5).cut_vertices().is_empty());
        assert!(cycle(5).bridges().is_empty());
    }

    #[test]
    fn removal_keeps_ids_dense() {
        let g = cycle(4).without_edge(1);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge(1), Edge { a: 2, b: 3 });
    }
}
