//! The reduced graph: induced paths of length at least three are shortened
//! to length two until none is left.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexId};

/// An induced path `u, w_1, ..., w_k, v` with `k >= 2` whose interior
/// vertices all have degree two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedPath {
    pub u: VertexId,
    pub interior: Vec<VertexId>,
    pub v: VertexId,
}

impl InducedPath {
    pub fn interior_set(&self) -> Vec<VertexId> {
        let mut s = self.interior.clone();
        s.sort_unstable();
        s
    }
}

fn check(g: &Multigraph) -> Result<()> {
    if !g.is_simple() {
        return Err(Error::domain("reduction is defined for simple graphs"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Every contractible induced path, one per interior vertex set, ordered by
/// the sorted interior set.
pub fn contractible_paths(g: &Multigraph) -> Vec<InducedPath> {
    let mut found: Vec<InducedPath> = Vec::new();
    let mut seen: BTreeSet<Vec<VertexId>> = BTreeSet::new();
    for w1 in g.vertices() {
        let nbrs = g.neighbors(w1);
        if g.degree(w1) != 2 || nbrs.len() != 2 {
            continue;
        }
        for &u in &nbrs {
            let mut interior = vec![w1];
            let (mut prev, mut cur) = (u, w1);
            loop {
                let next = *g.neighbors(cur).iter().find(|&&x| x != prev).unwrap();
                let fresh = next != u && !interior.contains(&next);
                if interior.len() >= 2 && fresh && !g.has_edge_between(u, next) {
                    let path = InducedPath {
                        u,
                        interior: interior.clone(),
                        v: next,
                    };
                    if seen.insert(path.interior_set()) {
                        found.push(path);
                    }
                }
                if fresh && g.degree(next) == 2 {
                    interior.push(next);
                    prev = cur;
                    cur = next;
                } else {
                    break;
                }
            }
        }
    }
    found.sort_by_key(InducedPath::interior_set);
    found
}

/// Replaces the interior of `path` by a single vertex that reuses the
/// smallest interior id.
pub fn contract(g: &Multigraph, path: &InducedPath) -> Multigraph {
    let interior: BTreeSet<VertexId> = path.interior.iter().copied().collect();
    let w = *interior.iter().next().expect("non-empty interior");
    let mut out = g.without_vertices(&interior);
    out.add_vertex(w);
    out.add_edge(path.u, w);
    out.add_edge(w, path.v);
    out
}

pub fn is_reduced(g: &Multigraph) -> bool {
    contractible_paths(g).is_empty()
}

/// `r(G)`, always contracting the path whose sorted interior is
/// lexicographically least.
pub fn reduce(g: &Multigraph) -> Result<Multigraph> {
    check(g)?;
    let mut cur = g.clone();
    while let Some(path) = contractible_paths(&cur).into_iter().next() {
        cur = contract(&cur, &path);
    }
    Ok(cur)
}

fn normalized(g: &Multigraph) -> (Vec<VertexId>, Vec<(VertexId, VertexId)>) {
    let mut edges: Vec<_> = g.edges().iter().map(|e| e.key()).collect();
    edges.sort_unstable();
    (g.vertices().collect(), edges)
}

/// Every distinct fully reduced graph reachable by some contraction order.
pub fn all_reductions(g: &Multigraph) -> Result<Vec<Multigraph>> {
    check(g)?;
    let mut visited = HashSet::new();
    let mut finals = Vec::new();
    let mut final_keys = HashSet::new();
    let mut stack = vec![g.clone()];
    while let Some(cur) = stack.pop() {
        if !visited.insert(normalized(&cur)) {
            continue;
        }
        let paths = contractible_paths(&cur);
        if paths.is_empty() {
            if final_keys.insert(normalized(&cur)) {
                finals.push(cur);
            }
            continue;
        }
        for p in &paths {
            stack.push(contract(&cur, p));
        }
    }
    Ok(finals)
}
