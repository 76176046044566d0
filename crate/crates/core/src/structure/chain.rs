//! Cycles, pearl chains and necklaces, recognized on the graph itself.

use std::collections::BTreeSet;
use std::fmt;

use crate::graph::{EdgeId, Multigraph, VertexId};
use crate::sptree::SpTree;

/// One component of a pearl chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChainPart {
    Edge,
    /// Two internally disjoint paths between the same joints, with lengths
    /// stored shorter first.
    Pearl(usize, usize),
}

impl fmt::Display for ChainPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainPart::Edge => write!(f, "edge"),
            ChainPart::Pearl(a, b) => write!(f, "pearl({a},{b})"),
        }
    }
}

/// A series connection of edges and pearls, read from one end to the
/// other. `joints[i]` and `joints[i + 1]` are the ends of `parts[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PearlChain {
    pub parts: Vec<ChainPart>,
    pub joints: Vec<VertexId>,
}

impl PearlChain {
    pub fn pearls(&self) -> usize {
        self.parts.iter().filter(|p| matches!(p, ChainPart::Pearl(..))).count()
    }

    /// Every pearl is the 4-cycle `R_2`.
    pub fn is_necklace(&self) -> bool {
        self.parts.iter().all(|p| matches!(p, ChainPart::Edge | ChainPart::Pearl(2, 2)))
    }
}

impl fmt::Display for PearlChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" - "))
    }
}

/// The vertices of a cycle in cyclic order starting from the smallest, or
/// `None` if `g` is not a cycle on at least three vertices.
pub fn cycle_order(g: &Multigraph) -> Option<Vec<VertexId>> {
    if g.vertex_count() < 3 || !g.is_simple() || !g.is_connected() {
        return None;
    }
    if g.vertices().any(|v| g.degree(v) != 2) {
        return None;
    }
    let start = g.vertices().next()?;
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = *g.neighbors(start).iter().next()?;
    while cur != start {
        order.push(cur);
        let next = *g.neighbors(cur).iter().find(|&&x| x != prev)?;
        prev = cur;
        cur = next;
    }
    Some(order)
}

pub fn is_cycle(g: &Multigraph) -> bool {
    cycle_order(g).is_some()
}

fn incident_unused(g: &Multigraph, used: &[bool], v: VertexId) -> Vec<EdgeId> {
    (0..g.edge_count())
        .filter(|&e| !used[e] && g.edge(e).touches(v))
        .collect()
}

/// Walks from `from` along `first`, through vertices of degree two, to the
/// first vertex of another degree. Returns that vertex and the length.
fn arm(g: &Multigraph, used: &mut [bool], from: VertexId, first: EdgeId) -> (VertexId, usize) {
    used[first] = true;
    let mut cur = g.edge(first).other(from);
    let mut len = 1;
    while g.degree(cur) == 2 {
        let next = incident_unused(g, used, cur);
        let Some(&e) = next.first() else { break };
        used[e] = true;
        cur = g.edge(e).other(cur);
        len += 1;
    }
    (cur, len)
}

/// Decomposes `g` as a series connection of pearls and at least two edges
/// with an edge at each end. The walk starts at the smaller end vertex.
pub fn pearl_chain(g: &Multigraph) -> Option<PearlChain> {
    if !g.is_simple() || !g.is_connected() || g.vertex_count() < 3 {
        return None;
    }
    let ends: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) == 1).collect();
    if ends.len() != 2 {
        return None;
    }
    let mut used = vec![false; g.edge_count()];
    let mut chain = PearlChain {
        parts: Vec::new(),
        joints: vec![ends[0]],
    };
    let mut seen = BTreeSet::from([ends[0]]);
    let mut cur = ends[0];
    loop {
        let out = incident_unused(g, &used, cur);
        match out.len() {
            0 => break,
            1 => {
                used[out[0]] = true;
                cur = g.edge(out[0]).other(cur);
                chain.parts.push(ChainPart::Edge);
            }
            2 => {
                let (x, a) = arm(g, &mut used, cur, out[0]);
                let (y, b) = arm(g, &mut used, cur, out[1]);
                if x != y || x == cur || a < 2 || b < 2 {
                    return None;
                }
                cur = x;
                chain.parts.push(ChainPart::Pearl(a.min(b), a.max(b)));
            }
            _ => return None,
        }
        if !seen.insert(cur) {
            return None;
        }
        chain.joints.push(cur);
    }
    let complete = used.iter().all(|&u| u);
    let edge_ends = chain.parts.first() == Some(&ChainPart::Edge)
        && chain.parts.last() == Some(&ChainPart::Edge);
    (complete && edge_ends && chain.parts.len() >= 2 && cur == ends[1]).then_some(chain)
}

pub fn is_pearl_chain(g: &Multigraph) -> bool {
    pearl_chain(g).is_some()
}

pub fn is_necklace(g: &Multigraph) -> bool {
    pearl_chain(g).is_some_and(|c| c.is_necklace())
}

fn path_tree(len: usize) -> SpTree {
    if len == 1 {
        SpTree::leaf()
    } else {
        SpTree::series(vec![SpTree::leaf(); len])
    }
}

/// Canonical tree of a chain of parts.
///
/// # Panics
/// If `parts` is empty or a pearl arm is shorter than two.
pub fn chain_tree(parts: &[ChainPart]) -> SpTree {
    assert!(!parts.is_empty(), "a chain needs at least one part");
    let pieces: Vec<SpTree> = parts
        .iter()
        .map(|p| match *p {
            ChainPart::Edge => SpTree::leaf(),
            ChainPart::Pearl(a, b) => {
                assert!(a >= 2 && b >= 2, "pearl arms have length at least 2");
                SpTree::parallel(vec![path_tree(a), path_tree(b)])
            }
        })
        .collect();
    let tree = if pieces.len() == 1 {
        pieces.into_iter().next().unwrap()
    } else {
        SpTree::series(pieces)
    };
    tree.canonicalize().expect("chain trees are valid")
}

/// `R_2` is the 4-cycle seen as a pearl with two arms of length two.
pub fn r2_tree() -> SpTree {
    chain_tree(&[ChainPart::Pearl(2, 2)])
}

/// Series join of `l` copies of `R_2`.
pub fn bracelet_tree(l: usize) -> SpTree {
    chain_tree(&vec![ChainPart::Pearl(2, 2); l.max(1)])
}

/// Every necklace pattern (edges and `R_2`s, edges at both ends) whose graph
/// has at most `max_vertices` vertices, in order of length and then with
/// edges before pearls.
pub fn necklace_patterns(max_vertices: usize) -> Vec<Vec<ChainPart>> {
    // k parts with p pearls span k + 1 + 2p vertices
    let mut out = Vec::new();
    for k in 2.. {
        if k + 1 > max_vertices {
            break;
        }
        let inner = k - 2;
        for mask in 0u64..(1 << inner) {
            let pearls = mask.count_ones() as usize;
            if k + 1 + 2 * pearls > max_vertices {
                continue;
            }
            let mut parts = vec![ChainPart::Edge];
            for i in (0..inner).rev() {
                parts.push(if mask >> i & 1 == 1 {
                    ChainPart::Pearl(2, 2)
                } else {
                    ChainPart::Edge
                });
            }
            parts.push(ChainPart::Edge);
            out.push(parts);
        }
    }
    out
}
