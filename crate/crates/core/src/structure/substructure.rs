//! Substructures of a canonical sp-tree.
//!
//! A substructure is matched like a subtree, except that its root may keep
//! other children of the host node: an occurrence is a host node together
//! with some of its children. Below the root everything must match exactly.
//! Series components are consecutive children of a series node; parallel
//! components are any subset of the children of a parallel node.

use std::collections::BTreeSet;
use std::fmt;

use crate::graph::VertexId;
use crate::sptree::{LabeledGraph, NodeId, NodeKind, SpTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubstructureKind {
    /// Series join of two edges.
    P2,
    /// `P2` in parallel with an edge.
    Q2,
    /// Parallel join of `i >= 2` copies of `P2`.
    R(usize),
    /// Series join of `R_i` and `R_j`, where `R_1` is a single edge. Stored
    /// with `i >= j`; `RR(1, 1)` is reported as `P2`.
    RR(usize, usize),
    /// Series join of `l` copies of `R_2`; `Bracelet(1)` is `R_2`.
    Bracelet(usize),
    /// Parallel join of two paths, each of length at least two.
    Pearl,
    /// The whole tree: a series join of edges and `R_2`s that starts and
    /// ends with an edge.
    Necklace,
}

impl SubstructureKind {
    fn normalized(self) -> Self {
        match self {
            SubstructureKind::RR(i, j) if i < j => SubstructureKind::RR(j, i),
            SubstructureKind::RR(1, 1) => SubstructureKind::P2,
            SubstructureKind::Bracelet(1) => SubstructureKind::R(2),
            other => other,
        }
    }
}

impl fmt::Display for SubstructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubstructureKind::P2 => write!(f, "P2"),
            SubstructureKind::Q2 => write!(f, "Q2"),
            SubstructureKind::R(i) => write!(f, "R{i}"),
            SubstructureKind::RR(i, j) => write!(f, "R{i},{j}"),
            SubstructureKind::Bracelet(l) => write!(f, "B{l}"),
            SubstructureKind::Pearl => write!(f, "pearl"),
            SubstructureKind::Necklace => write!(f, "necklace"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Occurrence {
    pub kind: SubstructureKind,
    /// Host node whose children carry the match.
    pub tree_node: NodeId,
    /// The matched children of `tree_node`, in tree order.
    pub parts: Vec<NodeId>,
    /// Terminals of the matched region in the realized graph, in tree
    /// orientation.
    pub terminals: (VertexId, VertexId),
    /// Remaining vertices of the region, ascending.
    pub middle: Vec<VertexId>,
}

fn is_p2(tree: &SpTree, id: NodeId) -> bool {
    tree.kind(id) == NodeKind::Series
        && tree.children(id).len() == 2
        && tree.children(id).iter().all(|&c| tree.is_leaf(c))
}

/// `R_i` exactly (no extra children); `R_1` is a leaf.
fn exact_r(tree: &SpTree, id: NodeId) -> Option<usize> {
    if tree.is_leaf(id) {
        return Some(1);
    }
    if tree.kind(id) == NodeKind::Parallel && tree.children(id).iter().all(|&c| is_p2(tree, c)) {
        return Some(tree.children(id).len());
    }
    None
}

fn is_path(tree: &SpTree, id: NodeId) -> bool {
    tree.kind(id) == NodeKind::Series && tree.children(id).iter().all(|&c| tree.is_leaf(c))
}

fn combinations(items: &[NodeId], k: usize) -> Vec<Vec<NodeId>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn occurrence(
    tree: &SpTree,
    lg: &LabeledGraph,
    kind: SubstructureKind,
    host: NodeId,
    parts: Vec<NodeId>,
) -> Occurrence {
    let terminals = match tree.kind(host) {
        NodeKind::Series => (
            lg.terminals_of(parts[0]).0,
            lg.terminals_of(*parts.last().unwrap()).1,
        ),
        _ => lg.terminals_of(host),
    };
    let mut vertices = BTreeSet::new();
    for &p in &parts {
        for id in tree.span(p) {
            if let Some(&e) = lg.leaf_to_edge.get(&id) {
                let edge = lg.graph.edge(e);
                vertices.insert(edge.a);
                vertices.insert(edge.b);
            }
        }
    }
    vertices.remove(&terminals.0);
    vertices.remove(&terminals.1);
    Occurrence {
        kind,
        tree_node: host,
        parts,
        terminals,
        middle: vertices.into_iter().collect(),
    }
}

/// Every occurrence of `kind` in a canonical tree, ordered by host node and
/// then by the matched children.
pub fn match_substructures(tree: &SpTree, kind: SubstructureKind) -> Vec<Occurrence> {
    let lg = tree.realize().expect("canonical trees are valid");
    let kind = kind.normalized();
    let mut out = Vec::new();
    for host in tree.node_ids() {
        let children = tree.children(host);
        match (tree.kind(host), kind) {
            (NodeKind::Series, SubstructureKind::P2) => {
                for w in children.windows(2) {
                    if w.iter().all(|&c| tree.is_leaf(c)) {
                        out.push(occurrence(tree, &lg, kind, host, w.to_vec()));
                    }
                }
            }
            (NodeKind::Series, SubstructureKind::RR(i, j)) => {
                for w in children.windows(2) {
                    let pair = (exact_r(tree, w[0]), exact_r(tree, w[1]));
                    if pair == (Some(i), Some(j)) || pair == (Some(j), Some(i)) {
                        out.push(occurrence(tree, &lg, kind, host, w.to_vec()));
                    }
                }
            }
            (NodeKind::Series, SubstructureKind::Bracelet(l)) => {
                for w in children.windows(l) {
                    if w.iter().all(|&c| exact_r(tree, c) == Some(2)) {
                        out.push(occurrence(tree, &lg, kind, host, w.to_vec()));
                    }
                }
            }
            (NodeKind::Series, SubstructureKind::Necklace) if host == tree.root() => {
                let first_last = tree.is_leaf(children[0]) && tree.is_leaf(*children.last().unwrap());
                let parts_ok = children
                    .iter()
                    .all(|&c| matches!(exact_r(tree, c), Some(1) | Some(2)));
                if first_last && parts_ok {
                    out.push(occurrence(tree, &lg, kind, host, children.to_vec()));
                }
            }
            (NodeKind::Parallel, SubstructureKind::Q2) => {
                for &a in children.iter().filter(|&&c| is_p2(tree, c)) {
                    for &b in children.iter().filter(|&&c| tree.is_leaf(c)) {
                        let mut parts = vec![a, b];
                        parts.sort_unstable();
                        out.push(occurrence(tree, &lg, kind, host, parts));
                    }
                }
            }
            (NodeKind::Parallel, SubstructureKind::R(i)) if i >= 2 => {
                let p2s: Vec<NodeId> = children.iter().copied().filter(|&c| is_p2(tree, c)).collect();
                for parts in combinations(&p2s, i) {
                    out.push(occurrence(tree, &lg, kind, host, parts));
                }
            }
            (NodeKind::Parallel, SubstructureKind::Pearl) => {
                let paths: Vec<NodeId> = children.iter().copied().filter(|&c| is_path(tree, c)).collect();
                for parts in combinations(&paths, 2) {
                    out.push(occurrence(tree, &lg, kind, host, parts));
                }
            }
            _ => {}
        }
    }
    out
}

pub fn contains(tree: &SpTree, kind: SubstructureKind) -> bool {
    !match_substructures(tree, kind).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    fn canon(s: &str) -> SpTree {
        parse(s).unwrap().canonicalize().unwrap()
    }

    #[test]
    fn r3_counts() {
        let t = canon("P(S(e,e),S(e,e),S(e,e))");
        assert_eq!(match_substructures(&t, SubstructureKind::P2).len(), 3);
        assert_eq!(match_substructures(&t, SubstructureKind::R(3)).len(), 1);
        assert_eq!(match_substructures(&t, SubstructureKind::R(2)).len(), 3);
        assert!(match_substructures(&t, SubstructureKind::R(4)).is_empty());
        let r3 = &match_substructures(&t, SubstructureKind::R(3))[0];
        assert_eq!(r3.terminals, (0, 1));
        assert_eq!(r3.middle, vec![2, 3, 4]);
    }

    #[test]
    fn bracelet_and_r21_windows() {
        let t = canon("S(e,P(S(e,e),S(e,e)),e)");
        assert_eq!(match_substructures(&t, SubstructureKind::Bracelet(1)).len(), 1);
        let r21 = match_substructures(&t, SubstructureKind::RR(2, 1));
        assert_eq!(r21.len(), 2);
        assert_eq!(match_substructures(&t, SubstructureKind::RR(1, 2)), r21);
        assert!(r21.iter().all(|o| o.kind == SubstructureKind::RR(2, 1) && o.tree_node == 0));
        assert_eq!(match_substructures(&t, SubstructureKind::Necklace).len(), 1);
    }

    #[test]
    fn q2_allows_extra_siblings_at_the_root() {
        let t = canon("P(S(e,e),e,S(e,e))");
        let q2 = match_substructures(&t, SubstructureKind::Q2);
        assert_eq!(q2.len(), 2);
        assert!(q2.iter().all(|o| o.tree_node == 0));
    }

    #[test]
    fn inner_parts_must_match_exactly() {
        // the R2 has an extra edge child, so it is not an R2 inside R2,1
        let t = canon("S(e,P(e,S(e,e),S(e,e)))");
        assert!(match_substructures(&t, SubstructureKind::RR(2, 1)).is_empty());
        assert_eq!(match_substructures(&t, SubstructureKind::R(2)).len(), 1);
        assert_eq!(match_substructures(&t, SubstructureKind::Q2).len(), 2);
    }

    #[test]
    fn p2_is_rr11_and_slides_along_series() {
        let t = canon("S(e,e,e)");
        assert_eq!(match_substructures(&t, SubstructureKind::P2).len(), 2);
        assert_eq!(
            match_substructures(&t, SubstructureKind::RR(1, 1)),
            match_substructures(&t, SubstructureKind::P2)
        );
    }

    #[test]
    fn pearls_and_bracelets() {
        let t = canon("S(e,P(S(e,e,e),S(e,e)),e)");
        assert_eq!(match_substructures(&t, SubstructureKind::Pearl).len(), 1);
        assert!(match_substructures(&t, SubstructureKind::Necklace).is_empty());
        let b = canon("S(P(S(e,e),S(e,e)),P(S(e,e),S(e,e)),P(S(e,e),S(e,e)))");
        assert_eq!(match_substructures(&b, SubstructureKind::Bracelet(3)).len(), 1);
        assert_eq!(match_substructures(&b, SubstructureKind::Bracelet(2)).len(), 2);
        assert_eq!(match_substructures(&b, SubstructureKind::RR(2, 2)).len(), 2);
    }
}
