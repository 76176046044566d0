//! Two-terminal series-parallel recognition by reduction.
//!
//! Each live edge carries the decomposition of the subgraph it stands for,
//! oriented from its first to its second endpoint. Parallel edges are merged
//! into a parallel join and non-terminal vertices of degree two are
//! contracted into a series join until either a single `s`-`t` edge remains
//! or no rule applies.

use crate::error::{Error, Result};
use crate::graph::{check_vertices, Multigraph, VertexId};
use crate::sptree::{NodeKind, SpTree};

#[derive(Debug, Clone)]
enum Frag {
    Leaf,
    Join(NodeKind, Vec<Frag>),
}

impl Frag {
    fn reversed(self) -> Frag {
        match self {
            Frag::Leaf => Frag::Leaf,
            Frag::Join(kind, parts) => {
                let mut parts: Vec<Frag> = parts.into_iter().map(Frag::reversed).collect();
                if kind == NodeKind::Series {
                    parts.reverse();
                }
                Frag::Join(kind, parts)
            }
        }
    }

    fn into_tree(self) -> SpTree {
        match self {
            Frag::Leaf => SpTree::leaf(),
            Frag::Join(kind, parts) => {
                SpTree::join(kind, parts.into_iter().map(Frag::into_tree).collect())
            }
        }
    }
}

#[derive(Debug, Clone)]
struct Live {
    a: VertexId,
    b: VertexId,
    frag: Frag,
}

impl Live {
    fn oriented(self, from: VertexId) -> Frag {
        if self.a == from {
            self.frag
        } else {
            self.frag.reversed()
        }
    }

    fn key(&self) -> (VertexId, VertexId) {
        (self.a.min(self.b), self.a.max(self.b))
    }
}

/// Canonical tree of `g` with source `s` and sink `t`, or `None` when `g`
/// is not series-parallel between them.
pub fn recognize(g: &Multigraph, s: VertexId, t: VertexId) -> Result<Option<SpTree>> {
    check_vertices(g, &[s, t])?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if s == t || g.has_loops() || g.edge_count() == 0 {
        return Ok(None);
    }
    let mut live: Vec<Live> = g
        .edges()
        .iter()
        .map(|e| Live {
            a: e.a,
            b: e.b,
            frag: Frag::Leaf,
        })
        .collect();

    loop {
        if let Some((i, j)) = parallel_pair(&live) {
            let second = live.swap_remove(j);
            let first = &mut live[i];
            let from = first.a;
            let merged = Frag::Join(
                NodeKind::Parallel,
                vec![std::mem::replace(&mut first.frag, Frag::Leaf), second.oriented(from)],
            );
            first.frag = merged;
            continue;
        }
        if let Some(v) = contractible(g, &live, s, t) {
            let mut incident: Vec<usize> = (0..live.len())
                .filter(|&i| live[i].a == v || live[i].b == v)
                .collect();
            incident.sort_unstable();
            let second = live.swap_remove(incident[1]);
            let first = live.swap_remove(incident[0]);
            let u = if first.a == v { first.b } else { first.a };
            let w = if second.a == v { second.b } else { second.a };
            let left = first.oriented(u);
            let right = second.oriented(v);
            live.push(Live {
                a: u,
                b: w,
                frag: Frag::Join(NodeKind::Series, vec![left, right]),
            });
            continue;
        }
        break;
    }

    if live.len() == 1 && live[0].key() == (s.min(t), s.max(t)) {
        let only = live.pop().unwrap();
        let tree = only.oriented(s).into_tree();
        return Ok(Some(tree.canonicalize()?));
    }
    Ok(None)
}

fn parallel_pair(live: &[Live]) -> Option<(usize, usize)> {
    for i in 0..live.len() {
        for j in i + 1..live.len() {
            if live[i].key() == live[j].key() {
                return Some((i, j));
            }
        }
    }
    None
}

fn contractible(g: &Multigraph, live: &[Live], s: VertexId, t: VertexId) -> Option<VertexId> {
    g.vertices().find(|&v| {
        v != s && v != t && live.iter().filter(|e| e.a == v || e.b == v).count() == 2
    })
}

/// Tries terminal pairs `(s, t)` with `s < t` in lexicographic order and
/// returns the first that works.
pub fn recognize_any(g: &Multigraph) -> Result<Option<(VertexId, VertexId, SpTree)>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let vs: Vec<VertexId> = g.vertices().collect();
    for (i, &s) in vs.iter().enumerate() {
        for &t in &vs[i + 1..] {
            if let Some(tree) = recognize(g, s, t)? {
                return Ok(Some((s, t, tree)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::iso::isomorphic_with_terminals;
    use crate::parser::parse;

    #[test]
    fn single_edge_is_a_leaf() {
        let g = Multigraph::from_edges([(0, 1)]);
        assert_eq!(recognize(&g, 0, 1).unwrap(), Some(SpTree::leaf()));
    }

    #[test]
    fn four_cycle_between_opposite_vertices() {
        let tree = recognize(&cycle(4), 0, 2).unwrap().unwrap();
        assert_eq!(tree, parse("P(S(e,e),S(e,e))").unwrap());
        let adjacent = recognize(&cycle(4), 0, 1).unwrap().unwrap();
        assert_eq!(adjacent.encode(), parse("P(e,S(e,e,e))").unwrap().encode());
    }

    #[test]
    fn orientation_is_kept() {
        // triangle hanging off the sink side
        let g = Multigraph::from_edges([(0, 2), (2, 3), (3, 1), (2, 1)]);
        let tree = recognize(&g, 0, 1).unwrap().unwrap();
        assert_eq!(tree.oriented_code(), "S(e,P(S(e,e),e))");
        let back = recognize(&g, 1, 0).unwrap().unwrap();
        assert_eq!(back.oriented_code(), "S(P(S(e,e),e),e)");
    }

    #[test]
    fn k4_is_rejected_for_every_pair() {
        let k4 = complete(4);
        for s in 0..4 {
            for t in 0..4 {
                assert_eq!(recognize(&k4, s, t).unwrap(), None);
            }
        }
        assert_eq!(recognize_any(&k4).unwrap().map(|x| x.2), None);
    }

    #[test]
    fn errors_and_rejections() {
        let split = Multigraph::from_edges([(0, 1), (2, 3)]);
        assert_eq!(recognize(&split, 0, 1), Err(Error::Disconnected));
        assert_eq!(recognize(&path(3), 0, 7), Err(Error::UnknownVertex(7)));
        // pendant vertex that is not a terminal
        assert_eq!(recognize(&path(3), 0, 1).unwrap(), None);
        assert_eq!(recognize(&Multigraph::from_edges([(0, 1), (1, 1)]), 0, 1).unwrap(), None);
    }

    #[test]
    fn parallel_edges_merge() {
        let g = Multigraph::from_edges([(0, 1), (1, 0), (1, 2)]);
        let tree = recognize(&g, 0, 2).unwrap().unwrap();
        assert_eq!(tree, parse("S(P(e,e),e)").unwrap());
    }

    #[test]
    fn realize_recognize_round_trip() {
        for text in [
            "S(e,P(e,S(e,e)),e)",
            "P(S(e,P(e,S(e,e))),S(P(e,S(e,e)),e))",
            "P(S(e,e,e),S(e,P(S(e,e),S(e,e)),e),e)",
        ] {
            let tree = parse(text).unwrap().canonicalize().unwrap();
            let lg = tree.realize().unwrap();
            let back = recognize(&lg.graph, lg.s, lg.t).unwrap().unwrap();
            assert_eq!(back, tree, "{text}");
            let again = back.realize().unwrap();
            assert!(isomorphic_with_terminals(
                &lg.graph,
                (lg.s, lg.t),
                &again.graph,
                (again.s, again.t),
                false
            ));
        }
    }
}
