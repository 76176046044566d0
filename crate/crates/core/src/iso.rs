//! Backtracking isomorphism test for small multigraphs.

use crate::graph::{Multigraph, VertexId};

struct Matrix {
    n: usize,
    mult: Vec<u32>,
    label: Vec<(usize, u32, Vec<usize>)>,
}

impl Matrix {
    fn new(g: &Multigraph) -> (Self, Vec<VertexId>) {
        let ids: Vec<VertexId> = g.vertices().collect();
        let n = ids.len();
        let index = |v: VertexId| ids.binary_search(&v).unwrap();
        let mut mult = vec![0u32; n * n];
        for e in g.edges() {
            let (a, b) = (index(e.a), index(e.b));
            mult[a * n + b] += 1;
            if a != b {
                mult[b * n + a] += 1;
            }
        }
        let degree: Vec<usize> = ids.iter().map(|&v| g.degree(v)).collect();
        let label = (0..n)
            .map(|i| {
                let mut nd: Vec<usize> = (0..n)
                    .filter(|&j| j != i && mult[i * n + j] > 0)
                    .map(|j| degree[j])
                    .collect();
                nd.sort_unstable();
                (degree[i], mult[i * n + i], nd)
            })
            .collect();
        (Matrix { n, mult, label }, ids)
    }

    fn at(&self, i: usize, j: usize) -> u32 {
        self.mult[i * self.n + j]
    }
}

/// Plain isomorphism.
pub fn isomorphic(a: &Multigraph, b: &Multigraph) -> bool {
    find(a, b, &[]).is_some()
}

/// Isomorphism mapping `ta.0 -> tb.0` and `ta.1 -> tb.1`, or, when
/// `allow_swap`, the crossed assignment.
pub fn isomorphic_with_terminals(
    a: &Multigraph,
    ta: (VertexId, VertexId),
    b: &Multigraph,
    tb: (VertexId, VertexId),
    allow_swap: bool,
) -> bool {
    find(a, b, &[(ta.0, tb.0), (ta.1, tb.1)]).is_some()
        || (allow_swap && find(a, b, &[(ta.0, tb.1), (ta.1, tb.0)]).is_some())
}

/// Some isomorphism `a -> b` honouring the fixed pairs, as
/// `(vertex of a, vertex of b)`.
pub fn find(
    a: &Multigraph,
    b: &Multigraph,
    fixed: &[(VertexId, VertexId)],
) -> Option<Vec<(VertexId, VertexId)>> {
    if a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
        || a.degree_sequence() != b.degree_sequence()
    {
        return None;
    }
    let (ma, ids_a) = Matrix::new(a);
    let (mb, ids_b) = Matrix::new(b);
    let n = ma.n;
    let mut la: Vec<_> = ma.label.clone();
    let mut lb: Vec<_> = mb.label.clone();
    la.sort();
    lb.sort();
    if la != lb {
        return None;
    }

    let mut pre = Vec::new();
    for &(x, y) in fixed {
        let i = ids_a.binary_search(&x).ok()?;
        let j = ids_b.binary_search(&y).ok()?;
        pre.push((i, j));
    }

    // Visit order: fixed vertices first, then greedily the vertex with the
    // most already-ordered neighbours.
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for &(i, _) in &pre {
        if !placed[i] {
            placed[i] = true;
            order.push(i);
        }
    }
    while order.len() < n {
        let next = (0..n)
            .filter(|&i| !placed[i])
            .max_by_key(|&i| {
                let linked = order.iter().filter(|&&k| ma.at(i, k) > 0).count();
                (linked, ma.label[i].0, std::cmp::Reverse(i))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for &(i, j) in &pre {
        if map[i] != usize::MAX && map[i] != j {
            return None;
        }
        if map[i] == usize::MAX && used[j] {
            return None;
        }
        map[i] = j;
        used[j] = true;
    }
    for &(i, _) in &pre {
        if !consistent(&ma, &mb, &map, i, map[i]) {
            return None;
        }
    }
    if extend(&ma, &mb, &order, 0, &mut map, &mut used) {
        Some((0..n).map(|i| (ids_a[i], ids_b[map[i]])).collect())
    } else {
        None
    }
}

fn consistent(ma: &Matrix, mb: &Matrix, map: &[usize], i: usize, j: usize) -> bool {
    if ma.label[i] != mb.label[j] {
        return false;
    }
    (0..ma.n).all(|k| map[k] == usize::MAX || ma.at(i, k) == mb.at(j, map[k]))
}

fn extend(
    ma: &Matrix,
    mb: &Matrix,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let i = order[depth];
    if map[i] != usize::MAX {
        return extend(ma, mb, order, depth + 1, map, used);
    }
    for j in 0..mb.n {
        if used[j] || !consistent(ma, mb, map, i, j) {
            continue;
        }
        map[i] = j;
        used[j] = true;
        if extend(ma, mb, order, depth + 1, map, used) {
            return true;
        }
        map[i] = usize::MAX;
        used[j] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn relabelled_cycles() {
        let a = cycle(6);
        let b = Multigraph::from_edges([(10, 12), (12, 14), (14, 11), (11, 13), (13, 15), (15, 10)]);
        assert!(isomorphic(&a, &b));
        assert!(!isomorphic(&cycle(6), &Multigraph::from_edges([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])));
    }

    #[test]
    fn multiplicity_and_loops_matter() {
        let a = Multigraph::from_edges([(0, 1), (0, 1), (1, 2)]);
        let b = Multigraph::from_edges([(0, 1), (1, 2), (1, 2)]);
        let c = Multigraph::from_edges([(0, 1), (1, 2), (0, 0)]);
        assert!(isomorphic(&a, &b));
        assert!(!isomorphic(&a, &c));
    }

    #[test]
    fn terminals_are_respected() {
        // C4 with opposite vs adjacent terminals
        let c4 = cycle(4);
        assert!(isomorphic_with_terminals(&c4, (0, 2), &c4, (1, 3), false));
        assert!(!isomorphic_with_terminals(&c4, (0, 2), &c4, (0, 1), true));
        // on the path 0-1-2-3-4, (0,3) maps to (4,1) by reflection but to
        // (1,4) only with the terminals swapped
        let g = path(5);
        assert!(isomorphic_with_terminals(&g, (0, 3), &g, (4, 1), false));
        assert!(!isomorphic_with_terminals(&g, (0, 3), &g, (1, 4), false));
        assert!(isomorphic_with_terminals(&g, (0, 3), &g, (1, 4), true));
    }

    #[test]
    fn k33_is_not_prism() {
        let k33 = complete_bipartite(3, 3);
        let prism = Multigraph::from_edges([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]);
        assert!(!isomorphic(&k33, &prism));
        assert!(isomorphic(&k33, &k33.compacted().0));
    }
}
