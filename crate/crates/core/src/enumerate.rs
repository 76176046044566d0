//! Exhaustive generation of canonical sp-trees by leaf count.
//!
//! Oriented canonical trees are built bottom-up: a series node is an ordered
//! sequence of leaves and parallel-rooted trees, a parallel node a multiset
//! of leaves and series-rooted trees. Trees that differ only by swapping the
//! terminals are then merged by [`SpTree::encode`].

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::sptree::{LabeledGraph, NodeKind, SpTree};

/// Largest supported leaf budget.
pub const MAX_LEAVES: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub max_leaves: usize,
    /// Skip trees whose parallel nodes have two or more leaf children, that
    /// is, graphs with parallel edges.
    pub simple_only: bool,
    /// Drop realized graphs with more vertices than this.
    pub max_vertices: Option<usize>,
}

impl EnumerationConfig {
    pub fn new(max_leaves: usize) -> Self {
        EnumerationConfig {
            max_leaves,
            simple_only: false,
            max_vertices: None,
        }
    }

    pub fn simple(max_leaves: usize) -> Self {
        EnumerationConfig {
            simple_only: true,
            ..Self::new(max_leaves)
        }
    }
}

struct Tables {
    simple: bool,
    /// `series[n]` and `parallel[n]`: oriented canonical trees with `n`
    /// leaves and the given root kind.
    series: Vec<Vec<SpTree>>,
    parallel: Vec<Vec<SpTree>>,
}

impl Tables {
    /// Components allowed under a node of `kind` with `n` leaves.
    fn parts(&self, kind: NodeKind, n: usize) -> Vec<SpTree> {
        if n == 1 {
            return vec![SpTree::leaf()];
        }
        match kind {
            NodeKind::Series => self.parallel[n].clone(),
            _ => self.series[n].clone(),
        }
    }

    fn build(&mut self, n: usize) {
        let mut series = Vec::new();
        let mut prefix = Vec::new();
        self.sequences(n, &mut prefix, &mut series);
        let mut parallel = Vec::new();
        let mut chosen = Vec::new();
        self.multisets(n, (1, 0), 0, &mut chosen, &mut parallel);
        self.series.push(series);
        self.parallel.push(parallel);
    }

    fn sequences(&self, remaining: usize, prefix: &mut Vec<SpTree>, out: &mut Vec<SpTree>) {
        if remaining == 0 {
            if prefix.len() >= 2 {
                out.push(SpTree::series(prefix.clone()));
            }
            return;
        }
        let total = prefix.len() + remaining;
        for k in 1..=remaining {
            // a single component of the whole size would not be a join
            if prefix.is_empty() && k == total {
                continue;
            }
            for part in self.parts(NodeKind::Series, k) {
                prefix.push(part);
                self.sequences(remaining - k, prefix, out);
                prefix.pop();
            }
        }
    }

    /// Multisets of components in non-decreasing `(size, index)` order.
    fn multisets(
        &self,
        remaining: usize,
        from: (usize, usize),
        leaves: usize,
        chosen: &mut Vec<SpTree>,
        out: &mut Vec<SpTree>,
    ) {
        if remaining == 0 {
            if chosen.len() >= 2 {
                let tree = SpTree::parallel(chosen.clone());
                out.push(tree.canonicalize().expect("joins have two or more parts"));
            }
            return;
        }
        for k in from.0..=remaining {
            if chosen.is_empty() && k == remaining {
                continue;
            }
            let parts = self.parts(NodeKind::Parallel, k);
            let start = if k == from.0 { from.1 } else { 0 };
            for (i, part) in parts.into_iter().enumerate().skip(start) {
                let leaf = usize::from(k == 1);
                if self.simple && leaves + leaf > 1 {
                    continue;
                }
                chosen.push(part);
                self.multisets(remaining - k, (k, i), leaves + leaf, chosen, out);
                chosen.pop();
            }
        }
    }
}

/// Every canonical tree with at most `max_leaves` leaves, one per
/// [`SpTree::encode`] class, ordered by leaf count and then by code. The
/// representative of each class is the orientation whose oriented code is
/// the class code.
pub fn enum_trees(config: &EnumerationConfig) -> Result<Vec<SpTree>> {
    if config.max_leaves > MAX_LEAVES {
        return Err(Error::Budget {
            requested: config.max_leaves,
            max: MAX_LEAVES,
        });
    }
    let mut tables = Tables {
        simple: config.simple_only,
        series: vec![Vec::new(), Vec::new()],
        parallel: vec![Vec::new(), Vec::new()],
    };
    let mut out: Vec<(usize, String, SpTree)> = Vec::new();
    if config.max_leaves >= 1 {
        out.push((1, "e".to_string(), SpTree::leaf()));
    }
    for n in 2..=config.max_leaves {
        tables.build(n);
        let mut seen = HashSet::new();
        let mut level = Vec::new();
        for tree in tables.series[n].iter().chain(&tables.parallel[n]) {
            let code = tree.encode();
            if tree.oriented_code() == code && seen.insert(code.clone()) {
                level.push((n, code, tree.clone()));
            }
        }
        level.sort_by(|a, b| a.1.cmp(&b.1));
        out.extend(level);
    }
    Ok(out.into_iter().map(|(_, _, t)| t).collect())
}

/// Realizes each tree, dropping graphs above `config.max_vertices`.
pub fn realize_stream<'a>(
    trees: impl IntoIterator<Item = SpTree> + 'a,
    config: &EnumerationConfig,
) -> impl Iterator<Item = (SpTree, LabeledGraph)> + 'a {
    let cap = config.max_vertices;
    trees.into_iter().filter_map(move |tree| {
        let lg = tree.realize().expect("enumerated trees are valid");
        match cap {
            Some(c) if lg.graph.vertex_count() > c => None,
            _ => Some((tree, lg)),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::serialize;

    fn codes(config: EnumerationConfig) -> Vec<String> {
        enum_trees(&config).unwrap().iter().map(serialize).collect()
    }

    #[test]
    fn tiny_budgets() {
        assert_eq!(codes(EnumerationConfig::new(1)), vec!["e"]);
        assert_eq!(codes(EnumerationConfig::simple(2)), vec!["e", "S(e,e)"]);
        assert_eq!(codes(EnumerationConfig::new(2)), vec!["e", "P(e,e)", "S(e,e)"]);
        assert!(codes(EnumerationConfig::new(0)).is_empty());
    }

    #[test]
    fn three_leaves() {
        let all = codes(EnumerationConfig::new(3));
        assert_eq!(
            &all[3..],
            ["P(S(e,e),e)", "P(e,e,e)", "S(P(e,e),e)", "S(e,e,e)"]
        );
        let simple = codes(EnumerationConfig::simple(3));
        assert_eq!(&simple[2..], ["P(S(e,e),e)", "S(e,e,e)"]);
    }

    #[test]
    fn budget_guard() {
        assert_eq!(
            enum_trees(&EnumerationConfig::new(13)),
            Err(Error::Budget {
                requested: 13,
                max: 12
            })
        );
    }

    #[test]
    fn emitted_trees_are_canonical_and_unique() {
        let trees = enum_trees(&EnumerationConfig::new(6)).unwrap();
        let mut seen = HashSet::new();
        for t in &trees {
            assert!(t.is_canonical(), "{t}");
            assert_eq!(&t.canonicalize().unwrap(), t);
            assert!(seen.insert(t.encode()), "duplicate {t}");
        }
    }

    #[test]
    fn vertex_filter() {
        let config = EnumerationConfig {
            max_vertices: Some(3),
            ..EnumerationConfig::simple(4)
        };
        let trees = enum_trees(&config).unwrap();
        let kept: Vec<String> = realize_stream(trees, &config)
            .map(|(t, _)| serialize(&t))
            .collect();
        assert_eq!(kept, vec!["e", "S(e,e)", "P(S(e,e),e)"]);
    }
}
