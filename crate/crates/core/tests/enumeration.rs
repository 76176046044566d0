use sptough::graph::families::{complete_bipartite, cycle};
use sptough::iso::isomorphic;
use sptough::{enum_trees, parse, realize_stream, recognize, serialize, EnumerationConfig,
    Multigraph};

// Per leaf count, from a separate generator that builds every binary
// series/parallel composition and merges graphs by isomorphism with the
// terminal pair fixed up to swap.
const ALL: [usize; 8] = [1, 2, 4, 11, 30, 98, 328, 1193];
const SIMPLE: [usize; 8] = [1, 1, 2, 4, 9, 23, 60, 170];

fn per_leaf_count(config: EnumerationConfig) -> Vec<usize> {
    let mut counts = vec![0; config.max_leaves];
    for t in enum_trees(&config).unwrap() {
        counts[t.leaf_count() - 1] += 1;
    }
    counts
}

#[test]
fn counts_match_isomorphism_recount() {
    assert_eq!(per_leaf_count(EnumerationConfig::new(8)), ALL);
    assert_eq!(per_leaf_count(EnumerationConfig::simple(8)), SIMPLE);
}

#[test]
fn small_graphs_appear_once_per_terminal_class() {
    let config = EnumerationConfig::simple(6);
    let trees = enum_trees(&config).unwrap();
    let graphs: Vec<_> = realize_stream(trees, &config).collect();
    let r2 = parse("P(S(e,e),S(e,e))").unwrap().encode();
    assert_eq!(graphs.iter().filter(|(t, _)| t.encode() == r2).count(), 1);
    let r3 = parse("P(S(e,e),S(e,e),S(e,e))").unwrap().encode();
    assert_eq!(graphs.iter().filter(|(t, _)| t.encode() == r3).count(), 1);

    // as bare graphs both show up once more, with adjacent terminals
    let copies = |g: &Multigraph| -> Vec<String> {
        graphs
            .iter()
            .filter(|(_, lg)| isomorphic(&lg.graph, g))
            .map(|(t, _)| serialize(t))
            .collect()
    };
    assert_eq!(copies(&cycle(4)), ["P(S(e,e),S(e,e))", "P(S(e,e,e),e)"]);
    assert_eq!(
        copies(&complete_bipartite(2, 3)),
        ["P(S(P(S(e,e),S(e,e)),e),e)", "P(S(e,e),S(e,e),S(e,e))"]
    );
}

#[test]
fn emitted_graphs_are_series_parallel() {
    let config = EnumerationConfig::new(7);
    let trees = enum_trees(&config).unwrap();
    for (tree, lg) in realize_stream(trees, &config) {
        assert!(lg.graph.is_connected());
        let back = recognize(&lg.graph, lg.s, lg.t).unwrap().expect("series-parallel");
        assert_eq!(back.encode(), tree.encode());
    }
}
