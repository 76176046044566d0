use proptest::prelude::*;

use sptough::iso::isomorphic_with_terminals;
use sptough::{parse, serialize, NodeKind, SpTree};

fn tree(max_leaves: u32) -> impl Strategy<Value = SpTree> {
    let leaf = Just(SpTree::leaf());
    leaf.prop_recursive(4, max_leaves, 4, |inner| {
        (any::<bool>(), prop::collection::vec(inner, 2..4)).prop_map(|(series, kids)| {
            let kind = if series {
                NodeKind::Series
            } else {
                NodeKind::Parallel
            };
            SpTree::join(kind, kids)
        })
    })
}

proptest! {
    #[test]
    fn serialize_then_parse_is_identity(t in tree(24)) {
        prop_assert_eq!(parse(&serialize(&t)).unwrap(), t);
    }

    #[test]
    fn whitespace_is_ignored(t in tree(12)) {
        let spaced = serialize(&t).replace(',', " ,\n ").replace('(', "( ");
        prop_assert_eq!(parse(&spaced).unwrap(), t);
    }

    #[test]
    fn canonicalize_is_idempotent(t in tree(24)) {
        let c = t.canonicalize().unwrap();
        prop_assert!(c.is_canonical());
        prop_assert_eq!(c.canonicalize().unwrap(), c.clone());
        prop_assert_eq!(c.encode(), t.encode());
    }

    #[test]
    fn canonical_form_keeps_the_graph(t in tree(10)) {
        let a = t.realize().unwrap();
        let b = t.canonicalize().unwrap().realize().unwrap();
        prop_assert!(isomorphic_with_terminals(&a.graph, (a.s, a.t), &b.graph, (b.s, b.t), false));
    }

    #[test]
    fn encode_ignores_orientation(t in tree(16)) {
        prop_assert_eq!(t.reversed().encode(), t.encode());
    }
}
