//! Exact toughness, canonical series-parallel trees, and recognition of
//! minimally tough series-parallel graphs.
//!
//! The toughness oracle is a brute-force scan over vertex subsets with exact
//! rational arithmetic. The structural classifier decides minimal
//! `t`-toughness for `t >= 1/2` from the sp-tree, and the [`verify`] harness
//! checks the two against each other over exhaustively enumerated graphs.

pub mod enumerate;
pub mod error;
pub mod graph;
pub mod iso;
pub mod parser;
pub mod rational;
pub mod recognize;
pub mod sptree;
pub mod structure;
pub mod toughness;
pub mod verify;

pub use enumerate::{enum_trees, realize_stream, EnumerationConfig, MAX_LEAVES};
pub use error::{Error, Result};
pub use graph::{Edge, EdgeId, Multigraph, VertexId};
pub use parser::{parse, read_edge_list, serialize, to_dot, DotAnnotations};
pub use rational::Rational;
pub use recognize::{recognize, recognize_any};
pub use sptree::{LabeledGraph, NodeId, NodeKind, SpTree};
pub use structure::{classify, ClassificationReport, Evidence, Verdict};
pub use toughness::{
    is_minimally_tough, mediant, tough_sets, toughness, MinimalityVerdict, Oracle, Toughness,
    ToughnessValue,
};
