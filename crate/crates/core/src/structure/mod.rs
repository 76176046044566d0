//! Structural machinery for minimally tough series-parallel graphs.

pub mod chain;
pub mod classify;
pub mod edges;
pub mod reduce;
pub mod substructure;

pub use chain::{
    bracelet_tree, chain_tree, cycle_order, is_cycle, is_necklace, is_pearl_chain,
    necklace_patterns, pearl_chain, r2_tree, ChainPart, PearlChain,
};
pub use classify::{
    classify, classify_between, classify_tree, classify_with, ClassificationReport, Evidence, Verdict, FORBIDDEN,
};
pub use edges::{has_inner_grandparent, jump_edges, leap_edges};
pub use reduce::{all_reductions, contract, contractible_paths, is_reduced, reduce, InducedPath};
pub use substructure::{contains, match_substructures, Occurrence, SubstructureKind};
