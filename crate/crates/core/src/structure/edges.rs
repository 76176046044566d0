//! Leap-edges and jump-edges: leaves whose parent is a parallel join.

use crate::error::{Error, Result};
use crate::sptree::{NodeId, NodeKind, SpTree};

fn require_canonical(tree: &SpTree) -> Result<()> {
    if tree.is_canonical() {
        Ok(())
    } else {
        Err(Error::domain("tree is not in canonical alternating form"))
    }
}

fn series_siblings(tree: &SpTree, leaf: NodeId, parent: NodeId) -> usize {
    tree.children(parent)
        .iter()
        .filter(|&&c| c != leaf && tree.kind(c) == NodeKind::Series)
        .count()
}

fn is_jump(tree: &SpTree, leaf: NodeId) -> Option<bool> {
    let parent = tree.parent(leaf)?;
    if tree.kind(parent) != NodeKind::Parallel {
        return None;
    }
    Some(parent != tree.root() || series_siblings(tree, leaf, parent) >= 2)
}

/// Leaves whose parent is a parallel node that is not the root, or is the
/// root with at least two series siblings.
pub fn jump_edges(tree: &SpTree) -> Result<Vec<NodeId>> {
    require_canonical(tree)?;
    Ok(tree
        .leaves()
        .into_iter()
        .filter(|&l| is_jump(tree, l) == Some(true))
        .collect())
}

/// Leaves whose parallel parent is the root and which have fewer than two
/// series siblings.
pub fn leap_edges(tree: &SpTree) -> Result<Vec<NodeId>> {
    require_canonical(tree)?;
    Ok(tree
        .leaves()
        .into_iter()
        .filter(|&l| is_jump(tree, l) == Some(false))
        .collect())
}

/// Grandparent of a leaf, if it exists and is not the root.
pub fn has_inner_grandparent(tree: &SpTree, leaf: NodeId) -> bool {
    tree.parent(leaf)
        .and_then(|p| tree.parent(p))
        .is_some_and(|g| g != tree.root())
}
