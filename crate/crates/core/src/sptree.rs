//! Series-parallel decomposition trees.
//!
//! A tree is stored as an arena in pre-order: the root is node 0 and every
//! subtree occupies a contiguous range of ids. Because the numbering is a
//! function of the shape alone, derived equality is structural equality.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexId};

pub type NodeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeKind {
    Leaf,
    Series,
    Parallel,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpNode {
    pub kind: NodeKind,
    pub children: Vec<NodeId>,
    pub parent: Option<NodeId>,
    size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpTree {
    nodes: Vec<SpNode>,
}

impl SpTree {
    pub fn leaf() -> Self {
        SpTree {
            nodes: vec![SpNode {
                kind: NodeKind::Leaf,
                children: Vec::new(),
                parent: None,
                size: 1,
            }],
        }
    }

    pub fn series(children: Vec<SpTree>) -> Self {
        Self::join(NodeKind::Series, children)
    }

    pub fn parallel(children: Vec<SpTree>) -> Self {
        Self::join(NodeKind::Parallel, children)
    }

    /// Joins `children` under a new root. Arity is not checked here; trees
    /// with fewer than two children per join are rejected by [`validate`].
    ///
    /// [`validate`]: SpTree::validate
    pub fn join(kind: NodeKind, children: Vec<SpTree>) -> Self {
        if kind == NodeKind::Leaf {
            return SpTree::leaf();
        }
        let total: usize = 1 + children.iter().map(SpTree::len).sum::<usize>();
        let mut nodes = Vec::with_capacity(total);
        nodes.push(SpNode {
            kind,
            children: Vec::with_capacity(children.len()),
            parent: None,
            size: total,
        });
        for child in children {
            let offset = nodes.len();
            nodes[0].children.push(offset);
            for mut n in child.nodes {
                n.parent = Some(match n.parent {
                    Some(p) => p + offset,
                    None => 0,
                });
                for c in &mut n.children {
                    *c += offset;
                }
                nodes.push(n);
            }
        }
        SpTree { nodes }
    }

    pub fn root(&self) -> NodeId {
        0
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn node(&self, id: NodeId) -> &SpNode {
        &self.nodes[id]
    }

    pub fn kind(&self, id: NodeId) -> NodeKind {
        self.nodes[id].kind
    }

    pub fn children(&self, id: NodeId) -> &[NodeId] {
        &self.nodes[id].children
    }

    pub fn parent(&self, id: NodeId) -> Option<NodeId> {
        self.nodes[id].parent
    }

    pub fn is_leaf(&self, id: NodeId) -> bool {
        self.nodes[id].kind == NodeKind::Leaf
    }

    pub fn node_ids(&self) -> std::ops::Range<NodeId> {
        0..self.nodes.len()
    }

    /// Leaves in pre-order (left to right).
    pub fn leaves(&self) -> Vec<NodeId> {
        self.node_ids().filter(|&i| self.is_leaf(i)).collect()
    }

    pub fn leaf_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.kind == NodeKind::Leaf).count()
    }

    /// Number of tree edges on the longest root-to-leaf path.
    pub fn height(&self) -> usize {
        self.depth_below(self.root())
    }

    fn depth_below(&self, id: NodeId) -> usize {
        self.children(id)
            .iter()
            .map(|&c| 1 + self.depth_below(c))
            .max()
            .unwrap_or(0)
    }

    pub fn depth(&self, mut id: NodeId) -> usize {
        let mut d = 0;
        while let Some(p) = self.parent(id) {
            id = p;
            d += 1;
        }
        d
    }

    /// Ids of `id` and all its descendants; contiguous by the pre-order
    /// layout.
    pub fn span(&self, id: NodeId) -> std::ops::Range<NodeId> {
        id..id + self.nodes[id].size
    }

    /// Copy of the subtree rooted at `id`.
    pub fn subtree(&self, id: NodeId) -> SpTree {
        let range = id..id + self.nodes[id].size;
        let nodes = self.nodes[range]
            .iter()
            .enumerate()
            .map(|(i, n)| SpNode {
                kind: n.kind,
                children: n.children.iter().map(|c| c - id).collect(),
                parent: if i == 0 { None } else { n.parent.map(|p| p - id) },
                size: n.size,
            })
            .collect();
        SpTree { nodes }
    }

    /// Every join has at least two children.
    pub fn validate(&self) -> Result<()> {
        for (id, n) in self.nodes.iter().enumerate() {
            if n.kind != NodeKind::Leaf && n.children.len() < 2 {
                return Err(Error::Arity {
                    node: id,
                    children: n.children.len(),
                });
            }
        }
        Ok(())
    }

    /// Valid, alternating, and parallel children in ascending oriented-code
    /// order.
    pub fn is_canonical(&self) -> bool {
        if self.validate().is_err() {
            return false;
        }
        self.node_ids().all(|id| {
            let kind = self.kind(id);
            if kind == NodeKind::Leaf {
                return true;
            }
            if self.children(id).iter().any(|&c| self.kind(c) == kind) {
                return false;
            }
            if kind == NodeKind::Parallel {
                let codes: Vec<String> = self
                    .children(id)
                    .iter()
                    .map(|&c| self.code_at(c, false))
                    .collect();
                return codes.windows(2).all(|w| w[0] <= w[1]);
            }
            true
        })
    }

    /// The unique alternating tree realizing the same labelled graph: nested
    /// joins of the same kind are flattened (series order preserved) and
    /// parallel children are sorted by their oriented code.
    pub fn canonicalize(&self) -> Result<SpTree> {
        self.validate()?;
        Ok(self.canon_at(self.root()))
    }

    fn canon_at(&self, id: NodeId) -> SpTree {
        let kind = self.kind(id);
        if kind == NodeKind::Leaf {
            return SpTree::leaf();
        }
        let mut parts = Vec::new();
        for &c in self.children(id) {
            let child = self.canon_at(c);
            if child.kind(0) == kind {
                parts.extend(child.children(0).iter().map(|&g| child.subtree(g)));
            } else {
                parts.push(child);
            }
        }
        if kind == NodeKind::Parallel {
            let mut keyed: Vec<(String, SpTree)> =
                parts.into_iter().map(|t| (t.oriented_code(), t)).collect();
            keyed.sort_by(|a, b| a.0.cmp(&b.0));
            parts = keyed.into_iter().map(|(_, t)| t).collect();
        }
        SpTree::join(kind, parts)
    }

    /// The tree of the same graph with its terminals swapped: every series
    /// node has its children reversed.
    pub fn reversed(&self) -> SpTree {
        self.reversed_at(self.root())
    }

    fn reversed_at(&self, id: NodeId) -> SpTree {
        let mut parts: Vec<SpTree> = self
            .children(id)
            .iter()
            .map(|&c| self.reversed_at(c))
            .collect();
        match self.kind(id) {
            NodeKind::Leaf => SpTree::leaf(),
            NodeKind::Series => {
                parts.reverse();
                SpTree::series(parts)
            }
            NodeKind::Parallel => SpTree::parallel(parts),
        }
    }

    /// Text of the tree with series order kept and parallel children sorted.
    /// Two trees have equal oriented codes exactly when they realize graphs
    /// that are isomorphic with `s -> s` and `t -> t`.
    pub fn oriented_code(&self) -> String {
        self.code_at(self.root(), false)
    }

    fn code_at(&self, id: NodeId, reversed: bool) -> String {
        let kind = self.kind(id);
        if kind == NodeKind::Leaf {
            return "e".to_string();
        }
        let mut parts = Vec::new();
        self.collect_codes(id, kind, reversed, &mut parts);
        if kind == NodeKind::Series && reversed {
            parts.reverse();
        } else if kind == NodeKind::Parallel {
            parts.sort();
        }
        let tag = if kind == NodeKind::Series { 'S' } else { 'P' };
        format!("{tag}({})", parts.join(","))
    }

    /// Codes of the children of `id`, splicing through nested joins of the
    /// same kind so that unflattened trees code like their flat form.
    fn collect_codes(&self, id: NodeId, kind: NodeKind, reversed: bool, out: &mut Vec<String>) {
        for &c in self.children(id) {
            if self.kind(c) == kind {
                self.collect_codes(c, kind, reversed, out);
            } else {
                out.push(self.code_at(c, reversed));
            }
        }
    }

    /// Canonical fingerprint: the smaller of the oriented codes of the tree
    /// and of its terminal-swapped reverse. Invariant under permuting
    /// parallel children and under swapping the terminals.
    pub fn encode(&self) -> String {
        let forward = self.code_at(self.root(), false);
        let backward = self.code_at(self.root(), true);
        forward.min(backward)
    }

    /// Builds the graph bottom-up by the two joins. The source is vertex 0,
    /// the sink vertex 1, and the internal join vertices of series nodes are
    /// numbered in depth-first discovery order.
    pub fn realize(&self) -> Result<LabeledGraph> {
        self.validate()?;
        let mut out = LabeledGraph {
            graph: Multigraph::with_vertices(2),
            s: 0,
            t: 1,
            leaf_to_edge: BTreeMap::new(),
            node_terminals: vec![(0, 0); self.len()],
        };
        let mut next: VertexId = 2;
        self.realize_at(self.root(), 0, 1, &mut next, &mut out);
        Ok(out)
    }

    fn realize_at(
        &self,
        id: NodeId,
        s: VertexId,
        t: VertexId,
        next: &mut VertexId,
        out: &mut LabeledGraph,
    ) {
        out.node_terminals[id] = (s, t);
        match self.kind(id) {
            NodeKind::Leaf => {
                let e = out.graph.add_edge(s, t);
                out.leaf_to_edge.insert(id, e);
            }
            NodeKind::Series => {
                let k = self.children(id).len();
                let mut joints = Vec::with_capacity(k + 1);
                joints.push(s);
                for _ in 1..k {
                    out.graph.add_vertex(*next);
                    joints.push(*next);
                    *next += 1;
                }
                joints.push(t);
                for (i, &c) in self.children(id).iter().enumerate() {
                    self.realize_at(c, joints[i], joints[i + 1], next, out);
                }
            }
            NodeKind::Parallel => {
                for &c in self.children(id) {
                    self.realize_at(c, s, t, next, out);
                }
            }
        }
    }
}

impl fmt::Display for SpTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parser::serialize(self))
    }
}

/// A realized tree: the graph, its terminals, and the map from tree nodes to
/// graph elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Multigraph,
    pub s: VertexId,
    pub t: VertexId,
    pub leaf_to_edge: BTreeMap<NodeId, EdgeId>,
    /// Terminal pair `(source, sink)` of every tree node.
    pub node_terminals: Vec<(VertexId, VertexId)>,
}

impl LabeledGraph {
    pub fn edge_to_leaf(&self, e: EdgeId) -> Option<NodeId> {
        self.leaf_to_edge
            .iter()
            .find(|(_, &edge)| edge == e)
            .map(|(&leaf, _)| leaf)
    }

    pub fn terminals_of(&self, node: NodeId) -> (VertexId, VertexId) {
        self.node_terminals[node]
    }
}
