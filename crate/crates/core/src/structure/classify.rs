//! Deciding minimal toughness of series-parallel graphs with
//! `tau >= 1/2` from their structure.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexId};
use crate::iso;
use crate::rational::Rational;
use crate::recognize::{recognize, recognize_any};
use crate::sptree::{NodeId, SpTree};
use crate::toughness::{Oracle, Toughness, ToughnessValue};

use super::chain::{cycle_order, pearl_chain, PearlChain};
use super::edges::jump_edges;
use super::substructure::{match_substructures, Occurrence, SubstructureKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    MinimallyTough,
    NotMinimallyTough,
    /// `tau < 1/2`, where no characterization is known.
    OutOfScope,
    /// Complete graphs and graphs with loops or parallel edges.
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    Loop { edge: EdgeId },
    ParallelEdges { first: EdgeId, second: EdgeId },
    Complete,
    /// Vertices in cyclic order.
    Cycle(Vec<VertexId>),
    NotACycle,
    NoJumpEdges,
    JumpEdge { leaf: NodeId, edge: EdgeId },
    PearlChain(PearlChain),
    Forbidden(Occurrence),
    NotAPearlChain,
    BelowHalf,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub tau: ToughnessValue,
    pub verdict: Verdict,
    pub evidence: Evidence,
    /// The sp-tree the structural tests ran on, with its terminals in the
    /// input graph.
    pub tree: Option<(VertexId, VertexId, SpTree)>,
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tau = &self.tau.value;
        match (&self.verdict, &self.evidence) {
            (Verdict::MinimallyTough, Evidence::Cycle(c)) => {
                write!(f, "minimally {tau}-tough (cycle of length {})", c.len())
            }
            (Verdict::MinimallyTough, Evidence::PearlChain(c)) => {
                write!(f, "minimally {tau}-tough (pearl chain: {c})")
            }
            (Verdict::MinimallyTough, _) => write!(f, "minimally {tau}-tough (no jump-edges)"),
            (Verdict::NotMinimallyTough, Evidence::JumpEdge { edge, .. }) => write!(
                f,
                "not minimal: tau(G-e)=tau(G)={tau} for jump-edge e={edge}"
            ),
            (Verdict::NotMinimallyTough, Evidence::Forbidden(o)) => write!(
                f,
                "not minimal: tau={tau}, contains {} at {}-{}",
                o.kind, o.terminals.0, o.terminals.1
            ),
            (Verdict::NotMinimallyTough, Evidence::NotACycle) => {
                write!(f, "not minimal: tau={tau} but not a cycle")
            }
            (Verdict::NotMinimallyTough, _) => {
                write!(f, "not minimal: tau={tau} but not a pearl chain")
            }
            (Verdict::OutOfScope, _) => write!(f, "out of scope: tau={tau} < 1/2"),
            (Verdict::NotApplicable, Evidence::Loop { edge }) => {
                write!(f, "not applicable: loop at edge {edge}")
            }
            (Verdict::NotApplicable, Evidence::ParallelEdges { first, second }) => {
                write!(f, "not applicable: parallel edges {first} and {second}")
            }
            (Verdict::NotApplicable, _) => write!(f, "not applicable: complete graph, tau=inf"),
        }
    }
}

/// Forbidden in minimally 1/2-tough graphs, in the order they are reported.
pub const FORBIDDEN: [SubstructureKind; 5] = [
    SubstructureKind::Q2,
    SubstructureKind::R(4),
    SubstructureKind::RR(3, 1),
    SubstructureKind::RR(3, 2),
    SubstructureKind::RR(3, 3),
];

/// [`classify_with`] using the default oracle.
pub fn classify(g: &Multigraph) -> Result<ClassificationReport> {
    classify_with(g, &Oracle::default())
}

/// Runs the decision procedure on `g`. The sp-tree is taken from the first
/// terminal pair (in lexicographic order) between which `g` is
/// series-parallel.
pub fn classify_with(g: &Multigraph, oracle: &Oracle) -> Result<ClassificationReport> {
    classify_impl(g, None, oracle)
}

/// [`classify_with`] with the sp-tree taken between the given terminals.
pub fn classify_between(
    g: &Multigraph,
    s: VertexId,
    t: VertexId,
    oracle: &Oracle,
) -> Result<ClassificationReport> {
    classify_impl(g, Some((s, t)), oracle)
}

fn classify_impl(
    g: &Multigraph,
    terminals: Option<(VertexId, VertexId)>,
    oracle: &Oracle,
) -> Result<ClassificationReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let gate = |tau, evidence| ClassificationReport {
        tau,
        verdict: Verdict::NotApplicable,
        evidence,
        tree: None,
    };
    if let Some(edge) = g.first_loop() {
        return Ok(gate(oracle.toughness(g)?, Evidence::Loop { edge }));
    }
    if let Some((first, second)) = g.first_parallel_pair() {
        return Ok(gate(oracle.toughness(g)?, Evidence::ParallelEdges { first, second }));
    }
    if g.vertex_count() <= 1 {
        return Ok(gate(oracle.toughness(g)?, Evidence::Complete));
    }
    let (s, t, tree) = match terminals {
        Some((s, t)) => {
            let tree = recognize(g, s, t)?.ok_or(Error::NotSeriesParallel)?;
            (s, t, tree)
        }
        None => recognize_any(g)?.ok_or(Error::NotSeriesParallel)?,
    };
    if g.is_complete() {
        return Ok(gate(oracle.toughness(g)?, Evidence::Complete));
    }
    let tau = oracle.toughness(g)?;
    decide(g, s, t, tree, tau)
}

/// [`classify_with`] on the realization of a tree, keeping that tree.
pub fn classify_tree(tree: &SpTree, oracle: &Oracle) -> Result<ClassificationReport> {
    let tree = tree.canonicalize()?;
    let lg = tree.realize()?;
    let g = &lg.graph;
    if g.first_loop().is_some() || g.first_parallel_pair().is_some() || g.is_complete() {
        return classify_with(g, oracle);
    }
    let tau = oracle.toughness(g)?;
    decide(g, lg.s, lg.t, tree, tau)
}

fn decide(
    g: &Multigraph,
    s: VertexId,
    t: VertexId,
    tree: SpTree,
    tau: ToughnessValue,
) -> Result<ClassificationReport> {
    let Toughness::Finite(value) = tau.value else {
        return Err(Error::domain("a connected non-complete graph has finite toughness"));
    };
    let lg = tree.realize()?;
    let to_g: BTreeMap<VertexId, VertexId> = iso::find(&lg.graph, g, &[(lg.s, s), (lg.t, t)])
        .ok_or_else(|| Error::domain("tree does not realize the input graph"))?
        .into_iter()
        .collect();
    let edge_in_g = |leaf: NodeId| -> EdgeId {
        let e = lg.graph.edge(lg.leaf_to_edge[&leaf]);
        let (a, b) = (to_g[&e.a], to_g[&e.b]);
        (0..g.edge_count())
            .find(|&i| g.edge(i).key() == (a.min(b), a.max(b)))
            .expect("edges correspond under the isomorphism")
    };

    let (verdict, evidence) = if value == Rational::ONE {
        match cycle_order(g) {
            Some(order) => (Verdict::MinimallyTough, Evidence::Cycle(order)),
            None => {
                let evidence = match jump_edges(&tree)?.first() {
                    Some(&leaf) => Evidence::JumpEdge {
                        leaf,
                        edge: edge_in_g(leaf),
                    },
                    None => Evidence::NotACycle,
                };
                (Verdict::NotMinimallyTough, evidence)
            }
        }
    } else if value > Rational::HALF && value < Rational::ONE {
        match jump_edges(&tree)?.first() {
            None => (Verdict::MinimallyTough, Evidence::NoJumpEdges),
            Some(&leaf) => (
                Verdict::NotMinimallyTough,
                Evidence::JumpEdge {
                    leaf,
                    edge: edge_in_g(leaf),
                },
            ),
        }
    } else if value == Rational::HALF {
        match pearl_chain(g) {
            Some(chain) => (Verdict::MinimallyTough, Evidence::PearlChain(chain)),
            None => {
                let forbidden = FORBIDDEN
                    .iter()
                    .find_map(|&k| match_substructures(&tree, k).into_iter().next());
                let evidence = match forbidden {
                    Some(mut o) => {
                        o.terminals = (to_g[&o.terminals.0], to_g[&o.terminals.1]);
                        o.middle = o.middle.iter().map(|v| to_g[v]).collect();
                        o.middle.sort_unstable();
                        Evidence::Forbidden(o)
                    }
                    None => Evidence::NotAPearlChain,
                };
                (Verdict::NotMinimallyTough, evidence)
            }
        }
    } else if value < Rational::HALF {
        (Verdict::OutOfScope, Evidence::BelowHalf)
    } else {
        return Err(Error::domain(format!(
            "toughness {value} exceeds 1, impossible for a series-parallel graph"
        )));
    };
    Ok(ClassificationReport {
        tau,
        verdict,
        evidence,
        tree: Some((s, t, tree)),
    })
}
