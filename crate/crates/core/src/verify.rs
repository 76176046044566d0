//! Exhaustive cross-checking of the structural results against the oracle.
//!
//! Every property runs over the enumerated universe of canonical trees. A
//! property records how many graphs it actually constrained (graphs outside
//! its hypothesis are skipped, not counted) and the first counterexample.

use std::cell::OnceCell;
use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::time::{Duration, Instant};

use crate::enumerate::{enum_trees, EnumerationConfig, MAX_LEAVES};
use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexId};
use crate::iso::isomorphic;
use crate::parser::{parse, serialize};
use crate::rational::Rational;
use crate::recognize::recognize;
use crate::sptree::{LabeledGraph, NodeKind, SpTree};
use crate::structure::{
    all_reductions, chain_tree, classify_tree, contains, has_inner_grandparent, is_cycle,
    is_pearl_chain, is_reduced, jump_edges, leap_edges, match_substructures, necklace_patterns,
    reduce, SubstructureKind, Verdict, FORBIDDEN,
};
use crate::toughness::{MinimalityVerdict, Oracle, Toughness, ToughnessValue};

/// Suite names in execution order.
pub const SUITES: [&str; 10] = [
    "oracle",
    "tough-sets",
    "classify",
    "cycle",
    "jump-edge",
    "reduction",
    "substructures",
    "necklace",
    "multigraph",
    "round-trip",
];

/// Deliberate bugs for checking that the harness can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Test the jump-edge lemma on leap-edges instead.
    InvertJumpEdges,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_leaves: usize,
    /// `None` runs every suite.
    pub suites: Option<Vec<String>>,
    pub oracle: Oracle,
    pub fault: Option<Fault>,
    /// Reduction orders are compared on graphs up to this size.
    pub confluence_max_vertices: usize,
    /// Size bound for the generated necklace family.
    pub necklace_max_vertices: usize,
}

impl VerifyConfig {
    pub fn new(max_leaves: usize) -> Self {
        VerifyConfig {
            max_leaves,
            suites: None,
            oracle: Oracle::default(),
            fault: None,
            confluence_max_vertices: 10,
            necklace_max_vertices: 14,
        }
    }

    pub fn with_suites<S: Into<String>>(mut self, suites: impl IntoIterator<Item = S>) -> Self {
        self.suites = Some(suites.into_iter().map(Into::into).collect());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyResult {
    pub suite: &'static str,
    pub name: &'static str,
    pub checked: usize,
    pub failed: usize,
    pub first_counterexample: Option<String>,
}

impl PropertyResult {
    fn new(suite: &'static str, name: &'static str) -> Self {
        PropertyResult {
            suite,
            name,
            checked: 0,
            failed: 0,
            first_counterexample: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn record(&mut self, subject: impl fmt::Display, outcome: Result<Outcome>) {
        let detail = match outcome {
            Ok(Outcome::Skip) => return,
            Ok(Outcome::Pass) => {
                self.checked += 1;
                return;
            }
            Ok(Outcome::Fail(detail)) => detail,
            Err(e) => format!("error: {e}"),
        };
        self.checked += 1;
        self.failed += 1;
        if self.first_counterexample.is_none() {
            self.first_counterexample = Some(format!("{subject}: {detail}"));
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    /// Simple graphs in the universe.
    pub graphs: usize,
    /// Trees of the unrestricted universe, multigraphs included.
    pub trees: usize,
    pub properties: Vec<PropertyResult>,
    pub timings: Vec<(&'static str, Duration)>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyResult::passed)
    }

    pub fn property(&self, name: &str) -> Option<&PropertyResult> {
        self.properties.iter().find(|p| p.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyResult> {
        self.properties.iter().filter(|p| !p.passed())
    }

    /// One `suite/property<TAB>checked<TAB>failed` line per property,
    /// followed by the first counterexample of each failing property.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for p in &self.properties {
            let _ = writeln!(out, "{}/{}\t{}\t{}", p.suite, p.name, p.checked, p.failed);
        }
        for p in self.failures() {
            if let Some(c) = &p.first_counterexample {
                let _ = writeln!(out, "counterexample {}/{}: {c}", p.suite, p.name);
            }
        }
        out
    }
}

enum Outcome {
    Skip,
    Pass,
    Fail(String),
}

fn expect(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(detail())
    }
}

/// One enumerated graph with lazily computed oracle facts.
struct Case {
    tree: SpTree,
    lg: LabeledGraph,
    code: String,
    tau: OnceCell<ToughnessValue>,
    minimal: OnceCell<MinimalityVerdict>,
    deletions: OnceCell<Vec<ToughnessValue>>,
    tough_sets: OnceCell<Vec<Vec<VertexId>>>,
}

impl Case {
    fn new(tree: SpTree) -> Result<Self> {
        let lg = tree.realize()?;
        let code = serialize(&tree);
        Ok(Case {
            tree,
            lg,
            code,
            tau: OnceCell::new(),
            minimal: OnceCell::new(),
            deletions: OnceCell::new(),
            tough_sets: OnceCell::new(),
        })
    }

    fn graph(&self) -> &Multigraph {
        &self.lg.graph
    }

    fn tau(&self, oracle: &Oracle) -> Result<Toughness> {
        cached(&self.tau, || oracle.toughness(self.graph())).map(|t| t.value)
    }

    fn witness(&self, oracle: &Oracle) -> Result<Option<Vec<VertexId>>> {
        cached(&self.tau, || oracle.toughness(self.graph())).map(|t| t.witness.clone())
    }

    fn finite_tau(&self, oracle: &Oracle) -> Result<Option<Rational>> {
        Ok(self.tau(oracle)?.finite())
    }

    fn minimal(&self, oracle: &Oracle) -> Result<bool> {
        cached(&self.minimal, || oracle.is_minimally_tough(self.graph())).map(|m| m.is_minimal)
    }

    fn deletions(&self, oracle: &Oracle) -> Result<&[ToughnessValue]> {
        cached(&self.deletions, || oracle.edge_deletion_toughness(self.graph()))
            .map(Vec::as_slice)
    }

    fn tough_sets(&self, oracle: &Oracle) -> Result<&[Vec<VertexId>]> {
        cached(&self.tough_sets, || oracle.tough_sets(self.graph())).map(Vec::as_slice)
    }

    fn minimal_at(&self, oracle: &Oracle, t: Rational) -> Result<bool> {
        Ok(self.tau(oracle)? == t && self.minimal(oracle)?)
    }
}

fn cached<T>(cell: &OnceCell<T>, f: impl FnOnce() -> Result<T>) -> Result<&T> {
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let v = f()?;
    Ok(cell.get_or_init(|| v))
}

struct Harness<'a> {
    config: &'a VerifyConfig,
    oracle: Oracle,
    simple: Vec<Case>,
    all: OnceCell<Vec<SpTree>>,
}

impl Harness<'_> {
    fn all_trees(&self) -> Result<&[SpTree]> {
        cached(&self.all, || enum_trees(&EnumerationConfig::new(self.config.max_leaves)))
            .map(Vec::as_slice)
    }

    /// Runs `check` on every simple case.
    fn each(
        &self,
        suite: &'static str,
        name: &'static str,
        check: impl Fn(&Case) -> Result<Outcome>,
    ) -> PropertyResult {
        let mut result = PropertyResult::new(suite, name);
        for case in &self.simple {
            result.record(&case.code, check(case));
        }
        result
    }

    fn run(&self, suite: &str) -> Vec<PropertyResult> {
        match suite {
            "oracle" => self.oracle_suite(),
            "tough-sets" => self.tough_set_suite(),
            "classify" => self.classify_suite(),
            "cycle" => self.cycle_suite(),
            "jump-edge" => self.jump_edge_suite(),
            "reduction" => self.reduction_suite(),
            "substructures" => self.substructure_suite(),
            "necklace" => self.necklace_suite(),
            "multigraph" => self.multigraph_suite(),
            "round-trip" => self.round_trip_suite(),
            _ => unreachable!("suite names are validated up front"),
        }
    }

    fn oracle_suite(&self) -> Vec<PropertyResult> {
        let o = &self.oracle;
        let witness = self.each("oracle", "witness", |c| {
            let Some(tau) = c.finite_tau(o)? else {
                return Ok(Outcome::Skip);
            };
            let s: BTreeSet<VertexId> = c.witness(o)?.unwrap_or_default().into_iter().collect();
            let comps = c.graph().components_without(&s).len() as u64;
            Ok(expect(comps >= 2 && tau.times_equals(comps, s.len() as u64), || {
                format!("witness {s:?} leaves {comps} components, tau={tau}")
            }))
        });
        let monotone = self.each("oracle", "monotonicity", |c| {
            let g = c.graph();
            let tau = c.tau(o)?;
            let vs: Vec<VertexId> = g.vertices().collect();
            for (i, &a) in vs.iter().enumerate() {
                for &b in &vs[i + 1..] {
                    if g.has_edge_between(a, b) {
                        continue;
                    }
                    let mut h = g.clone();
                    h.add_edge(a, b);
                    let after = o.toughness(&h)?.value;
                    if after < tau {
                        return Ok(Outcome::Fail(format!(
                            "adding {a}-{b} lowers tau from {tau} to {after}"
                        )));
                    }
                }
            }
            Ok(Outcome::Pass)
        });
        let connectivity = self.each("oracle", "connectivity", |c| {
            let Some(tau) = c.finite_tau(o)? else {
                return Ok(Outcome::Skip);
            };
            let kappa = o.vertex_connectivity(c.graph())? as u64;
            Ok(expect(tau.mul_int(2) <= Rational::integer(kappa), || {
                format!("kappa={kappa} < 2*tau={}", tau.mul_int(2))
            }))
        });
        vec![witness, monotone, connectivity]
    }

    fn tough_set_suite(&self) -> Vec<PropertyResult> {
        let o = &self.oracle;
        let endpoints = self.each("tough-sets", "endpoint-exclusion", |c| {
            if !c.minimal(o)? {
                return Ok(Outcome::Skip);
            }
            let g = c.graph();
            for (id, e) in g.edges().iter().enumerate() {
                let h = g.without_edge(id);
                if !h.is_connected() {
                    // the only tough set of a disconnected graph is empty
                    continue;
                }
                for s in o.tough_sets(&h)? {
                    if s.contains(&e.a) || s.contains(&e.b) {
                        return Ok(Outcome::Fail(format!(
                            "tough set {s:?} of G-e contains an end of e={}-{}",
                            e.a, e.b
                        )));
                    }
                }
            }
            Ok(Outcome::Pass)
        });
        let transfer = self.each("tough-sets", "half-transfer", |c| {
            if c.tau(o)? != Rational::HALF {
                return Ok(Outcome::Skip);
            }
            let g = c.graph();
            let sets: BTreeSet<&Vec<VertexId>> = c.tough_sets(o)?.iter().collect();
            let mut any = false;
            for (id, after) in c.deletions(o)?.iter().enumerate() {
                // G - e disconnected: its tough set is empty, not a cutset of G
                if after.value >= Rational::HALF || after.value == Toughness::Zero {
                    continue;
                }
                any = true;
                for s in o.tough_sets(&g.without_edge(id))? {
                    if !sets.contains(&s) {
                        return Ok(Outcome::Fail(format!(
                            "tough set {s:?} of G-e{id} is not tough in G"
                        )));
                    }
                }
            }
            Ok(if any { Outcome::Pass } else { Outcome::Skip })
        });
        let middle = self.each("tough-sets", "middle-vertex", |c| {
            // a lone R2 is the 4-cycle, where the middle pair is a tough set
            if c.graph().vertex_count() == 4 && is_cycle(c.graph()) {
                return Ok(Outcome::Skip);
            }
            let mut middles = BTreeSet::new();
            for kind in [SubstructureKind::R(2), SubstructureKind::R(3)] {
                for occ in match_substructures(&c.tree, kind) {
                    middles.extend(occ.middle);
                }
            }
            if middles.is_empty() || c.finite_tau(o)?.is_none() {
                return Ok(Outcome::Skip);
            }
            for s in c.tough_sets(o)? {
                if let Some(v) = s.iter().find(|v| middles.contains(v)) {
                    return Ok(Outcome::Fail(format!(
                        "tough set {s:?} contains middle vertex {v}"
                    )));
                }
            }
            Ok(Outcome::Pass)
        });
        let cut_vertex = self.each("tough-sets", "cut-vertex-locality", |c| {
            let g = c.graph();
            let cuts = g.cut_vertices();
            if cuts.is_empty() || c.finite_tau(o)?.is_none() {
                return Ok(Outcome::Skip);
            }
            for v in cuts {
                let sides = g.components_without(&BTreeSet::from([v]));
                for s in c.tough_sets(o)?.iter().filter(|s| !s.contains(&v)) {
                    if !within_one(s, &sides) {
                        return Ok(Outcome::Fail(format!("tough set {s:?} straddles cut vertex {v}")));
                    }
                }
            }
            Ok(Outcome::Pass)
        });
        let bridge = self.each("tough-sets", "bridge-locality", |c| {
            let g = c.graph();
            let bridges = g.bridges();
            if bridges.is_empty() || c.finite_tau(o)?.is_none() {
                return Ok(Outcome::Skip);
            }
            for b in bridges {
                let sides = g.without_edge(b).components_without(&BTreeSet::new());
                for s in c.tough_sets(o)? {
                    if !within_one(s, &sides) {
                        let e = g.edge(b);
                        return Ok(Outcome::Fail(format!(
                            "tough set {s:?} straddles bridge {}-{}",
                            e.a, e.b
                        )));
                    }
                }
            }
            Ok(Outcome::Pass)
        });
        let two_cut = self.each("tough-sets", "two-cut-locality", |c| {
            let Some(tau) = c.finite_tau(o)? else {
                return Ok(Outcome::Skip);
            };
            if tau >= Rational::ONE {
                return Ok(Outcome::Skip);
            }
            let g = c.graph();
            let sets = c.tough_sets(o)?;
            let min = sets.iter().map(Vec::len).min().unwrap_or(0);
            let vs: Vec<VertexId> = g.vertices().collect();
            let mut any = false;
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[i + 1..] {
                    let sides = g.components_without(&BTreeSet::from([u, v]));
                    if sides.len() < 2 {
                        continue;
                    }
                    any = true;
                    for s in sets.iter().filter(|s| s.len() == min) {
                        if s.contains(&u) || s.contains(&v) {
                            continue;
                        }
                        if !within_one(s, &sides) {
                            return Ok(Outcome::Fail(format!(
                                "minimum tough set {s:?} straddles 2-cut {{{u},{v}}}"
                            )));
                        }
                    }
                }
            }
            Ok(if any { Outcome::Pass } else { Outcome::Skip })
        });
        vec![endpoints, transfer, middle, cut_vertex, bridge, two_cut]
    }

    fn classify_suite(&self) -> Vec<PropertyResult> {
        let o = &self.oracle;
        vec![self.each("classify", "agreement", |c| {
            match c.finite_tau(o)? {
                Some(tau) if tau >= Rational::HALF => {}
                _ => return Ok(Outcome::Skip),
            }
            let report = classify_tree(&c.tree, o)?;
            let minimal = c.minimal(o)?;
            let claimed = report.verdict == Verdict::MinimallyTough;
            Ok(expect(claimed == minimal, || {
                format!("classify says \"{report}\", oracle says minimal={minimal}")
            }))
        })]
    }

    fn cycle_suite(&self) -> Vec<PropertyResult> {
        let o = &self.oracle;
        vec![self.each("cycle", "tau-one", |c| {
            if c.tau(o)? != Rational::ONE {
                return Ok(Outcome::Skip);
            }
            let minimal = c.minimal(o)?;
            let cycle = is_cycle(c.graph());
            Ok(expect(minimal == cycle, || {
                format!("tau=1, minimal={minimal}, cycle={cycle}")
            }))
        })]
    }

    fn jump_edge_suite(&self) -> Vec<PropertyResult> {
        let o = &self.oracle;
        let fault = self.config.fault;
        vec![self.each("jump-edge", "deletion", |c| {
            let Some(tau) = c.finite_tau(o)? else {
                return Ok(Outcome::Skip);
            };
            if tau < Rational::HALF || tau > Rational::ONE {
                return Ok(Outcome::Skip);
            }
            let leaves = match fault {
                Some(Fault::InvertJumpEdges) => leap_edges(&c.tree)?,
                None => jump_edges(&c.tree)?,
            };
            let eligible: Vec<_> = leaves
                .into_iter()
                .filter(|&l| tau > Rational::HALF || has_inner_grandparent(&c.tree, l))
                .collect();
            if eligible.is_empty() {
                return Ok(Outcome::Skip);
            }
            let deletions = c.deletions(o)?;
            for leaf in eligible {
                let e = c.lg.leaf_to_edge[&leaf];
                let after = deletions[e].value;
                if after != Toughness::Finite(tau) {
                    return Ok(Outcome::Fail(format!(
                        "deleting jump-edge leaf {leaf} (edge {e}) changes tau from {tau} to {after}"
                    )));
                }
            }
            Ok(Outcome::Pass)
        })]
    }

    fn reduction_suite(&self) -> Vec<PropertyResult> {
        let o = &self.oracle;
        let below_one = |c: &Case| -> Result<bool> {
            Ok(c.finite_tau(o)?.is_some_and(|t| t < Rational::ONE))
        };
        let tau = self.each("reduction", "toughness", |c| {
            if !below_one(c)? {
                return Ok(Outcome::Skip);
            }
            let r = reduce(c.graph())?;
            let (before, after) = (c.tau(o)?, o.toughness(&r)?.value);
            Ok(expect(before == after, || format!("tau(G)={before}, tau(r(G))={after}")))
        });
        let minimal = self.each("reduction", "minimality", |c| {
            if !below_one(c)? {
                return Ok(Outcome::Skip);
            }
            let r = reduce(c.graph())?;
            let (before, after) = (c.minimal(o)?, o.is_minimally_tough(&r)?.is_minimal);
            Ok(expect(before == after, || {
                format!("G minimal={before}, r(G) minimal={after}")
            }))
        });
        let cap = self.config.confluence_max_vertices;
        let confluence = self.each("reduction", "confluence", |c| {
            if c.graph().vertex_count() > cap || is_reduced(c.graph()) {
                return Ok(Outcome::Skip);
            }
            let finals = all_reductions(c.graph())?;
            let first = &finals[0];
            Ok(match finals.iter().find(|f| !isomorphic(first, f)) {
                None => Outcome::Pass,
                Some(other) => Outcome::Fail(format!(
                    "reduction orders disagree: [{first}] vs [{other}]"
                )),
            })
        });
        vec![tau, minimal, confluence]
    }

    fn substructure_suite(&self) -> Vec<PropertyResult> {
        let o = &self.oracle;
        let forbidden = self.each("substructures", "forbidden", |c| {
            let Some(kind) = FORBIDDEN.into_iter().find(|&k| contains(&c.tree, k)) else {
                return Ok(Outcome::Skip);
            };
            Ok(expect(!c.minimal_at(o, Rational::HALF)?, || {
                format!("minimally 1/2-tough but contains {kind}")
            }))
        });
        let r21 = self.each("substructures", "r21-placement", |c| {
            let occurrences = match_substructures(&c.tree, SubstructureKind::RR(2, 1));
            if occurrences.is_empty() || !c.minimal_at(o, Rational::HALF)? {
                return Ok(Outcome::Skip);
            }
            let cuts = c.graph().cut_vertices();
            for occ in occurrences {
                // the R2 terminal away from the edge
                let outer = if c.tree.is_leaf(occ.parts[0]) {
                    occ.terminals.1
                } else {
                    occ.terminals.0
                };
                if occ.tree_node != c.tree.root() || !cuts.contains(&outer) {
                    return Ok(Outcome::Fail(format!(
                        "R2,1 at node {} with outer terminal {outer} (cut vertices {cuts:?})",
                        occ.tree_node
                    )));
                }
            }
            Ok(Outcome::Pass)
        });
        let height = self.each("substructures", "height", |c| {
            if !is_reduced(c.graph()) || !c.minimal_at(o, Rational::HALF)? {
                return Ok(Outcome::Skip);
            }
            let h = c.tree.height();
            let necklace = contains(&c.tree, SubstructureKind::Necklace);
            Ok(expect((h == 1 || h == 3) && necklace, || {
                format!("height {h}, necklace={necklace}")
            }))
        });
        let kriesell = self.each("substructures", "kriesell", |c| {
            let Some(tau) = c.finite_tau(o)? else {
                return Ok(Outcome::Skip);
            };
            if tau < Rational::HALF || !c.minimal(o)? {
                return Ok(Outcome::Skip);
            }
            let want = tau.mul_int(2).ceil() as usize;
            let g = c.graph();
            Ok(expect(g.vertices().any(|v| g.degree(v) == want), || {
                format!("tau={tau} but no vertex of degree {want}")
            }))
        });
        vec![forbidden, r21, height, kriesell]
    }

    fn necklace_suite(&self) -> Vec<PropertyResult> {
        let o = &self.oracle;
        let recognition = self.each("necklace", "recognition", |c| {
            if !is_reduced(c.graph()) {
                return Ok(Outcome::Skip);
            }
            let chain = is_pearl_chain(c.graph());
            let necklace = contains(&c.tree, SubstructureKind::Necklace);
            Ok(expect(chain == necklace, || {
                format!("pearl chain={chain}, necklace tree={necklace}")
            }))
        });
        let mut family = PropertyResult::new("necklace", "family");
        let mut drop = PropertyResult::new("necklace", "deletion-drop");
        let third = Toughness::Finite(Rational::new(1, 3));
        for parts in necklace_patterns(self.config.necklace_max_vertices) {
            let tree = chain_tree(&parts);
            let code = serialize(&tree);
            let g = match tree.realize() {
                Ok(lg) => lg.graph,
                Err(e) => {
                    family.record(&code, Err(e));
                    continue;
                }
            };
            family.record(
                &code,
                o.is_minimally_tough(&g).map(|m| {
                    expect(m.is_minimal && m.tau.value == Rational::HALF, || {
                        format!("tau={}, minimal={}", m.tau.value, m.is_minimal)
                    })
                }),
            );
            drop.record(
                &code,
                o.edge_deletion_toughness(&g).map(|ds| {
                    match ds.iter().position(|d| d.value > third) {
                        None => Outcome::Pass,
                        Some(e) => Outcome::Fail(format!("tau(G-e{e})={}", ds[e].value)),
                    }
                }),
            );
        }
        vec![recognition, family, drop]
    }

    fn multigraph_suite(&self) -> Vec<PropertyResult> {
        let mut result = PropertyResult::new("multigraph", "not-minimal");
        let trees = match self.all_trees() {
            Ok(t) => t,
            Err(e) => {
                result.record("universe", Err(e));
                return vec![result];
            }
        };
        for tree in trees {
            let doubled = tree.node_ids().any(|id| {
                tree.kind(id) == NodeKind::Parallel
                    && tree.children(id).iter().filter(|&&c| tree.is_leaf(c)).count() >= 2
            });
            if !doubled {
                continue;
            }
            let outcome = tree.realize().and_then(|lg| {
                let m = self.oracle.is_minimally_tough(&lg.graph)?;
                Ok(expect(!m.is_minimal, || format!("minimally {}-tough", m.tau.value)))
            });
            result.record(serialize(tree), outcome);
        }
        vec![result]
    }

    fn round_trip_suite(&self) -> Vec<PropertyResult> {
        let mut recognized = PropertyResult::new("round-trip", "recognize");
        let mut canonical = PropertyResult::new("round-trip", "canonical");
        let mut text = PropertyResult::new("round-trip", "parse");
        let trees = match self.all_trees() {
            Ok(t) => t,
            Err(e) => {
                recognized.record("universe", Err(e));
                return vec![recognized, canonical, text];
            }
        };
        for tree in trees {
            let code = serialize(tree);
            recognized.record(
                &code,
                tree.realize().and_then(|lg| {
                    let back = recognize(&lg.graph, lg.s, lg.t)?;
                    Ok(match back {
                        Some(b) if b.encode() == tree.encode() => Outcome::Pass,
                        Some(b) => Outcome::Fail(format!("recognized as {b}")),
                        None => Outcome::Fail("not recognized".into()),
                    })
                }),
            );
            canonical.record(
                &code,
                tree.canonicalize()
                    .map(|c| expect(&c == tree, || format!("re-canonicalized to {c}"))),
            );
            text.record(
                &code,
                parse(&code).map(|p| expect(&p == tree, || format!("parsed back as {p}"))),
            );
        }
        vec![recognized, canonical, text]
    }
}

/// `set` lies inside a single one of `sides`.
fn within_one(set: &[VertexId], sides: &[BTreeSet<VertexId>]) -> bool {
    sides.iter().any(|side| set.iter().all(|v| side.contains(v)))
}

/// Runs the selected suites over every tree with at most
/// `config.max_leaves` leaves.
pub fn run(config: &VerifyConfig) -> Result<VerifyReport> {
    if config.max_leaves > MAX_LEAVES {
        return Err(Error::Budget {
            requested: config.max_leaves,
            max: MAX_LEAVES,
        });
    }
    let suites: Vec<&'static str> = match &config.suites {
        None => SUITES.to_vec(),
        Some(names) => {
            let mut picked = Vec::new();
            for name in names {
                let known = SUITES
                    .iter()
                    .find(|&&s| s == name.as_str())
                    .ok_or_else(|| Error::domain(format!("unknown suite `{name}`")))?;
                if !picked.contains(known) {
                    picked.push(*known);
                }
            }
            picked
        }
    };
    let simple = enum_trees(&EnumerationConfig::simple(config.max_leaves))?
        .into_iter()
        .map(Case::new)
        .collect::<Result<Vec<_>>>()?;
    let harness = Harness {
        config,
        oracle: config.oracle,
        simple,
        all: OnceCell::new(),
    };
    let mut properties = Vec::new();
    let mut timings = Vec::new();
    for suite in suites {
        let start = Instant::now();
        properties.extend(harness.run(suite));
        timings.push((suite, start.elapsed()));
    }
    let trees = harness.all.get().map_or(0, Vec::len);
    Ok(VerifyReport {
        graphs: harness.simple.len(),
        trees,
        properties,
        timings,
    })
}
