//! Exact brute-force toughness oracle.
//!
//! Every quantity here is computed by scanning vertex subsets as bitmasks,
//! so the oracle is exponential in the number of vertices and refuses graphs
//! above its vertex cap. Loops and edge multiplicity never affect component
//! counts and are ignored by the scan.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{check_vertices, EdgeId, Multigraph, VertexId};
use crate::rational::Rational;

pub const DEFAULT_VERTEX_CAP: usize = 24;

/// Hard limit imposed by the 64-bit subset masks.
pub const MAX_VERTEX_CAP: usize = 40;

/// Toughness ordered as `Zero < Finite(_) < Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Toughness {
    /// Disconnected graph.
    Zero,
    Finite(Rational),
    /// Complete graph: no cutset exists.
    Infinite,
}

impl Toughness {
    pub fn finite(&self) -> Option<Rational> {
        match self {
            Toughness::Finite(r) => Some(*r),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Toughness::Finite(_))
    }

    fn rank(&self) -> u8 {
        match self {
            Toughness::Zero => 0,
            Toughness::Finite(_) => 1,
            Toughness::Infinite => 2,
        }
    }
}

impl Ord for Toughness {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Toughness::Finite(a), Toughness::Finite(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for Toughness {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq<Rational> for Toughness {
    fn eq(&self, other: &Rational) -> bool {
        *self == Toughness::Finite(*other)
    }
}

impl PartialOrd<Rational> for Toughness {
    fn partial_cmp(&self, other: &Rational) -> Option<Ordering> {
        Some(self.cmp(&Toughness::Finite(*other)))
    }
}

impl fmt::Display for Toughness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Toughness::Zero => f.write_str("0"),
            Toughness::Finite(r) => write!(f, "{r}"),
            Toughness::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToughnessValue {
    pub value: Toughness,
    /// A tough set for finite toughness, the empty set for disconnected
    /// graphs, absent for complete graphs.
    pub witness: Option<Vec<VertexId>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalityVerdict {
    pub is_minimal: bool,
    pub tau: ToughnessValue,
    /// First edge (by id) whose deletion does not lower the toughness.
    pub counterexample_edge: Option<EdgeId>,
}

/// Bitmask view of a simple graph on at most 64 vertices.
#[derive(Debug, Clone)]
pub(crate) struct Dense {
    ids: Vec<VertexId>,
    adj: Vec<u64>,
}

impl Dense {
    pub(crate) fn new(g: &Multigraph) -> Self {
        let ids: Vec<VertexId> = g.vertices().collect();
        let mut adj = vec![0u64; ids.len()];
        let index = |v: VertexId| ids.binary_search(&v).expect("endpoint is a vertex");
        for e in g.edges() {
            if e.is_loop() {
                continue;
            }
            let (a, b) = (index(e.a), index(e.b));
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Dense { ids, adj }
    }

    fn n(&self) -> usize {
        self.ids.len()
    }

    fn full(&self) -> u64 {
        if self.n() == 64 {
            u64::MAX
        } else {
            (1u64 << self.n()) - 1
        }
    }

    /// Components of the subgraph induced on `alive`.
    pub(crate) fn components(&self, alive: u64) -> u32 {
        let mut rest = alive;
        let mut count = 0;
        while rest != 0 {
            let seed = rest & rest.wrapping_neg();
            let mut comp = seed;
            let mut frontier = seed;
            while frontier != 0 {
                let mut next = 0;
                let mut f = frontier;
                while f != 0 {
                    next |= self.adj[f.trailing_zeros() as usize];
                    f &= f - 1;
                }
                next &= rest & !comp;
                comp |= next;
                frontier = next;
            }
            rest &= !comp;
            count += 1;
        }
        count
    }

    fn is_complete(&self) -> bool {
        let full = self.full();
        (0..self.n()).all(|i| self.adj[i] | (1 << i) == full)
    }

    /// Necessary condition for a tough set of a connected graph: every
    /// member has at least two neighbours outside the set. Dropping a member
    /// that touches at most one component of `G - S` strictly lowers the
    /// ratio, so no minimizer fails this test.
    fn may_be_tough(&self, set: u64) -> bool {
        let mut f = set;
        while f != 0 {
            let i = f.trailing_zeros() as usize;
            if (self.adj[i] & !set).count_ones() < 2 {
                return false;
            }
            f &= f - 1;
        }
        true
    }

    fn to_ids(&self, set: u64) -> Vec<VertexId> {
        let mut out = Vec::with_capacity(set.count_ones() as usize);
        let mut f = set;
        while f != 0 {
            out.push(self.ids[f.trailing_zeros() as usize]);
            f &= f - 1;
        }
        out
    }

    /// Minimum ratio over cutsets and every set attaining it, for a connected
    /// non-complete graph.
    fn scan(&self, collect_all: bool) -> (u64, u64, Vec<u64>) {
        let n = self.n() as u64;
        let full = self.full();
        let (mut best_s, mut best_c) = (u64::MAX, 1u64);
        let mut best_sets: Vec<u64> = Vec::new();
        for set in 1..full {
            let k = set.count_ones() as u64;
            // ratio is at least k / (n - k)
            if best_s != u64::MAX && k * best_c > best_s * (n - k) {
                continue;
            }
            if !self.may_be_tough(set) {
                continue;
            }
            let c = self.components(full & !set) as u64;
            if c < 2 {
                continue;
            }
            let ord = if best_s == u64::MAX {
                Ordering::Less
            } else {
                (k * best_c).cmp(&(best_s * c))
            };
            match ord {
                Ordering::Less => {
                    best_s = k;
                    best_c = c;
                    best_sets.clear();
                    best_sets.push(set);
                }
                Ordering::Equal => {
                    if collect_all {
                        best_sets.push(set);
                    } else if enumerated_before(set, best_sets[0]) {
                        best_sets[0] = set;
                    }
                }
                Ordering::Greater => {}
            }
        }
        (best_s, best_c, best_sets)
    }
}

/// Subset order used for witnesses: by size, then lexicographic on the
/// ascending member lists.
fn enumerated_before(a: u64, b: u64) -> bool {
    match a.count_ones().cmp(&b.count_ones()) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => {
            let d = a ^ b;
            d != 0 && a & (d & d.wrapping_neg()) != 0
        }
    }
}

/// The toughness oracle with a configurable vertex cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    pub vertex_cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            vertex_cap: DEFAULT_VERTEX_CAP,
        }
    }
}

impl Oracle {
    pub fn with_cap(vertex_cap: usize) -> Self {
        Oracle {
            vertex_cap: vertex_cap.min(MAX_VERTEX_CAP),
        }
    }

    fn check_cap(&self, g: &Multigraph) -> Result<()> {
        if g.vertex_count() > self.vertex_cap {
            return Err(Error::Capacity {
                vertices: g.vertex_count(),
                cap: self.vertex_cap,
            });
        }
        Ok(())
    }

    pub fn toughness(&self, g: &Multigraph) -> Result<ToughnessValue> {
        self.check_cap(g)?;
        let dense = Dense::new(g);
        if dense.components(dense.full()) > 1 {
            return Ok(ToughnessValue {
                value: Toughness::Zero,
                witness: Some(Vec::new()),
            });
        }
        if dense.is_complete() {
            return Ok(ToughnessValue {
                value: Toughness::Infinite,
                witness: None,
            });
        }
        let (s, c, sets) = dense.scan(false);
        Ok(ToughnessValue {
            value: Toughness::Finite(Rational::new(s, c)),
            witness: Some(dense.to_ids(sets[0])),
        })
    }

    /// Every tough set, ordered by size and then lexicographically.
    pub fn tough_sets(&self, g: &Multigraph) -> Result<Vec<Vec<VertexId>>> {
        self.check_cap(g)?;
        let dense = Dense::new(g);
        if dense.components(dense.full()) > 1 {
            return Err(Error::domain("tough sets are undefined for disconnected graphs"));
        }
        if dense.is_complete() {
            return Err(Error::domain("a complete graph has no cutset"));
        }
        let (_, _, mut sets) = dense.scan(true);
        sets.sort_by(|&a, &b| {
            if a == b {
                Ordering::Equal
            } else if enumerated_before(a, b) {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        });
        Ok(sets.into_iter().map(|s| dense.to_ids(s)).collect())
    }

    /// Toughness of `G - e` for every edge, in edge-id order.
    pub fn edge_deletion_toughness(&self, g: &Multigraph) -> Result<Vec<ToughnessValue>> {
        self.check_cap(g)?;
        (0..g.edge_count())
            .map(|e| self.toughness(&g.without_edge(e)))
            .collect()
    }

    /// Minimal iff the toughness is finite and positive and every single
    /// edge deletion strictly lowers it (a disconnected result counts as a
    /// decrease).
    pub fn is_minimally_tough(&self, g: &Multigraph) -> Result<MinimalityVerdict> {
        let tau = self.toughness(g)?;
        if !tau.value.is_finite() {
            return Ok(MinimalityVerdict {
                is_minimal: false,
                tau,
                counterexample_edge: None,
            });
        }
        for e in 0..g.edge_count() {
            let reduced = self.toughness(&g.without_edge(e))?;
            if reduced.value >= tau.value {
                return Ok(MinimalityVerdict {
                    is_minimal: false,
                    tau,
                    counterexample_edge: Some(e),
                });
            }
        }
        Ok(MinimalityVerdict {
            is_minimal: true,
            tau,
            counterexample_edge: None,
        })
    }

    /// Minimum size of a disconnecting set; `n - 1` for complete graphs and
    /// 0 for disconnected ones.
    pub fn vertex_connectivity(&self, g: &Multigraph) -> Result<usize> {
        self.check_cap(g)?;
        let dense = Dense::new(g);
        let full = dense.full();
        if dense.components(full) > 1 {
            return Ok(0);
        }
        if dense.is_complete() {
            return Ok(dense.n().saturating_sub(1));
        }
        let mut best = dense.n();
        for set in 1..full {
            let k = set.count_ones() as usize;
            if k < best && dense.components(full & !set) > 1 {
                best = k;
            }
        }
        Ok(best)
    }
}

/// Number of components of `G - removed`; 0 when everything is removed.
pub fn components(g: &Multigraph, removed: &BTreeSet<VertexId>) -> Result<usize> {
    check_vertices(g, removed)?;
    Ok(g.components_without(removed).len())
}

pub fn toughness(g: &Multigraph) -> Result<ToughnessValue> {
    Oracle::default().toughness(g)
}

pub fn tough_sets(g: &Multigraph) -> Result<Vec<Vec<VertexId>>> {
    Oracle::default().tough_sets(g)
}

pub fn is_minimally_tough(g: &Multigraph) -> Result<MinimalityVerdict> {
    Oracle::default().is_minimally_tough(g)
}

pub fn vertex_connectivity(g: &Multigraph) -> Result<usize> {
    Oracle::default().vertex_connectivity(g)
}

pub fn mediant(a: Rational, b: Rational) -> Rational {
    a.mediant(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::parser::parse;

    fn frac(n: u64, d: u64) -> Toughness {
        Toughness::Finite(Rational::new(n, d))
    }

    /// Independent slow oracle over `BTreeSet` subsets.
    fn slow_toughness(g: &Multigraph) -> Toughness {
        if !g.is_connected() {
            return Toughness::Zero;
        }
        let vs: Vec<VertexId> = g.vertices().collect();
        let mut best: Option<Rational> = None;
        for mask in 1u32..(1 << vs.len()) {
            let set: BTreeSet<VertexId> =
                (0..vs.len()).filter(|i| mask >> i & 1 == 1).map(|i| vs[i]).collect();
            let c = g.components_without(&set).len() as u64;
            if c >= 2 {
                let r = Rational::new(set.len() as u64, c);
                best = Some(best.map_or(r, |b| b.min(r)));
            }
        }
        best.map_or(Toughness::Infinite, Toughness::Finite)
    }

    #[test]
    fn golden_values() {
        assert_eq!(toughness(&complete(2)).unwrap().value, Toughness::Infinite);
        assert_eq!(toughness(&complete(1)).unwrap().value, Toughness::Infinite);
        assert_eq!(toughness(&path(3)).unwrap().value, frac(1, 2));
        assert_eq!(toughness(&cycle(4)).unwrap().value, frac(1, 1));
        assert_eq!(toughness(&complete_bipartite(2, 3)).unwrap().value, frac(2, 3));
        assert_eq!(toughness(&complete_bipartite(2, 4)).unwrap().value, frac(1, 2));
        let disconnected = Multigraph::from_edges([(0, 1), (2, 3)]);
        let t = toughness(&disconnected).unwrap();
        assert_eq!(t.value, Toughness::Zero);
        assert_eq!(t.witness, Some(vec![]));
    }

    #[test]
    fn bracelet_with_edge() {
        // B_3 in parallel with an edge. Removing all four joints gives 4/6,
        // but the first three joints already isolate four middle vertices
        // and leave one more component: 3/5.
        let g = parse("P(S(P(S(e,e),S(e,e)),P(S(e,e),S(e,e)),P(S(e,e),S(e,e))),e)")
            .unwrap()
            .realize()
            .unwrap();
        assert_eq!(toughness(&g.graph).unwrap().value, frac(3, 5));
    }

    #[test]
    fn witness_is_first_minimizer() {
        let t = toughness(&path(3)).unwrap();
        assert_eq!(t.witness, Some(vec![1]));
        let c4 = toughness(&cycle(4)).unwrap();
        assert_eq!(c4.witness, Some(vec![0, 2]));
    }

    #[test]
    fn tough_set_lists() {
        assert_eq!(tough_sets(&path(3)).unwrap(), vec![vec![1]]);
        assert_eq!(tough_sets(&cycle(4)).unwrap(), vec![vec![0, 2], vec![1, 3]]);
        assert!(tough_sets(&complete(3)).is_err());
        assert!(tough_sets(&Multigraph::from_edges([(0, 1), (2, 3)])).is_err());
    }

    #[test]
    fn components_count() {
        let c4 = cycle(4);
        assert_eq!(components(&c4, &BTreeSet::from([0, 2])).unwrap(), 2);
        assert_eq!(components(&c4, &BTreeSet::new()).unwrap(), 1);
        assert_eq!(components(&c4, &BTreeSet::from([0, 1, 2, 3])).unwrap(), 0);
        let k23 = complete_bipartite(2, 3);
        assert_eq!(components(&k23, &BTreeSet::from([0, 1])).unwrap(), 3);
        assert_eq!(
            components(&c4, &BTreeSet::from([9])),
            Err(Error::UnknownVertex(9))
        );
    }

    #[test]
    fn minimality() {
        let c5 = is_minimally_tough(&cycle(5)).unwrap();
        assert!(c5.is_minimal);
        assert_eq!(c5.tau.value, frac(1, 1));
        let k24 = is_minimally_tough(&complete_bipartite(2, 4)).unwrap();
        assert!(!k24.is_minimal);
        assert_eq!(k24.tau.value, frac(1, 2));
        assert_eq!(k24.counterexample_edge, Some(0));
        let mut doubled = cycle(5);
        doubled.add_edge(0, 1);
        assert!(!is_minimally_tough(&doubled).unwrap().is_minimal);
        let mut looped = path(3);
        looped.add_edge(1, 1);
        let v = is_minimally_tough(&looped).unwrap();
        assert_eq!(v.counterexample_edge, Some(2));
        assert!(!is_minimally_tough(&complete(3)).unwrap().is_minimal);
    }

    #[test]
    fn connectivity() {
        assert_eq!(vertex_connectivity(&cycle(4)).unwrap(), 2);
        assert_eq!(vertex_connectivity(&path(3)).unwrap(), 1);
        assert_eq!(vertex_connectivity(&complete(4)).unwrap(), 3);
        assert_eq!(
            vertex_connectivity(&Multigraph::from_edges([(0, 1), (2, 3)])).unwrap(),
            0
        );
    }

    #[test]
    fn capacity_is_enforced() {
        let g = path(25);
        assert_eq!(
            toughness(&g),
            Err(Error::Capacity {
                vertices: 25,
                cap: 24
            })
        );
        assert_eq!(Oracle::with_cap(25).toughness(&g).unwrap().value, frac(1, 2));
    }

    #[test]
    fn ordering_of_values() {
        assert!(Toughness::Zero < frac(1, 100));
        assert!(frac(100, 1) < Toughness::Infinite);
        assert!(frac(1, 3) < frac(1, 2));
        assert_eq!(Toughness::Infinite.to_string(), "inf");
        assert_eq!(frac(2, 4).to_string(), "1/2");
    }

    #[test]
    fn enumerated_before_is_lexicographic() {
        // {0,3} before {1,2}
        assert!(enumerated_before(0b1001, 0b0110));
        assert!(!enumerated_before(0b0110, 0b1001));
        assert!(enumerated_before(0b1000, 0b0011));
    }

    #[test]
    fn agrees_with_slow_oracle_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(2..8u32);
            let mut g = Multigraph::with_vertices(n as usize);
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(0.45) {
                        g.add_edge(a, b);
                    }
                }
            }
            assert_eq!(toughness(&g).unwrap().value, slow_toughness(&g), "{g}");
        }
    }
}
