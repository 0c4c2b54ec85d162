//! Exhaustive enumeration of orientations and extremal-value search.
//!
//! Orientations are built by deciding, for every vertex pair `u < v` in
//! lexicographic order, how many of its edges point `u -> v`. Parallel edges
//! are indistinguishable, so a pair of multiplicity `k` has `k + 1` choices.
//! In Eulerian mode a branch is cut as soon as some vertex has a larger
//! imbalance than it has undecided incident edges.
//!
//! Parallel runs split the tree on the first `shard_depth` pair decisions and
//! fold the per-shard results in shard order, so the output never depends on
//! scheduling.

mod verify;

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::construct::complete_graph;
use crate::counting::{allarb, arb_rooted};
use crate::error::{Error, Result};
use crate::graph::{DirectedMultigraph, UndirectedMultigraph};
use crate::iso::{digraphs_isomorphic, ISO_CAP};

pub use verify::{verify_theorem, TheoremCheck, TheoremId, TheoremReport};

/// Default cap on visited search-tree nodes.
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;
/// Largest order accepted by [`enumerate_tournaments`].
pub const TOURNAMENT_CAP: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Worker threads; 1 runs on the calling thread.
    pub jobs: usize,
    /// Reduce witnesses to one per isomorphism class.
    pub iso_dedup: bool,
    /// Abort once this many search-tree nodes have been visited.
    pub budget: u64,
    /// Number of leading pair decisions used to split work.
    pub shard_depth: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            jobs: 1,
            iso_dedup: true,
            budget: DEFAULT_BUDGET,
            shard_depth: 4,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Objective {
    MinArb,
    MaxArb,
    MinAllarb,
    MaxAllarb,
}

impl Objective {
    pub fn name(self) -> &'static str {
        match self {
            Objective::MinArb => "min-arb",
            Objective::MaxArb => "max-arb",
            Objective::MinAllarb => "min-allarb",
            Objective::MaxAllarb => "max-allarb",
        }
    }

    pub fn is_min(self) -> bool {
        matches!(self, Objective::MinArb | Objective::MinAllarb)
    }

    /// Whether the objective is the rooted count, defined only on balanced digraphs.
    pub fn needs_balance(self) -> bool {
        matches!(self, Objective::MinArb | Objective::MaxArb)
    }

    fn value(self, d: &DirectedMultigraph) -> BigInt {
        if self.needs_balance() {
            arb_rooted(d, 0).expect("vertex 0 exists")
        } else {
            allarb(d)
        }
    }

    fn better(self, candidate: &BigInt, incumbent: &BigInt) -> bool {
        if self.is_min() {
            candidate < incumbent
        } else {
            candidate > incumbent
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Objective::MinArb,
            Objective::MaxArb,
            Objective::MinAllarb,
            Objective::MaxAllarb,
        ]
        .into_iter()
        .find(|o| o.name() == s.to_ascii_lowercase())
        .ok_or_else(|| Error::InvalidParameter(format!("unknown objective {s:?}")))
    }
}

/// Which orientations a search ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    Eulerian,
    All,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub objective: Objective,
    pub scope: Scope,
    pub optimum: BigInt,
    /// Every optimal orientation in enumeration order, or one per
    /// isomorphism class when deduplication ran.
    pub witnesses: Vec<DirectedMultigraph>,
    /// Number of orientations evaluated.
    pub search_space: BigInt,
    /// Set when deduplication was requested but the order exceeds the
    /// isomorphism cap, so witnesses are labelled.
    pub dedup_skipped: bool,
}

/// Partial orientation at some depth of the pair-decision tree.
#[derive(Clone)]
struct State {
    d: DirectedMultigraph,
    imbalance: Vec<i64>,
    remaining: Vec<u64>,
}

struct Tree<'a> {
    pairs: Vec<(usize, usize, u64)>,
    eulerian: bool,
    budget: u64,
    nodes: &'a AtomicU64,
}

impl Tree<'_> {
    fn root(g: &UndirectedMultigraph) -> Result<State> {
        Ok(State {
            d: DirectedMultigraph::new(g.n())?,
            imbalance: vec![0; g.n()],
            remaining: g.degrees(),
        })
    }

    fn tick(&self) -> Result<()> {
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            Err(Error::BudgetExceeded { limit: self.budget })
        } else {
            Ok(())
        }
    }

    /// Visits every completion of `s` from pair `idx` up to pair `stop`.
    fn walk(
        &self,
        idx: usize,
        stop: usize,
        s: &mut State,
        visit: &mut dyn FnMut(&State) -> Result<()>,
    ) -> Result<()> {
        self.tick()?;
        if idx == stop {
            return visit(s);
        }
        let (u, v, k) = self.pairs[idx];
        s.remaining[u] -= k;
        s.remaining[v] -= k;
        for forward in 0..=k {
            let delta = 2 * forward as i64 - k as i64;
            s.imbalance[u] += delta;
            s.imbalance[v] -= delta;
            let feasible = !self.eulerian
                || (s.imbalance[u].unsigned_abs() <= s.remaining[u]
                    && s.imbalance[v].unsigned_abs() <= s.remaining[v]);
            if feasible {
                s.d.set_mult(u, v, forward);
                s.d.set_mult(v, u, k - forward);
                self.walk(idx + 1, stop, s, visit)?;
            }
            s.imbalance[u] -= delta;
            s.imbalance[v] += delta;
        }
        s.d.set_mult(u, v, 0);
        s.d.set_mult(v, u, 0);
        s.remaining[u] += k;
        s.remaining[v] += k;
        Ok(())
    }
}

fn ensure_even_degrees(g: &UndirectedMultigraph) -> Result<()> {
    match g.degrees().iter().position(|d| d % 2 == 1) {
        Some(vertex) => Err(Error::OddDegree { vertex }),
        None => Ok(()),
    }
}

/// Calls `f` on every orientation of `g` (every balanced one when
/// `scope` is Eulerian) in the fixed lexicographic order and returns how many
/// were visited.
pub fn for_each_orientation(
    g: &UndirectedMultigraph,
    scope: Scope,
    budget: u64,
    mut f: impl FnMut(&DirectedMultigraph),
) -> Result<u64> {
    let eulerian = scope == Scope::Eulerian;
    if eulerian {
        ensure_even_degrees(g)?;
    }
    let nodes = AtomicU64::new(0);
    let tree = Tree {
        pairs: g.pairs().collect(),
        eulerian,
        budget,
        nodes: &nodes,
    };
    let mut count = 0u64;
    let mut s = Tree::root(g)?;
    tree.walk(0, tree.pairs.len(), &mut s, &mut |s| {
        count += 1;
        f(&s.d);
        Ok(())
    })?;
    Ok(count)
}

/// The balanced orientations of `g`, each exactly once.
pub fn enumerate_eulerian_orientations(
    g: &UndirectedMultigraph,
    budget: u64,
) -> Result<Vec<DirectedMultigraph>> {
    let mut out = Vec::new();
    for_each_orientation(g, Scope::Eulerian, budget, |d| out.push(d.clone()))?;
    Ok(out)
}

pub fn count_eulerian_orientations(g: &UndirectedMultigraph, budget: u64) -> Result<u64> {
    for_each_orientation(g, Scope::Eulerian, budget, |_| {})
}

/// All `2^C(n,2)` labelled tournaments on `n <= 6` vertices.
pub fn enumerate_tournaments(n: usize) -> Result<Vec<DirectedMultigraph>> {
    if n > TOURNAMENT_CAP {
        return Err(Error::CapExceeded {
            what: "tournament order for exhaustive enumeration",
            limit: TOURNAMENT_CAP as u64,
        });
    }
    let mut out = Vec::new();
    for_each_orientation(&complete_graph(n)?, Scope::All, u64::MAX, |d| {
        out.push(d.clone())
    })?;
    Ok(out)
}

/// Keeps the first member of every isomorphism class, preserving order.
pub fn dedup_isomorphic(graphs: Vec<DirectedMultigraph>) -> Result<Vec<DirectedMultigraph>> {
    let mut reps: Vec<DirectedMultigraph> = Vec::new();
    for d in graphs {
        let mut fresh = true;
        for r in &reps {
            if digraphs_isomorphic(r, &d)? {
                fresh = false;
                break;
            }
        }
        if fresh {
            reps.push(d);
        }
    }
    Ok(reps)
}

#[derive(Default)]
struct Best {
    value: Option<BigInt>,
    witnesses: Vec<DirectedMultigraph>,
    leaves: u64,
}

impl Best {
    fn offer(&mut self, objective: Objective, value: BigInt, d: impl FnOnce() -> DirectedMultigraph) {
        match &self.value {
            Some(cur) if *cur == value => self.witnesses.push(d()),
            Some(cur) if !objective.better(&value, cur) => {}
            _ => {
                self.value = Some(value);
                self.witnesses = vec![d()];
            }
        }
    }

    fn merge(mut self, other: Best, objective: Objective) -> Best {
        self.leaves += other.leaves;
        match (&self.value, other.value) {
            (_, None) => {}
            (Some(cur), Some(v)) if *cur == v => self.witnesses.extend(other.witnesses),
            (Some(cur), Some(v)) if !objective.better(&v, cur) => {}
            (_, v) => {
                self.value = v;
                self.witnesses = other.witnesses;
            }
        }
        self
    }
}

/// Optimum of `objective` over the orientations of `g` in `scope`, with every
/// optimal orientation as a witness.
pub fn extremal_orientation(
    g: &UndirectedMultigraph,
    objective: Objective,
    scope: Scope,
    cfg: &SearchConfig,
) -> Result<SearchResult> {
    if objective.needs_balance() && scope != Scope::Eulerian {
        return Err(Error::InvalidParameter(format!(
            "{objective} is defined on Eulerian orientations only"
        )));
    }
    let eulerian = scope == Scope::Eulerian;
    if eulerian {
        ensure_even_degrees(g)?;
    }
    let nodes = AtomicU64::new(0);
    let tree = Tree {
        pairs: g.pairs().collect(),
        eulerian,
        budget: cfg.budget,
        nodes: &nodes,
    };
    let depth = cfg.shard_depth.min(tree.pairs.len());
    let mut prefixes = Vec::new();
    tree.walk(0, depth, &mut Tree::root(g)?, &mut |s| {
        prefixes.push(s.clone());
        Ok(())
    })?;

    let run_shard = |prefix: &State| -> Result<Best> {
        let mut best = Best::default();
        let mut s = prefix.clone();
        tree.walk(depth, tree.pairs.len(), &mut s, &mut |s| {
            best.leaves += 1;
            best.offer(objective, objective.value(&s.d), || s.d.clone());
            Ok(())
        })?;
        Ok(best)
    };

    let shards: Vec<Result<Best>> = if cfg.jobs <= 1 {
        prefixes.iter().map(run_shard).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
        pool.install(|| prefixes.par_iter().map(run_shard).collect())
    };
    let mut best = Best::default();
    for shard in shards {
        best = best.merge(shard?, objective);
    }

    let optimum = best.value.ok_or_else(|| {
        Error::InvalidGraph("graph has no orientation in the requested scope".into())
    })?;
    let n = g.n();
    let dedup_skipped = cfg.iso_dedup && n > ISO_CAP;
    let witnesses = if cfg.iso_dedup && !dedup_skipped {
        dedup_isomorphic(best.witnesses)?
    } else {
        best.witnesses
    };
    Ok(SearchResult {
        objective,
        scope,
        optimum,
        witnesses,
        search_space: BigInt::from(best.leaves),
        dedup_skipped,
    })
}

/// Extremal search over the Eulerian orientations of `g`.
pub fn extremal_eulerian(
    g: &UndirectedMultigraph,
    objective: Objective,
    cfg: &SearchConfig,
) -> Result<SearchResult> {
    extremal_orientation(g, objective, Scope::Eulerian, cfg)
}

/// Extremal search over all tournaments on `n` vertices.
pub fn extremal_tournament(n: usize, objective: Objective, cfg: &SearchConfig) -> Result<SearchResult> {
    if objective.needs_balance() {
        return Err(Error::InvalidParameter(format!(
            "{objective} is not defined on arbitrary tournaments"
        )));
    }
    extremal_orientation(&complete_graph(n)?, objective, Scope::All, cfg)
}
