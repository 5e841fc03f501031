//! Depth-first search for circulant graphs of prescribed degree and
//! diameter, over canonically ordered connection sets with path-class
//! pruning, plus a brute-force oracle and a descending max-order driver.
//!
//! The tree explores proper generator tuples `s₁ < s₂ < … < s_t` with a
//! minimum gap `k` between consecutive choices; odd degrees additionally fix
//! the half generator n/2. The default root is `s₁ = 1` (multi-loop graphs),
//! releasable via [`PruneConfig::with_free_s1`]. Each node is tested against
//! the per-(distance, length) path-class ceilings before its subtree is
//! entered; leaves are accepted when BFS confirms the exact target diameter.

use crate::bounds::binomial;
use crate::error::{Error, Result};
use crate::graph::{bfs_into, canonical_set, CirculantGraph, ConnectionSet};
use crate::pathcount::{admissible_with_counts, count_into, PruneConfig};
use itertools::Itertools;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

/// Candidate-space ceiling for [`brute_force_oracle`].
pub const ORACLE_LIMIT: u128 = 10_000_000;

/// Whether to stop at the first verified solution or enumerate all of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    FirstOnly,
    All,
}

/// Result of one tree exploration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Verified solutions in canonical (depth-first) order.
    pub solutions: Vec<ConnectionSet>,
    /// Nodes expanded (partial and complete sets).
    pub nodes_visited: u64,
    /// Subtrees cut by a ceiling violation.
    pub pruned: u64,
    /// Conservatively true iff the whole restricted space was covered: no
    /// ceiling pruned anything, no budget truncation, no early stop.
    pub exhausted: bool,
}

struct Worker<'a> {
    n: u32,
    t: usize,
    diam: u32,
    half: Option<u32>,
    hi: u32,
    cfg: &'a PruneConfig,
    first_only: bool,
    check_ceilings: bool,
    /// Node budget (sequential runs only); exceeded ⇒ truncated.
    budget: Option<u64>,
    steps: Vec<u32>,
    dist: Vec<u32>,
    queue: Vec<u32>,
    counts: Vec<Vec<u32>>,
    solutions: Vec<ConnectionSet>,
    nodes: u64,
    pruned: u64,
    truncated: bool,
}

impl<'a> Worker<'a> {
    #[allow(clippy::too_many_arguments)]
    fn new(
        n: u32,
        t: usize,
        diam: u32,
        half: Option<u32>,
        hi: u32,
        cfg: &'a PruneConfig,
        first_only: bool,
        budget: Option<u64>,
    ) -> Self {
        Worker {
            n,
            t,
            diam,
            half,
            hi,
            cfg,
            first_only,
            check_ceilings: !cfg.is_unbounded() && diam >= 2,
            budget,
            steps: Vec::new(),
            dist: Vec::new(),
            queue: Vec::new(),
            counts: Vec::new(),
            solutions: Vec::new(),
            nodes: 0,
            pruned: 0,
            truncated: false,
        }
    }

    fn build_steps(&mut self, proper: &[u32]) {
        self.steps.clear();
        for &s in proper {
            self.steps.push(s);
            self.steps.push(self.n - s);
        }
        if let Some(h) = self.half {
            self.steps.push(h);
        }
        self.steps.sort_unstable();
    }

    /// Ceiling test for one node, counting it; used for shared prefixes.
    fn check_only(&mut self, proper: &[u32]) -> bool {
        self.nodes += 1;
        if !self.check_ceilings {
            return true;
        }
        self.build_steps(proper);
        bfs_into(self.n, &self.steps, 0, &mut self.dist, &mut self.queue);
        count_into(self.n, &self.steps, self.diam - 1, &mut self.counts);
        let ok = admissible_with_counts(&self.dist, &self.counts, self.diam, self.cfg);
        if !ok {
            self.pruned += 1;
        }
        ok
    }

    fn explore(&mut self, proper: &mut Vec<u32>) {
        self.nodes += 1;
        if let Some(limit) = self.budget {
            if self.nodes > limit {
                self.truncated = true;
                return;
            }
        }
        let leaf = proper.len() == self.t;
        let mut ecc = 0;
        let mut reached = 0;
        if leaf || self.check_ceilings {
            self.build_steps(proper);
            let (e, r) = bfs_into(self.n, &self.steps, 0, &mut self.dist, &mut self.queue);
            ecc = e;
            reached = r;
            // The ceiling test runs before the leaf's diameter test: a
            // complete set that violates a ceiling is discarded unseen.
            if self.check_ceilings {
                count_into(self.n, &self.steps, self.diam - 1, &mut self.counts);
                if !admissible_with_counts(&self.dist, &self.counts, self.diam, self.cfg) {
                    self.pruned += 1;
                    return;
                }
            }
        }
        if leaf {
            if reached == self.n && ecc == self.diam {
                let mut raw: Vec<i64> = proper.iter().map(|&g| i64::from(g)).collect();
                if let Some(h) = self.half {
                    raw.push(i64::from(h));
                }
                let set = canonical_set(self.n, &raw)
                    .expect("search prefixes are valid generator lists");
                self.solutions.push(set);
            }
            return;
        }
        let lo = proper.last().expect("explore prefixes are nonempty") + self.cfg.k;
        for g in lo..=self.hi {
            proper.push(g);
            self.explore(proper);
            proper.pop();
            if self.truncated || (self.first_only && !self.solutions.is_empty()) {
                return;
            }
        }
    }
}

/// Run the pruned depth-first search; see the module docs for the tree shape.
///
/// Preconditions: `Δ ≥ 2`, `D ≥ 1`, `n ≥ Δ + 1`, and `n` even when `Δ` is
/// odd (the half generator must exist).
pub fn search(
    n: u32,
    delta: u32,
    diam: u32,
    cfg: &PruneConfig,
    mode: SearchMode,
) -> Result<SearchOutcome> {
    search_with_budget(n, delta, diam, cfg, mode, None)
}

/// [`search`] with an optional node budget. Budgeted runs are executed
/// sequentially so that the truncation point — and therefore the result —
/// is deterministic; they report `exhausted = false` when the budget binds.
pub fn search_with_budget(
    n: u32,
    delta: u32,
    diam: u32,
    cfg: &PruneConfig,
    mode: SearchMode,
    budget: Option<u64>,
) -> Result<SearchOutcome> {
    assert!(delta >= 2, "search needs degree >= 2");
    assert!(diam >= 1, "search needs diameter >= 1");
    assert!(cfg.k >= 1, "generator gap k must be >= 1");
    if delta % 2 == 1 && n % 2 == 1 {
        return Err(Error::ParityError { n, degree: delta });
    }
    if n < delta + 1 {
        return Err(Error::DegenerateOrder(n));
    }

    let t = (delta / 2) as usize;
    let half = (delta % 2 == 1).then_some(n / 2);
    let hi = if half.is_some() {
        (n / 2).saturating_sub(cfg.k)
    } else {
        n.saturating_sub(cfg.k) / 2
    };
    let first_only = mode == SearchMode::FirstOnly;
    let make = || Worker::new(n, t, diam, half, hi, cfg, first_only, budget);

    // The first branching level: either the second generator above the fixed
    // root s₁ = 1, or the free choice of s₁ itself.
    let (base, fan_lo): (Vec<u32>, u32) = if cfg.require_s1_eq_1 {
        (vec![1], 1 + cfg.k)
    } else {
        (vec![], 1)
    };

    let mut root_nodes = 0u64;
    let mut root_pruned = 0u64;
    if cfg.require_s1_eq_1 {
        if t == 1 {
            // The root is already a leaf.
            let mut w = make();
            w.explore(&mut vec![1]);
            return Ok(finish(n, delta, diam, w.solutions, w.nodes, w.pruned, w.truncated, first_only));
        }
        let mut w = make();
        let ok = w.check_only(&[1]);
        root_nodes = w.nodes;
        root_pruned = w.pruned;
        if !ok {
            return Ok(finish(n, delta, diam, Vec::new(), root_nodes, root_pruned, false, first_only));
        }
    }
    let children: Vec<u32> = (fan_lo..=hi).collect();

    if budget.is_some() || children.len() <= 1 {
        // Deterministic sequential exploration.
        let mut w = make();
        for &g in &children {
            let mut prefix = base.clone();
            prefix.push(g);
            w.explore(&mut prefix);
            if w.truncated || (first_only && !w.solutions.is_empty()) {
                break;
            }
        }
        return Ok(finish(
            n,
            delta,
            diam,
            w.solutions,
            root_nodes + w.nodes,
            root_pruned + w.pruned,
            w.truncated,
            first_only,
        ));
    }

    let nodes_acc = AtomicU64::new(root_nodes);
    let pruned_acc = AtomicU64::new(root_pruned);
    let truncated_acc = AtomicBool::new(false);
    let solutions: Vec<ConnectionSet> = match mode {
        SearchMode::All => {
            // Workers own disjoint subtrees; collecting preserves child
            // order, so the merged list is the sequential DFS order no
            // matter how subtrees were scheduled.
            let per_child: Vec<Vec<ConnectionSet>> = children
                .par_iter()
                .map(|&g| {
                    let mut w = make();
                    let mut prefix = base.clone();
                    prefix.push(g);
                    w.explore(&mut prefix);
                    nodes_acc.fetch_add(w.nodes, Ordering::Relaxed);
                    pruned_acc.fetch_add(w.pruned, Ordering::Relaxed);
                    if w.truncated {
                        truncated_acc.store(true, Ordering::Relaxed);
                    }
                    w.solutions
                })
                .collect();
            per_child.into_iter().flatten().collect()
        }
        SearchMode::FirstOnly => children
            .par_iter()
            .find_map_first(|&g| {
                let mut w = make();
                let mut prefix = base.clone();
                prefix.push(g);
                w.explore(&mut prefix);
                nodes_acc.fetch_add(w.nodes, Ordering::Relaxed);
                pruned_acc.fetch_add(w.pruned, Ordering::Relaxed);
                if w.truncated {
                    truncated_acc.store(true, Ordering::Relaxed);
                }
                w.solutions.into_iter().next()
            })
            .into_iter()
            .collect(),
    };
    Ok(finish(
        n,
        delta,
        diam,
        solutions,
        nodes_acc.into_inner(),
        pruned_acc.into_inner(),
        truncated_acc.into_inner(),
        first_only,
    ))
}

/// Re-verify every emitted set and assemble the outcome.
#[allow(clippy::too_many_arguments)]
fn finish(
    n: u32,
    delta: u32,
    diam: u32,
    solutions: Vec<ConnectionSet>,
    nodes_visited: u64,
    pruned: u64,
    truncated: bool,
    first_only: bool,
) -> SearchOutcome {
    for set in &solutions {
        debug_assert_eq!(set.n(), n);
        let g = CirculantGraph::new(set.clone());
        assert_eq!(g.degree(), delta, "solution degree mismatch: {set}");
        assert_eq!(g.diameter(), Some(diam), "solution diameter mismatch: {set}");
    }
    let early_stop = first_only && !solutions.is_empty();
    SearchOutcome {
        exhausted: pruned == 0 && !truncated && !early_stop,
        solutions,
        nodes_visited,
        pruned,
    }
}

/// Every canonical connection set of degree `Δ` on ℤₙ with diameter exactly
/// `D`, by unpruned enumeration of all generator combinations. Rejects
/// candidate spaces larger than [`ORACLE_LIMIT`].
pub fn brute_force_oracle(n: u32, delta: u32, diam: u32) -> Result<Vec<ConnectionSet>> {
    assert!(delta >= 2 && n >= 2);
    if delta % 2 == 1 && n % 2 == 1 {
        // Odd degree needs the half generator, so no such set exists.
        return Ok(Vec::new());
    }
    let t = delta / 2;
    let max_proper = (n - 1) / 2;
    if max_proper < t {
        return Ok(Vec::new());
    }
    let candidates = binomial(max_proper, t);
    let candidates = candidates.to_u128().unwrap_or(u128::MAX);
    if candidates > ORACLE_LIMIT {
        return Err(Error::TooLarge {
            candidates,
            limit: ORACLE_LIMIT,
        });
    }
    let half = (delta % 2 == 1).then_some(n / 2);
    let mut dist = Vec::new();
    let mut queue = Vec::new();
    let mut steps = Vec::new();
    let mut out = Vec::new();
    for combo in (1..=max_proper).combinations(t as usize) {
        steps.clear();
        for &s in &combo {
            steps.push(s);
            steps.push(n - s);
        }
        if let Some(h) = half {
            steps.push(h);
        }
        let (ecc, reached) = bfs_into(n, &steps, 0, &mut dist, &mut queue);
        if reached == n && ecc == diam {
            let mut raw: Vec<i64> = combo.iter().map(|&g| i64::from(g)).collect();
            if let Some(h) = half {
                raw.push(i64::from(h));
            }
            out.push(canonical_set(n, &raw).expect("combination is a valid generator list"));
        }
    }
    Ok(out)
}

/// Scan orders from `n_hi` down to `n_lo` and return the largest with a
/// solution, skipping orders that fail the odd-degree parity requirement.
pub fn max_order_search(
    delta: u32,
    diam: u32,
    n_lo: u32,
    n_hi: u32,
    cfg: &PruneConfig,
) -> Option<(u32, ConnectionSet)> {
    max_order_search_with_budget(delta, diam, n_lo, n_hi, cfg, None)
}

/// [`max_order_search`] with a per-order node budget (used for bounded
/// record-table fills).
pub fn max_order_search_with_budget(
    delta: u32,
    diam: u32,
    n_lo: u32,
    n_hi: u32,
    cfg: &PruneConfig,
    budget: Option<u64>,
) -> Option<(u32, ConnectionSet)> {
    for n in (n_lo..=n_hi).rev() {
        if n < delta + 1 || (delta % 2 == 1 && n % 2 == 1) {
            continue;
        }
        let outcome = search_with_budget(n, delta, diam, cfg, SearchMode::FirstOnly, budget)
            .expect("parity and floor were pre-checked");
        if let Some(set) = outcome.solutions.into_iter().next() {
            return Some((n, set));
        }
    }
    None
}

/// Collapse multiplicatively related sets: map each to the lexicographically
/// least image over all units of ℤₙ, then deduplicate (sorted).
pub fn dedupe_multiplicative(sets: &[ConnectionSet]) -> Vec<ConnectionSet> {
    let mut mins: Vec<ConnectionSet> = sets.iter().map(|s| s.multiplicative_class_min()).collect();
    mins.sort_unstable();
    mins.dedup();
    mins
}
