//! Exact search: star colorability with a fixed palette, the star chromatic
//! index, compatible families, and bipartite perfect matching.
//!
//! Infeasibility is only reported when the search tree was exhausted; a
//! truncated search yields [`SolveStatus::BudgetExhausted`]. Every witness is
//! re-verified before it is returned.

mod matching;
mod search;

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::graph::Graph;
use crate::verify::{verify_compatible_family, verify_star, CompatibleFamily, EdgeColoring};

pub use matching::{bipartite_perfect_matching, HallViolation};
use search::Outcome;

/// Bounds on a search. Budgets apply per call.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest palette tried by [`star_chromatic_index_exact`].
    pub max_colors: usize,
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
    pub thread_hint: Option<usize>,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_colors: 16,
            node_budget: None,
            time_budget: None,
            thread_hint: None,
        }
    }
}

impl SearchLimits {
    pub fn with_max_colors(mut self, k: usize) -> Self {
        self.max_colors = k;
        self
    }

    pub fn with_time_budget(mut self, d: Duration) -> Self {
        self.time_budget = Some(d);
        self
    }

    pub fn with_node_budget(mut self, n: u64) -> Self {
        self.node_budget = Some(n);
        self
    }

    pub fn with_threads(mut self, t: usize) -> Self {
        self.thread_hint = Some(t);
        self
    }

    fn threads(&self) -> usize {
        self.thread_hint.unwrap_or(1).max(1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolveStatus {
    Exact,
    Feasible,
    Infeasible,
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult<W = EdgeColoring> {
    pub status: SolveStatus,
    /// The star chromatic index when `status` is `Exact`.
    pub value: Option<usize>,
    pub witness: Option<W>,
    pub nodes_explored: u64,
}

/// Decides whether `g` has a star edge coloring with `k` colors.
pub fn star_colorable_with_k(g: &Graph, k: usize, limits: &SearchLimits) -> SolveResult {
    let deadline = limits.time_budget.map(|d| Instant::now() + d);
    colorable_until(g, k, limits, deadline)
}

fn colorable_until(g: &Graph, k: usize, limits: &SearchLimits, deadline: Option<Instant>) -> SolveResult {
    if g.edge_count() == 0 {
        let witness = EdgeColoring::new(g, Vec::new(), k).expect("empty coloring fits");
        return SolveResult {
            status: SolveStatus::Feasible,
            value: None,
            witness: Some(witness),
            nodes_explored: 0,
        };
    }
    if k == 0 || k < g.max_degree() {
        return SolveResult {
            status: SolveStatus::Infeasible,
            value: None,
            witness: None,
            nodes_explored: 0,
        };
    }
    let run = search::run(g, k, 1, limits.node_budget, deadline, limits.threads());
    let (status, witness) = match run.outcome {
        Outcome::Found => {
            let colors = run.solution.expect("found implies a solution").remove(0);
            let c = EdgeColoring::new(g, colors, k).expect("search covers every edge");
            let report = verify_star(g, &c).expect("bound to g");
            assert!(report.ok, "search produced an invalid coloring: {report:?}");
            (SolveStatus::Feasible, Some(c))
        }
        Outcome::Exhausted => (SolveStatus::Infeasible, None),
        Outcome::OutOfBudget => (SolveStatus::BudgetExhausted, None),
    };
    SolveResult {
        status,
        value: None,
        witness,
        nodes_explored: run.nodes,
    }
}

/// Smallest `k` for which `g` is star `k`-colorable, searching upward from
/// the maximum degree. The time and node budgets cover the whole ascent.
pub fn star_chromatic_index_exact(g: &Graph, limits: &SearchLimits) -> SolveResult {
    let deadline = limits.time_budget.map(|d| Instant::now() + d);
    let mut nodes = 0;
    let start = g.max_degree().max(usize::from(g.edge_count() > 0));
    for k in start..=limits.max_colors.max(start) {
        let mut step_limits = limits.clone();
        step_limits.node_budget = limits.node_budget.map(|n| n.saturating_sub(nodes));
        let r = colorable_until(g, k, &step_limits, deadline);
        nodes += r.nodes_explored;
        match r.status {
            SolveStatus::Feasible => {
                let witness = r.witness.map(|w| w.compacted());
                return SolveResult {
                    status: SolveStatus::Exact,
                    value: Some(k),
                    witness,
                    nodes_explored: nodes,
                };
            }
            SolveStatus::BudgetExhausted => {
                return SolveResult {
                    status: SolveStatus::BudgetExhausted,
                    value: None,
                    witness: None,
                    nodes_explored: nodes,
                }
            }
            _ => {}
        }
        if k >= limits.max_colors {
            break;
        }
    }
    SolveResult {
        status: SolveStatus::Infeasible,
        value: None,
        witness: None,
        nodes_explored: nodes,
    }
}

/// Searches for `t` pairwise star-compatible colorings of `g` over `k`
/// colors, coloring all members at once.
pub fn find_compatible_family(
    g: &Graph,
    k: usize,
    t: usize,
    limits: &SearchLimits,
) -> SolveResult<CompatibleFamily> {
    let deadline = limits.time_budget.map(|d| Instant::now() + d);
    let infeasible = |nodes| SolveResult {
        status: SolveStatus::Infeasible,
        value: None,
        witness: None,
        nodes_explored: nodes,
    };
    if t == 0 {
        let fam = CompatibleFamily::new(Vec::new(), k).expect("empty family");
        return SolveResult {
            status: SolveStatus::Feasible,
            value: None,
            witness: Some(fam),
            nodes_explored: 0,
        };
    }
    if g.edge_count() > 0 && k < g.max_degree() * t {
        return infeasible(0);
    }
    let run = search::run(g, k, t, limits.node_budget, deadline, limits.threads());
    match run.outcome {
        Outcome::Found => {
            let members = run
                .solution
                .expect("found implies a solution")
                .into_iter()
                .map(|colors| EdgeColoring::new(g, colors, k).expect("search covers every edge"))
                .collect();
            let fam = CompatibleFamily::new(members, k).expect("members share the graph");
            let report = verify_compatible_family(g, &fam).expect("bound to g");
            assert!(report.ok, "search produced an invalid family: {report:?}");
            SolveResult {
                status: SolveStatus::Feasible,
                value: None,
                witness: Some(fam),
                nodes_explored: run.nodes,
            }
        }
        Outcome::Exhausted => infeasible(run.nodes),
        Outcome::OutOfBudget => SolveResult {
            status: SolveStatus::BudgetExhausted,
            value: None,
            witness: None,
            nodes_explored: run.nodes,
        },
    }
}
