//! Backtracking engine shared by the single-coloring and family searches.
//!
//! Variables are `(edge, member)` pairs visited edge-major in a fixed order.
//! A color may appear at most once per vertex across all members, which
//! encodes both properness and star compatibility. The star condition is
//! checked incrementally: in a proper coloring each two-colored component is
//! a path or a cycle, so placing color `c` on `uv` is legal exactly when, for
//! every other color `b`, the alternating `b/c` walks leaving `u` and `v`
//! neither meet nor add up to three edges.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use crate::graph::Graph;

const FREE: u32 = u32::MAX;
const NONE: usize = usize::MAX;
const CHECK_EVERY: u64 = 1 << 12;

/// Edge order: start from edge 0 and repeatedly take the unordered edge that
/// touches the most ordered edges (ties by smallest index).
pub(crate) fn edge_order(g: &Graph) -> Vec<usize> {
    let m = g.edge_count();
    let mut order = Vec::with_capacity(m);
    let mut placed = vec![false; m];
    let mut touch = vec![0usize; m];
    while order.len() < m {
        let next = (0..m)
            .filter(|&e| !placed[e])
            .max_by_key(|&e| (touch[e], std::cmp::Reverse(e)))
            .expect("an unplaced edge remains");
        placed[next] = true;
        order.push(next);
        let (a, b) = g.edge(next);
        for w in [a, b] {
            for &(_, f) in g.adjacency(w) {
                if !placed[f] {
                    touch[f] += 1;
                }
            }
        }
    }
    order
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Outcome {
    Found,
    Exhausted,
    OutOfBudget,
}

pub(crate) struct Budget<'a> {
    pub nodes: Option<u64>,
    pub deadline: Option<Instant>,
    pub shared_nodes: &'a AtomicU64,
    /// Index of the best prefix that already found a solution.
    pub best_prefix: &'a AtomicUsize,
}

#[derive(Clone)]
pub(crate) struct Engine<'g> {
    g: &'g Graph,
    k: usize,
    t: usize,
    order: Vec<usize>,
    /// `slot[v * k + c]` = variable (`edge * t + member`) using color `c` at `v`.
    slot: Vec<u32>,
    /// Color of each variable, indexed `edge * t + member`.
    color: Vec<usize>,
    max_used: Vec<usize>,
    pub nodes: u64,
}

impl<'g> Engine<'g> {
    pub fn new(g: &'g Graph, k: usize, t: usize) -> Self {
        Engine {
            g,
            k,
            t,
            order: edge_order(g),
            slot: vec![FREE; g.vertex_count() * k],
            color: vec![NONE; g.edge_count() * t],
            max_used: Vec::with_capacity(g.edge_count() * t + 1),
            nodes: 0,
        }
    }

    pub fn var_count(&self) -> usize {
        self.order.len() * self.t
    }

    fn var(&self, depth: usize) -> (usize, usize) {
        (self.order[depth / self.t], depth % self.t)
    }

    fn current_max(&self) -> Option<usize> {
        self.max_used.last().copied().filter(|&m| m != NONE)
    }

    /// Colors allowed at `depth` by the introduction-order symmetry rule.
    fn color_limit(&self) -> usize {
        self.current_max().map_or(1, |m| m + 2).min(self.k)
    }

    fn walk(&self, start: usize, target: usize, first: usize, second: usize, member: usize) -> Option<usize> {
        let (mut cur, mut col, mut steps) = (start, first, 0);
        while steps < 3 {
            let s = self.slot[cur * self.k + col];
            if s == FREE || s as usize % self.t != member {
                break;
            }
            let e = s as usize / self.t;
            let next = self.g.other_end(e, cur);
            steps += 1;
            if next == target {
                return None;
            }
            cur = next;
            col = if col == first { second } else { first };
        }
        Some(steps)
    }

    fn feasible(&self, e: usize, member: usize, c: usize) -> bool {
        let (u, v) = self.g.edge(e);
        if self.slot[u * self.k + c] != FREE || self.slot[v * self.k + c] != FREE {
            return false;
        }
        for w in [u, v] {
            for &(_, f) in self.g.adjacency(w) {
                let b = self.color[f * self.t + member];
                if b == NONE {
                    continue;
                }
                let Some(from_u) = self.walk(u, v, b, c, member) else {
                    return false;
                };
                let Some(from_v) = self.walk(v, u, b, c, member) else {
                    return false;
                };
                if from_u + from_v >= 3 {
                    return false;
                }
            }
        }
        true
    }

    fn place(&mut self, e: usize, member: usize, c: usize) {
        let (u, v) = self.g.edge(e);
        let var = (e * self.t + member) as u32;
        self.slot[u * self.k + c] = var;
        self.slot[v * self.k + c] = var;
        self.color[e * self.t + member] = c;
        let m = self.current_max().map_or(c, |m| m.max(c));
        self.max_used.push(m);
    }

    fn unplace(&mut self, e: usize, member: usize, c: usize) {
        let (u, v) = self.g.edge(e);
        self.slot[u * self.k + c] = FREE;
        self.slot[v * self.k + c] = FREE;
        self.color[e * self.t + member] = NONE;
        self.max_used.pop();
    }

    /// Applies a prefix of choices (one color per depth). Returns false if
    /// the prefix is infeasible.
    pub fn apply_prefix(&mut self, prefix: &[usize]) -> bool {
        for (depth, &c) in prefix.iter().enumerate() {
            let (e, m) = self.var(depth);
            if c >= self.color_limit() || !self.feasible(e, m, c) {
                return false;
            }
            self.place(e, m, c);
        }
        true
    }

    /// All feasible prefixes of length `len`, in search order.
    pub fn prefixes(&mut self, len: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.collect_prefixes(0, len.min(self.var_count()), &mut cur, &mut out);
        out
    }

    fn collect_prefixes(
        &mut self,
        depth: usize,
        len: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if depth == len {
            out.push(cur.clone());
            return;
        }
        let (e, m) = self.var(depth);
        for c in 0..self.color_limit() {
            if self.feasible(e, m, c) {
                self.place(e, m, c);
                cur.push(c);
                self.collect_prefixes(depth + 1, len, cur, out);
                cur.pop();
                self.unplace(e, m, c);
            }
        }
    }

    /// Depth-first search from `depth`. On `Found` the engine holds the
    /// complete assignment.
    pub fn search(&mut self, depth: usize, budget: &Budget, prefix_index: usize) -> Outcome {
        if depth == self.var_count() {
            return Outcome::Found;
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(CHECK_EVERY) {
            let total = budget.shared_nodes.fetch_add(CHECK_EVERY, Ordering::Relaxed) + CHECK_EVERY;
            if budget.nodes.is_some_and(|n| total > n)
                || budget.deadline.is_some_and(|d| Instant::now() > d)
                || budget.best_prefix.load(Ordering::Relaxed) < prefix_index
            {
                return Outcome::OutOfBudget;
            }
        }
        let (e, m) = self.var(depth);
        for c in 0..self.color_limit() {
            if !self.feasible(e, m, c) {
                continue;
            }
            self.place(e, m, c);
            match self.search(depth + 1, budget, prefix_index) {
                Outcome::Exhausted => self.unplace(e, m, c),
                other => return other,
            }
        }
        Outcome::Exhausted
    }

    /// Colors of member `m` in canonical edge order.
    pub fn member_colors(&self, m: usize) -> Vec<usize> {
        (0..self.g.edge_count())
            .map(|e| self.color[e * self.t + m])
            .collect()
    }
}

pub(crate) struct RunResult {
    pub outcome: Outcome,
    /// Per-member colors when found.
    pub solution: Option<Vec<Vec<usize>>>,
    pub nodes: u64,
}

/// Runs the search for `k` colors and `t` members, optionally splitting the
/// tree into prefixes handled by `threads` workers. The reported solution is
/// always the first one in sequential search order among completed prefixes.
pub(crate) fn run(
    g: &Graph,
    k: usize,
    t: usize,
    node_budget: Option<u64>,
    deadline: Option<Instant>,
    threads: usize,
) -> RunResult {
    let shared_nodes = AtomicU64::new(0);
    let best_prefix = AtomicUsize::new(usize::MAX);
    let budget = Budget {
        nodes: node_budget,
        deadline,
        shared_nodes: &shared_nodes,
        best_prefix: &best_prefix,
    };
    let base = Engine::new(g, k, t);
    let total_vars = base.var_count();
    let extract = |eng: &Engine| (0..t).map(|m| eng.member_colors(m)).collect::<Vec<_>>();

    if threads <= 1 || total_vars < 8 {
        let mut eng = base;
        let outcome = eng.search(0, &budget, 0);
        let nodes = eng.nodes;
        return RunResult {
            outcome,
            solution: (outcome == Outcome::Found).then(|| extract(&eng)),
            nodes,
        };
    }

    let mut splitter = base.clone();
    let mut len = 1;
    let mut prefixes = splitter.prefixes(len);
    while prefixes.len() < threads * 8 && len < total_vars.min(12) {
        len += 1;
        prefixes = splitter.prefixes(len);
    }
    let next = AtomicUsize::new(0);
    // (prefix index, outcome, member colors when found)
    type PrefixResult = (usize, Outcome, Option<Vec<Vec<usize>>>);
    let results: Mutex<Vec<PrefixResult>> = Mutex::new(Vec::new());
    let nodes_total = AtomicU64::new(0);
    std::thread::scope(|s| {
        for _ in 0..threads {
            s.spawn(|| loop {
                let idx = next.fetch_add(1, Ordering::Relaxed);
                if idx >= prefixes.len() || best_prefix.load(Ordering::Relaxed) < idx {
                    break;
                }
                let mut eng = base.clone();
                let applied = eng.apply_prefix(&prefixes[idx]);
                debug_assert!(applied);
                let outcome = eng.search(prefixes[idx].len(), &budget, idx);
                nodes_total.fetch_add(eng.nodes, Ordering::Relaxed);
                let sol = (outcome == Outcome::Found).then(|| extract(&eng));
                if outcome == Outcome::Found {
                    best_prefix.fetch_min(idx, Ordering::Relaxed);
                }
                results
                    .lock()
                    .expect("no worker panicked")
                    .push((idx, outcome, sol));
            });
        }
    });
    let mut results = results.into_inner().expect("no worker panicked");
    results.sort_by_key(|r| r.0);
    let nodes = nodes_total.load(Ordering::Relaxed);
    if let Some((_, _, sol)) = results.iter_mut().find(|r| r.1 == Outcome::Found) {
        return RunResult {
            outcome: Outcome::Found,
            solution: sol.take(),
            nodes,
        };
    }
    let complete = results.len() == prefixes.len() && results.iter().all(|r| r.1 == Outcome::Exhausted);
    RunResult {
        outcome: if complete {
            Outcome::Exhausted
        } else {
            Outcome::OutOfBudget
        },
        solution: None,
        nodes,
    }
}
