//! Perfect matching of a left side of candidate sets into a right side,
//! via augmenting paths (Kuhn). Left vertices are processed in input order
//! and candidates in ascending order, so results are deterministic.

use std::collections::BTreeSet;

/// A set of left vertices whose combined candidates are fewer than they are.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallViolation {
    pub left: Vec<usize>,
    pub neighbors: Vec<usize>,
}

/// Picks a distinct `right_elements` member for every left set, or returns a
/// Hall violator. Candidates outside `right_elements` are ignored.
pub fn bipartite_perfect_matching(
    left_sets: &[BTreeSet<usize>],
    right_elements: &BTreeSet<usize>,
) -> Result<Vec<usize>, HallViolation> {
    let right: Vec<usize> = right_elements.iter().copied().collect();
    let adj: Vec<Vec<usize>> = left_sets
        .iter()
        .map(|s| s.iter().filter_map(|x| right.binary_search(x).ok()).collect())
        .collect();
    let mut match_right: Vec<Option<usize>> = vec![None; right.len()];

    fn augment(
        l: usize,
        adj: &[Vec<usize>],
        match_right: &mut [Option<usize>],
        visited: &mut [bool],
    ) -> bool {
        for &r in &adj[l] {
            if visited[r] {
                continue;
            }
            visited[r] = true;
            let free = match match_right[r] {
                None => true,
                Some(other) => augment(other, adj, match_right, visited),
            };
            if free {
                match_right[r] = Some(l);
                return true;
            }
        }
        false
    }

    for l in 0..adj.len() {
        let mut visited = vec![false; right.len()];
        if !augment(l, &adj, &mut match_right, &mut visited) {
            return Err(hall_violator(l, &adj, &match_right, &right));
        }
    }
    let mut assignment = vec![0; adj.len()];
    for (r, m) in match_right.iter().enumerate() {
        if let Some(l) = m {
            assignment[*l] = right[r];
        }
    }
    Ok(assignment)
}

/// Left vertices reachable from unmatched `root` along alternating paths;
/// their neighborhood is fully matched back into the set.
fn hall_violator(
    root: usize,
    adj: &[Vec<usize>],
    match_right: &[Option<usize>],
    right: &[usize],
) -> HallViolation {
    let mut left_seen = BTreeSet::from([root]);
    let mut right_seen = BTreeSet::new();
    let mut stack = vec![root];
    while let Some(l) = stack.pop() {
        for &r in &adj[l] {
            if right_seen.insert(r) {
                if let Some(m) = match_right[r] {
                    if left_seen.insert(m) {
                        stack.push(m);
                    }
                }
            }
        }
    }
    HallViolation {
        left: left_seen.into_iter().collect(),
        neighbors: right_seen.into_iter().map(|r| right[r]).collect(),
    }
}
