mod common;

use std::collections::BTreeSet;

use common::{naive_is_star, naive_star_index};
use proptest::prelude::*;
use starlit::graph::{
    cartesian_product, cycle_graph, grid_graph, path_cycle_graph, path_graph, toroidal_graph, Graph,
};
use starlit::solve::{
    bipartite_perfect_matching, find_compatible_family, star_chromatic_index_exact, star_colorable_with_k,
    SearchLimits, SolveStatus,
};

fn small_instances() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 1..=13 {
        out.push((format!("P{n}"), path_graph(n).unwrap()));
    }
    for n in 3..=12 {
        out.push((format!("C{n}"), cycle_graph(n).unwrap()));
    }
    let factors: Vec<(String, Graph)> = (2..=6)
        .map(|n| (format!("P{n}"), path_graph(n).unwrap()))
        .chain((3..=6).map(|n| (format!("C{n}"), cycle_graph(n).unwrap())))
        .collect();
    for (a, g) in &factors {
        for (b, h) in &factors {
            let p = cartesian_product(g, h).unwrap();
            if p.edge_count() <= 12 {
                out.push((format!("{a}x{b}"), p));
            }
        }
    }
    out
}

#[test]
fn exact_matches_full_enumeration() {
    let limits = SearchLimits::default();
    for (name, g) in small_instances() {
        let r = star_chromatic_index_exact(&g, &limits);
        assert_eq!(r.status, SolveStatus::Exact, "{name}");
        assert_eq!(r.value, Some(naive_star_index(&g)), "{name}");
        let w = r.witness.unwrap();
        assert!(naive_is_star(&g, w.colors()), "{name}");
    }
}

#[test]
fn subgraphs_never_need_more_colors() {
    let limits = SearchLimits::default();
    let exact = |g: &Graph| star_chromatic_index_exact(g, &limits).value.unwrap();
    for (m, n) in [(2, 3), (2, 4), (3, 3), (2, 5), (3, 4)] {
        let grid = exact(&grid_graph(&[m, n]).unwrap());
        let longer = exact(&grid_graph(&[m, n + 1]).unwrap());
        let ring = exact(&path_cycle_graph(m, n.max(3)).unwrap());
        assert!(grid <= longer, "P{m}xP{n}");
        if n >= 3 {
            assert!(grid <= ring, "P{m}xC{n}");
        }
    }
    assert!(exact(&path_cycle_graph(3, 4).unwrap()) <= exact(&toroidal_graph(&[3, 4]).unwrap()));
}

#[test]
fn witnesses_are_deterministic_across_threads() {
    for g in [
        grid_graph(&[3, 4]).unwrap(),
        toroidal_graph(&[3, 4]).unwrap(),
        cycle_graph(11).unwrap(),
    ] {
        let base = star_chromatic_index_exact(&g, &SearchLimits::default().with_threads(1));
        for t in [2, 3, 4] {
            let other = star_chromatic_index_exact(&g, &SearchLimits::default().with_threads(t));
            assert_eq!(base.status, other.status);
            assert_eq!(base.value, other.value);
            assert_eq!(base.witness, other.witness);
        }
    }
}

#[test]
fn infeasible_only_when_search_completes() {
    let g = toroidal_graph(&[5, 5]).unwrap();
    let r = star_colorable_with_k(&g, 6, &SearchLimits::default().with_node_budget(10_000));
    assert_eq!(r.status, SolveStatus::BudgetExhausted);
    assert!(r.witness.is_none() && r.value.is_none());
    let r = star_colorable_with_k(&cycle_graph(5).unwrap(), 3, &SearchLimits::default());
    assert_eq!(r.status, SolveStatus::Infeasible);
}

#[test]
fn family_search() {
    let c5 = cycle_graph(5).unwrap();
    let r = find_compatible_family(&c5, 8, 3, &SearchLimits::default());
    assert_eq!(r.status, SolveStatus::Feasible);
    let fam = r.witness.unwrap();
    assert_eq!((fam.k(), fam.t()), (8, 3));
    for m in fam.members() {
        assert!(naive_is_star(&c5, m.colors()));
    }
    for v in 0..5 {
        let sets: Vec<BTreeSet<usize>> = fam
            .members()
            .iter()
            .map(|m| c5.adjacency(v).iter().map(|&(_, e)| m.color(e)).collect())
            .collect();
        assert!(
            sets[0].is_disjoint(&sets[1]) && sets[1].is_disjoint(&sets[2]) && sets[0].is_disjoint(&sets[2])
        );
    }
}

#[test]
fn listed_matching_cases() {
    let set = |xs: &[usize]| xs.iter().copied().collect::<BTreeSet<usize>>();
    let err = bipartite_perfect_matching(&[set(&[1]), set(&[1])], &set(&[1, 2])).unwrap_err();
    assert_eq!(err.left, vec![0, 1]);
    assert_eq!(
        bipartite_perfect_matching(&[set(&[3]), set(&[1, 3])], &set(&[1, 3])).unwrap(),
        vec![3, 1]
    );
}

proptest! {
    #[test]
    fn matching_or_hall_violator(
        sets in prop::collection::vec(prop::collection::btree_set(0usize..7, 0..5), 1..7)
    ) {
        let right: BTreeSet<usize> = (0..7).collect();
        match bipartite_perfect_matching(&sets, &right) {
            Ok(m) => {
                prop_assert_eq!(m.len(), sets.len());
                let distinct: BTreeSet<usize> = m.iter().copied().collect();
                prop_assert_eq!(distinct.len(), m.len());
                for (i, &r) in m.iter().enumerate() {
                    prop_assert!(sets[i].contains(&r));
                }
            }
            Err(v) => {
                let nbrs: BTreeSet<usize> = v.left.iter().flat_map(|&i| sets[i].iter().copied()).collect();
                prop_assert!(nbrs.len() < v.left.len());
                let reported: BTreeSet<usize> = v.neighbors.iter().copied().collect();
                prop_assert_eq!(reported, nbrs);
            }
        }
    }
}
