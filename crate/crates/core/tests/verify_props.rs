mod common;

use common::naive_is_star;
use proptest::prelude::*;
use starlit::graph::{cycle_graph, path_graph, Graph};
use starlit::verify::{
    incident_colors, verify_compatible_family, verify_proper, verify_star, CompatibleFamily, EdgeColoring,
    FailureKind,
};

/// A simple graph with at most 12 edges and a random coloring of it.
fn graph_and_colors() -> impl Strategy<Value = (Graph, Vec<usize>)> {
    (2usize..9, prop::collection::vec((0usize..9, 0usize..9), 1..24)).prop_flat_map(|(n, raw)| {
        let mut edges = Vec::new();
        for (u, v) in raw {
            let (u, v) = (u % n, v % n);
            if u != v && !edges.contains(&(u, v)) && !edges.contains(&(v, u)) && edges.len() < 12 {
                edges.push((u, v));
            }
        }
        let g = Graph::new(n, edges).unwrap();
        let m = g.edge_count();
        (Just(g), prop::collection::vec(0usize..4, m))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn star_check_matches_walk_enumeration((g, colors) in graph_and_colors()) {
        let c = EdgeColoring::new(&g, colors.clone(), 4).unwrap();
        let report = verify_star(&g, &c).unwrap();
        prop_assert_eq!(report.ok, naive_is_star(&g, &colors));
        if let Some(w) = &report.witness {
            prop_assert!(w.replays_on(&g, &[&c]));
        } else {
            prop_assert!(report.ok);
        }
    }

    #[test]
    fn star_implies_proper((g, colors) in graph_and_colors()) {
        let c = EdgeColoring::new(&g, colors, 4).unwrap();
        if verify_star(&g, &c).unwrap().ok {
            prop_assert!(verify_proper(&g, &c).unwrap().ok);
        }
    }

    #[test]
    fn palette_permutation_invariance((g, colors) in graph_and_colors(), shift in 0usize..4) {
        let c = EdgeColoring::new(&g, colors, 4).unwrap();
        let perm: Vec<usize> = (0..4).map(|x| (x + shift) % 4).collect();
        let moved = c.permuted(&perm);
        prop_assert_eq!(verify_star(&g, &c).unwrap().ok, verify_star(&g, &moved).unwrap().ok);
    }

    #[test]
    fn family_witnesses_replay((g, a) in graph_and_colors(), b in prop::collection::vec(0usize..6, 12)) {
        let m = g.edge_count();
        let c0 = EdgeColoring::new(&g, a, 6).unwrap();
        let c1 = EdgeColoring::new(&g, b[..m].to_vec(), 6).unwrap();
        let fam = CompatibleFamily::new(vec![c0.clone(), c1.clone()], 6).unwrap();
        let report = verify_compatible_family(&g, &fam).unwrap();
        if let Some(w) = &report.witness {
            prop_assert!(w.replays_on(&g, &[&c0, &c1]));
        } else {
            for v in 0..g.vertex_count() {
                let (x, y) = (incident_colors(&g, &c0, v), incident_colors(&g, &c1, v));
                prop_assert!(x.is_disjoint(&y));
            }
        }
    }
}

#[test]
fn listed_cases() {
    let c5 = cycle_graph(5).unwrap();
    let bad = EdgeColoring::new(&c5, vec![0, 1, 0, 1, 2], 3).unwrap();
    let r = verify_star(&c5, &bad).unwrap();
    assert_eq!(r.failure_kind, Some(FailureKind::Bicolored4path));
    let good = EdgeColoring::new(&c5, vec![0, 1, 2, 0, 3], 4).unwrap();
    assert!(verify_star(&c5, &good).unwrap().ok);
    let c4 = cycle_graph(4).unwrap();
    let cyc = EdgeColoring::new(&c4, vec![0, 1, 0, 1], 2).unwrap();
    assert_eq!(
        verify_star(&c4, &cyc).unwrap().failure_kind,
        Some(FailureKind::Bicolored4cycle)
    );
    let p3 = path_graph(3).unwrap();
    let clash = EdgeColoring::new(&p3, vec![1, 1], 2).unwrap();
    assert_eq!(
        verify_proper(&p3, &clash).unwrap().failure_kind,
        Some(FailureKind::ImproperEdgePair)
    );
    let over = EdgeColoring::new(&p3, vec![0, 2], 2).unwrap();
    assert_eq!(
        verify_proper(&p3, &over).unwrap().failure_kind,
        Some(FailureKind::PaletteOverflow)
    );
}

#[test]
fn duplicate_member_overlaps() {
    let c6 = cycle_graph(6).unwrap();
    let c = EdgeColoring::new(&c6, vec![0, 1, 2, 0, 1, 2], 3).unwrap();
    let single = CompatibleFamily::new(vec![c.clone()], 3).unwrap();
    assert!(verify_compatible_family(&c6, &single).unwrap().ok);
    let twice = CompatibleFamily::new(vec![c.clone(), c], 3).unwrap();
    let r = verify_compatible_family(&c6, &twice).unwrap();
    assert_eq!(r.failure_kind, Some(FailureKind::CompatOverlap));
}

#[test]
fn coloring_bound_to_other_graph_is_rejected() {
    let c5 = cycle_graph(5).unwrap();
    let p6 = path_graph(6).unwrap();
    let c = EdgeColoring::new(&c5, vec![0, 1, 2, 0, 3], 4).unwrap();
    assert!(verify_star(&p6, &c).is_err());
}
