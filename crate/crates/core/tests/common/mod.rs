//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into `starlit::verify` or `starlit::solve`.

#![allow(dead_code)]

use starlit::graph::Graph;

/// Edge quadruples of every path with 4 edges and every 4-cycle, found by
/// walking vertex sequences.
pub fn four_edge_walks(g: &Graph) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for start in 0..g.vertex_count() {
        let mut verts = vec![start];
        let mut edges = Vec::new();
        extend(g, &mut verts, &mut edges, &mut out);
    }
    out
}

fn extend(g: &Graph, verts: &mut Vec<usize>, edges: &mut Vec<usize>, out: &mut Vec<[usize; 4]>) {
    if edges.len() == 4 {
        out.push([edges[0], edges[1], edges[2], edges[3]]);
        return;
    }
    let last = *verts.last().unwrap();
    for &(w, e) in g.adjacency(last) {
        if edges.contains(&e) {
            continue;
        }
        let closes = edges.len() == 3 && w == verts[0];
        if verts.contains(&w) && !closes {
            continue;
        }
        verts.push(w);
        edges.push(e);
        extend(g, verts, edges, out);
        verts.pop();
        edges.pop();
    }
}

pub fn naive_is_proper(g: &Graph, colors: &[usize]) -> bool {
    (0..g.vertex_count()).all(|v| {
        let mut seen: Vec<usize> = g.adjacency(v).iter().map(|&(_, e)| colors[e]).collect();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    })
}

pub fn naive_is_star_with(walks: &[[usize; 4]], g: &Graph, colors: &[usize]) -> bool {
    naive_is_proper(g, colors)
        && walks.iter().all(|q| {
            let mut c: Vec<usize> = q.iter().map(|&e| colors[e]).collect();
            c.sort_unstable();
            c.dedup();
            c.len() >= 3
        })
}

pub fn naive_is_star(g: &Graph, colors: &[usize]) -> bool {
    naive_is_star_with(&four_edge_walks(g), g, colors)
}

/// Smallest `k` for which some assignment in `{0..k}^E` is a star
/// coloring, by full enumeration. Edge 0 is pinned to color 0, which loses
/// nothing since colors can be renamed.
pub fn naive_star_index(g: &Graph) -> usize {
    let m = g.edge_count();
    if m == 0 {
        return 0;
    }
    let walks = four_edge_walks(g);
    for k in 1.. {
        let mut colors = vec![0usize; m];
        loop {
            if naive_is_star_with(&walks, g, &colors) {
                return k;
            }
            // Odometer over edges 1..m.
            let mut i = 1;
            while i < m && colors[i] == k - 1 {
                colors[i] = 0;
                i += 1;
            }
            if i == m {
                break;
            }
            colors[i] += 1;
        }
    }
    unreachable!()
}
