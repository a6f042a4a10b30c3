//! Star colorings of `P_m □ C_n`. Vertex `(i, j)` has row `i` on the path
//! and column `j` on the cycle; rungs join `(i, j)` and `(i + 1, j)`.

use crate::graph::{path_cycle_graph, path_graph};
use crate::verify::EdgeColoring;

use super::tables::{PATH2_CYCLE4, PATH2_CYCLE5};
use super::{
    certify, color_by_rule, compose_with_family, cycle_family, cycle_star_coloring, path_family,
    permute_axes, proper_vertex_coloring, Colored, ConstructError,
};

/// Rung tuples for odd `n` with `n mod 4 = 1`, indexed by column class
/// `0, 1, 2, n-2, n-1`; entry `i mod 4` colors the rung below row `i`.
const RUNGS_1: [[usize; 4]; 5] = [
    [5, 6, 5, 1],
    [5, 6, 5, 2],
    [5, 6, 5, 4],
    [5, 6, 5, 3],
    [5, 6, 5, 0],
];
/// Same for `n mod 4 = 3`.
const RUNGS_3: [[usize; 4]; 5] = [
    [6, 5, 3, 5],
    [5, 2, 5, 6],
    [5, 4, 5, 6],
    [5, 1, 5, 6],
    [0, 5, 6, 5],
];

/// Star coloring of `P_m □ C_n` (`m >= 2`, `n >= 3`). For `m = 2` it uses
/// 4 colors when 4 divides `n`, 6 for `n = 3` and 5 otherwise. For `m >= 3`
/// it uses 6 when `n` is a multiple of 3 or 4, or when `m` is 3 or 4 and
/// `n = 2 mod 4`, and at most 7 otherwise.
pub fn path_cycle_star_coloring(m: usize, n: usize) -> Result<Colored, ConstructError> {
    let g = path_cycle_graph(m, n)?;
    match (m, n) {
        (2, 4) => {
            let c = EdgeColoring::new(&g, PATH2_CYCLE4.to_vec(), 4)?;
            return certify(g, c, "path-cycle table");
        }
        (2, 5) => {
            let c = EdgeColoring::new(&g, PATH2_CYCLE5.to_vec(), 5)?;
            return certify(g, c, "path-cycle table");
        }
        (2, _) if n.is_multiple_of(4) => {
            // The P_2 x P_n ladder rule has period 4, so it closes up.
            let c = color_by_rule(&g, 4, |axis, x| match axis {
                0 => (x[1] + 1) % 4,
                _ if x[0] == 0 => x[1] % 4,
                _ => (x[1] + 3) % 4,
            })?;
            return certify(g, c, "closed ladder");
        }
        (2, _) if n > 5 => return two_rings(m, n),
        _ => {}
    }
    if n.is_multiple_of(3) {
        let c = color_by_rule(&g, 6, |axis, x| {
            let (i, j) = (x[0], x[1] % 3);
            match axis {
                0 => 3 + (i + [0, 2, 1][j]) % 3,
                _ => (i + j) % 3,
            }
        })?;
        return certify(g, c, "path-cycle mod 3");
    }
    if n.is_multiple_of(4) {
        let c = color_by_rule(&g, 6, |axis, x| {
            let (i, j) = (x[0], x[1]);
            match axis {
                0 if j % 2 == 0 => i % 4,
                0 => (i + 3) % 4,
                _ if j % 4 == 1 => 4 + i % 2,
                _ if j % 4 == 3 => 5 - i % 2,
                _ => (i + 1) % 4,
            }
        })?;
        return certify(g, c, "path-cycle mod 4");
    }
    if n % 4 == 2 {
        if m <= 4 {
            let fam = cycle_family(n, 2)?;
            let p = path_graph(m)?;
            let f_p = EdgeColoring::new(&p, (0..m - 1).map(|x| x % 2).collect(), 2)?;
            let built = compose_with_family(&fam, &p, &f_p, &proper_vertex_coloring(&p))?;
            let c = permute_axes(&built.graph, &built.coloring, &g, &[1, 0])?;
            return certify(g, c, "path-cycle composition");
        }
        let fam = path_family(m, 2)?;
        let ring = cycle_star_coloring(n)?;
        let built = compose_with_family(
            &fam,
            &ring.graph,
            &ring.coloring,
            &proper_vertex_coloring(&ring.graph),
        )?;
        let c = built.coloring.transfer(&built.graph, &g, |v| v)?;
        return certify(g, c, "path-cycle composition");
    }
    // n = 1 or 5 mod 6.
    let fam = cycle_family(n, 2)?;
    let rows = [
        fam.family.member(0).colors().to_vec(),
        fam.family.member(1).colors().to_vec(),
    ];
    let rungs = if n % 4 == 1 { &RUNGS_1 } else { &RUNGS_3 };
    let c = color_by_rule(&g, 7, |axis, x| {
        let (i, j) = (x[0], x[1]);
        match axis {
            0 => {
                let class = match j {
                    0 | 1 => j,
                    _ if j == n - 2 => 3,
                    _ if j == n - 1 => 4,
                    _ => 2,
                };
                rungs[class][i % 4]
            }
            _ => rows[i % 2][j],
        }
    })?;
    certify(g, c, "path-cycle rung tuples")
}

/// `P_2 □ C_n` for `n > 5`: both rings carry 3-colorings, the second a
/// rotation of the first (relabeled if needed), and rungs alternate two
/// fresh colors. For odd multiples of 3 the plain `012` ring cannot close,
/// so its last block is reversed and the ring shifted by one.
fn two_rings(m: usize, n: usize) -> Result<Colored, ConstructError> {
    let g = path_cycle_graph(m, n)?;
    let mut ring = cycle_star_coloring(n)?.coloring.colors().to_vec();
    if n % 6 == 3 {
        // Ends in `0 2 1`, then shifted so the closing edge sits between
        // two edges of the same color.
        ring[n - 2] = 2;
        ring[n - 1] = 1;
        ring.rotate_left(1);
    }
    const RELABEL: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut last_err = None;
    for sigma in RELABEL {
        for s in 0..n {
            let c = color_by_rule(&g, 5, |axis, x| match axis {
                0 => 3 + x[1] % 2,
                _ if x[0] == 0 => ring[x[1]],
                _ => sigma[ring[(x[1] + s) % n]],
            })?;
            match certify(g.clone(), c, "two rings") {
                Ok(out) => return Ok(out),
                Err(e) => last_err = Some(e),
            }
        }
    }
    Err(last_err.expect("n > 5 gives at least one rotation"))
}
