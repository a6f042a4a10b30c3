use crate::graph::{grid_graph, hypercube, path_graph};
use crate::verify::EdgeColoring;

use super::product::fold_families;
use super::tables::{CUBE_3, GRID_2_2, GRID_3_3, GRID_3_4, GRID_4_3};
use super::{
    certify, color_by_rule, compose_with_family, path_family, permute_axes, product_star_coloring,
    proper_vertex_coloring, Colored, ConstructError,
};

/// Star coloring of `P_m □ P_n` with the fewest possible colors: 3 for
/// `2 x 2`, 4 when one side is 2, 5 for `3 x 3`, `3 x 4` and `4 x 3`, and
/// 6 otherwise.
pub fn grid2_star_coloring(m: usize, n: usize) -> Result<Colored, ConstructError> {
    let g = grid_graph(&[m, n])?;
    let table: Option<(&[usize], usize)> = match (m, n) {
        (2, 2) => Some((&GRID_2_2, 3)),
        (3, 3) => Some((&GRID_3_3, 5)),
        (4, 3) => Some((&GRID_4_3, 5)),
        (3, 4) => Some((&GRID_3_4, 5)),
        _ => None,
    };
    if let Some((colors, k)) = table {
        let c = EdgeColoring::new(&g, colors.to_vec(), k)?;
        return certify(g, c, "grid table");
    }
    if n == 2 {
        let ladder = grid2_star_coloring(2, m)?;
        let c = permute_axes(&ladder.graph, &ladder.coloring, &g, &[1, 0])?;
        let mut out = certify(g, c, "ladder")?;
        out.transposed = true;
        return Ok(out);
    }
    let c = if m == 2 {
        color_by_rule(&g, 4, |axis, x| match axis {
            0 => (x[1] + 1) % 4,
            _ if x[0] == 0 => x[1] % 4,
            _ => (x[1] + 3) % 4,
        })?
    } else {
        color_by_rule(&g, 6, |axis, x| {
            let (i, j) = (x[0], x[1]);
            match axis {
                0 if j % 2 == 0 => i % 4,
                0 => (i + 3) % 4,
                _ if j % 4 == 1 => 4 + i % 2,
                _ if j % 4 == 3 => 5 - i % 2,
                _ => (i + 1) % 4,
            }
        })?
    };
    certify(g, c, "grid")
}

/// Star coloring of the grid `P_{l1} □ ... □ P_{ld}` with at most `4d - 2`
/// colors: a 2-member family of the first `d - 2` factors composed with an
/// optimal coloring of the last two.
pub fn grid_d_star_coloring(dims: &[usize]) -> Result<Colored, ConstructError> {
    let d = dims.len();
    if d < 2 {
        return Err(ConstructError::Parameters(
            "grid needs at least 2 dimensions".into(),
        ));
    }
    if d == 2 {
        return grid2_star_coloring(dims[0], dims[1]);
    }
    let g = grid_graph(dims)?;
    let front = fold_families(
        dims[..d - 2]
            .iter()
            .map(|&l| path_family(l, 2))
            .collect::<Result<_, _>>()?,
    )?;
    let last = grid2_star_coloring(dims[d - 2], dims[d - 1])?;
    let c_last = proper_vertex_coloring(&last.graph);
    let built = compose_with_family(&front, &last.graph, &last.coloring, &c_last)?;
    let c = built.coloring.transfer(&built.graph, &g, |v| v)?;
    certify(g, c, "d-dimensional grid")
}

/// Star coloring of `Q_d`: exact for `d <= 4`, and at most `2d - 2` colors
/// for `d >= 3`, adding two colors per dimension.
pub fn hypercube_star_coloring(d: usize) -> Result<Colored, ConstructError> {
    let g = hypercube(d)?;
    match d {
        1 => {
            let c = EdgeColoring::new(&g, vec![0], 1)?;
            certify(g, c, "hypercube")
        }
        2 => certify(
            g.clone(),
            EdgeColoring::new(&g, GRID_2_2.to_vec(), 3)?,
            "hypercube",
        ),
        3 => certify(g.clone(), EdgeColoring::new(&g, CUBE_3.to_vec(), 4)?, "hypercube"),
        _ => {
            let prev = hypercube_star_coloring(d - 1)?;
            let p2 = path_graph(2)?;
            let edge = EdgeColoring::new(&p2, vec![0], 1)?;
            let built = product_star_coloring(&prev.graph, &prev.coloring, &p2, &edge)?;
            let c = built.coloring.transfer(&built.graph, &g, |v| v)?;
            certify(g, c, "hypercube")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expected_grid(m: usize, n: usize) -> usize {
        match (m.min(n), m.max(n)) {
            (2, 2) => 3,
            (2, _) => 4,
            (3, 3) | (3, 4) => 5,
            _ => 6,
        }
    }

    #[test]
    fn grid_palettes() {
        for m in 2..=9 {
            for n in 2..=9 {
                let c = grid2_star_coloring(m, n).unwrap();
                assert_eq!(c.palette_size(), expected_grid(m, n), "({m},{n})");
            }
        }
        assert_eq!(grid2_star_coloring(7, 6).unwrap().palette_size(), 6);
        assert!(grid2_star_coloring(7, 2).unwrap().transposed);
    }

    #[test]
    fn ladder_rule() {
        let c = grid2_star_coloring(2, 7).unwrap();
        // Seven rungs, then row 0, then row 1.
        let colors = c.coloring.colors();
        assert_eq!(&colors[..7], &[1, 2, 3, 0, 1, 2, 3]);
        assert_eq!(&colors[7..13], &[0, 1, 2, 3, 0, 1]);
        assert_eq!(&colors[13..], &[3, 0, 1, 2, 3, 0]);
    }

    #[test]
    fn higher_grids() {
        assert!(grid_d_star_coloring(&[4, 4]).unwrap().palette_size() <= 6);
        assert!(grid_d_star_coloring(&[3, 3, 3]).unwrap().palette_size() <= 10);
        assert!(grid_d_star_coloring(&[2, 2, 2, 2]).unwrap().palette_size() <= 14);
        assert!(grid_d_star_coloring(&[5]).is_err());
    }

    #[test]
    fn hypercubes() {
        let expected = [1, 3, 4, 6, 8, 10];
        for (d, &k) in (1..=6).zip(&expected) {
            assert_eq!(hypercube_star_coloring(d).unwrap().palette_size(), k, "d={d}");
        }
    }
}
