//! Star colorings of `C_m □ C_n` and of d-dimensional tori.

use crate::graph::toroidal_graph;
use crate::verify::{CompatibleFamily, EdgeColoring};

use super::cycles::family_palette;
use super::product::fold_families;
use super::tables::{TORUS_3_3, TORUS_5_5, TORUS_5_5_FAMILY_14_3};
use super::{
    certify, certify_family, compose_with_family, cycle_family, cycle_star_coloring, permute_axes,
    proper_vertex_coloring, Colored, ConstructError, Family,
};

fn cycle_index(n: usize) -> usize {
    if n == 5 {
        4
    } else {
        3
    }
}

fn cycle_chromatic(n: usize) -> usize {
    2 + n % 2
}

/// Family length `a`, ring length `b` and member count for `C_m □ C_n`,
/// plus whether the family sits on the second factor.
fn plan(m: usize, n: usize) -> (usize, usize, usize, bool) {
    let cost = |a: usize, b: usize| {
        let r = cycle_chromatic(b);
        (family_palette(a, r) + cycle_index(b), r)
    };
    let (straight, r1) = cost(m, n);
    let (swapped, r2) = cost(n, m);
    if swapped < straight {
        (n, m, r2, true)
    } else {
        (m, n, r1, false)
    }
}

/// Palette used by [`cycle_cycle_star_coloring`] for `C_m □ C_n`.
pub(crate) fn cycle_cycle_palette(m: usize, n: usize) -> usize {
    match (m, n) {
        (3, 3) => 6,
        (5, 5) => 7,
        _ => {
            let (a, b, r, _) = plan(m, n);
            family_palette(a, r) + cycle_index(b)
        }
    }
}

/// Star coloring of `C_m □ C_n` (`m, n >= 3`). Uses 6 colors for
/// `C_3 □ C_3`, 7 for `C_5 □ C_5` and when both lengths are even, 8 for one
/// odd length above 3 and one even, 9 for `C_3` with an even cycle, and 10
/// for two odd lengths except that pairing `C_5` with another odd cycle
/// needs 11.
pub fn cycle_cycle_star_coloring(m: usize, n: usize) -> Result<Colored, ConstructError> {
    let g = toroidal_graph(&[m, n])?;
    match (m, n) {
        (3, 3) => {
            return certify(
                g.clone(),
                EdgeColoring::new(&g, TORUS_3_3.to_vec(), 6)?,
                "torus table",
            )
        }
        (5, 5) => {
            return certify(
                g.clone(),
                EdgeColoring::new(&g, TORUS_5_5.to_vec(), 7)?,
                "torus table",
            )
        }
        _ => {}
    }
    let (a, b, r, swapped) = plan(m, n);
    let fam = cycle_family(a, r)?;
    let ring = cycle_star_coloring(b)?;
    let c_ring = proper_vertex_coloring(&ring.graph);
    let built = compose_with_family(&fam, &ring.graph, &ring.coloring, &c_ring)?;
    let c = if swapped {
        permute_axes(&built.graph, &built.coloring, &g, &[1, 0])?
    } else {
        built.coloring.transfer(&built.graph, &g, |v| v)?
    };
    let mut out = certify(g, c, "cycle product")?;
    out.transposed = swapped;
    if m % 2 == 1 && n % 2 == 1 && out.palette_size() > 10 {
        let msg = format!(
            "C_{m} x C_{n} uses {} colors: C_5 has no compatible 3-family on 7 colors",
            out.palette_size()
        );
        log::warn!("{msg}");
        out.note = Some(msg);
    }
    Ok(out)
}

/// The `(14, 3)` family of `C_5 □ C_5`.
fn torus_5_5_family() -> Result<Family, ConstructError> {
    let g = toroidal_graph(&[5, 5])?;
    let members = TORUS_5_5_FAMILY_14_3
        .iter()
        .map(|m| EdgeColoring::new(&g, m.to_vec(), 14))
        .collect::<Result<Vec<_>, _>>()?;
    let family = CompatibleFamily::new(members, 14)?;
    certify_family(g, family, "C_5 x C_5 family")
}

/// Splits the axes other than `pair` into family units. With three members,
/// `C_5` factors are taken two at a time.
fn front_units(dims: &[usize], pair: (usize, usize), t: usize) -> Vec<Vec<usize>> {
    let rest: Vec<usize> = (0..dims.len()).filter(|&i| i != pair.0 && i != pair.1).collect();
    let mut units = Vec::new();
    let mut fives = Vec::new();
    for i in rest {
        if t == 3 && dims[i] == 5 {
            fives.push(i);
            if fives.len() == 2 {
                units.push(std::mem::take(&mut fives));
            }
        } else {
            units.push(vec![i]);
        }
    }
    if !fives.is_empty() {
        units.push(fives);
    }
    units
}

fn unit_palette(dims: &[usize], unit: &[usize], t: usize) -> usize {
    match unit {
        [_, _] => 14,
        [i] => family_palette(dims[*i], t),
        _ => unreachable!("units have one or two axes"),
    }
}

fn member_count(dims: &[usize]) -> usize {
    if dims.iter().all(|l| l % 2 == 0) {
        2
    } else {
        3
    }
}

fn best_pair(dims: &[usize]) -> ((usize, usize), usize) {
    let d = dims.len();
    let t = member_count(dims);
    let mut best: Option<((usize, usize), usize)> = None;
    // Later pairs first, so ties keep the last two axes.
    for i in (0..d).rev() {
        for j in (i + 1..d).rev() {
            let front: usize = front_units(dims, (i, j), t)
                .iter()
                .map(|u| unit_palette(dims, u, t))
                .sum();
            let total = front + cycle_cycle_palette(dims[i], dims[j]);
            if best.is_none_or(|(_, b)| total < b) {
                best = Some(((i, j), total));
            }
        }
    }
    best.expect("at least two axes")
}

/// Palette used by [`toroidal_star_coloring`].
#[cfg(test)]
fn toroidal_palette(dims: &[usize]) -> usize {
    match dims {
        [m, n] => cycle_cycle_palette(*m, *n),
        _ => best_pair(dims).1,
    }
}

/// Star coloring of `C_{l1} □ ... □ C_{ld}` (`d >= 2`, every `li >= 3`).
/// All lengths even gives at most `4d - 1` colors; otherwise a 3-member
/// family of all but two factors is composed with a coloring of the
/// remaining pair, which gives at most `7d - 4` when no length is 3 or 5.
/// Results above that bound carry a note.
pub fn toroidal_star_coloring(dims: &[usize]) -> Result<Colored, ConstructError> {
    let d = dims.len();
    if d < 2 {
        return Err(ConstructError::Parameters(
            "torus needs at least 2 dimensions".into(),
        ));
    }
    if d == 2 {
        return cycle_cycle_star_coloring(dims[0], dims[1]);
    }
    let g = toroidal_graph(dims)?;
    let t = member_count(dims);
    let ((i, j), _) = best_pair(dims);
    let units = front_units(dims, (i, j), t);
    let mut order = Vec::with_capacity(d);
    let mut parts = Vec::with_capacity(units.len());
    for unit in &units {
        order.extend_from_slice(unit);
        parts.push(match unit[..] {
            [_, _] => torus_5_5_family()?,
            [a] => cycle_family(dims[a], t)?,
            _ => unreachable!("units have one or two axes"),
        });
    }
    order.extend([i, j]);
    let front = fold_families(parts)?;
    let pair = cycle_cycle_star_coloring(dims[i], dims[j])?;
    let c_pair = proper_vertex_coloring(&pair.graph);
    let built = compose_with_family(&front, &pair.graph, &pair.coloring, &c_pair)?;
    let c = permute_axes(&built.graph, &built.coloring, &g, &order)?;
    let mut out = certify(g, c, "torus")?;
    let k = out.palette_size();
    let bound = if t == 2 {
        Some(4 * d - 1)
    } else if dims.iter().all(|&l| l > 3) {
        Some(7 * d - 4)
    } else {
        None
    };
    let mut notes: Vec<String> = pair.note.into_iter().collect();
    if let Some(b) = bound.filter(|&b| k > b) {
        notes.push(format!(
            "{k} colors exceeds the usual bound {b} for {d} dimensions"
        ));
    }
    if !notes.is_empty() {
        let msg = notes.join("; ");
        log::warn!("{msg}");
        out.note = Some(msg);
    }
    Ok(out)
}
