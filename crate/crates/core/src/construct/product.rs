//! Colorings of `G □ H` assembled from colorings of the factors.
//!
//! In `cartesian_product(G, H)` the vertex `(a, x)` has index
//! `a * |V(H)| + x`; the first `|E(G)| * |V(H)|` edges are the G-edges of
//! copy `x` (at offset `x * |E(G)|`), followed by the H-edges of copy `a`.

use crate::graph::{cartesian_product, Graph};
use crate::verify::{verify_star, CompatibleFamily, EdgeColoring};

use super::{
    certify, certify_family, proper_vertex_coloring, Colored, ConstructError, Family, VertexColoring,
};

/// Fills a coloring of `G □ H` from per-copy rules: `g_rule(x, e)` for the
/// G-edge `e` in copy `x`, `h_rule(a, e)` for the H-edge `e` in copy `a`.
fn assemble(
    g: &Graph,
    h: &Graph,
    g_rule: impl Fn(usize, usize) -> usize,
    h_rule: impl Fn(usize, usize) -> usize,
) -> Vec<usize> {
    let mut colors =
        Vec::with_capacity(g.edge_count() * h.vertex_count() + g.vertex_count() * h.edge_count());
    for x in 0..h.vertex_count() {
        colors.extend((0..g.edge_count()).map(|e| g_rule(x, e)));
    }
    for a in 0..g.vertex_count() {
        colors.extend((0..h.edge_count()).map(|e| h_rule(a, e)));
    }
    colors
}

fn require_star(g: &Graph, c: &EdgeColoring, what: &str) -> Result<(), ConstructError> {
    let report = verify_star(g, c)?;
    if report.ok {
        Ok(())
    } else {
        Err(ConstructError::Verification {
            context: format!("{what} input"),
            report,
        })
    }
}

/// Star coloring of `G □ H` from star colorings of the factors. G-edges in
/// copy `x` are shifted by `kG * cH(x)` and H-edges by `kG * chi(H)`; the
/// mirrored variant is used instead when its palette is smaller.
pub fn product_star_coloring(
    g: &Graph,
    f_g: &EdgeColoring,
    h: &Graph,
    f_h: &EdgeColoring,
) -> Result<Colored, ConstructError> {
    require_star(g, f_g, "G coloring")?;
    require_star(h, f_h, "H coloring")?;
    let (c_g, c_h) = (proper_vertex_coloring(g), proper_vertex_coloring(h));
    let (kg, kh) = (f_g.palette_size(), f_h.palette_size());
    let product = cartesian_product(g, h)?;
    let f_palette = kg * c_h.palette_size + kh;
    let g_palette = kh * c_g.palette_size + kg;
    let (colors, k) = if f_palette <= g_palette {
        let off = kg * c_h.palette_size;
        let colors = assemble(
            g,
            h,
            |x, e| f_g.color(e) + kg * c_h.color(x),
            |_, e| f_h.color(e) + off,
        );
        (colors, f_palette)
    } else {
        let off = kh * c_g.palette_size;
        let colors = assemble(
            g,
            h,
            |_, e| f_g.color(e) + off,
            |a, e| f_h.color(e) + kh * c_g.color(a),
        );
        (colors, g_palette)
    };
    let c = EdgeColoring::new(&product, colors, k)?;
    certify(product, c, "product coloring")
}

/// Star coloring of `G □ H` from a compatible family of `G`: copy `x` of
/// `G` takes member `cH(x)`, and the H-edges take `fH` shifted past the
/// family palette.
pub fn compose_with_family(
    fam_g: &Family,
    h: &Graph,
    f_h: &EdgeColoring,
    c_h: &VertexColoring,
) -> Result<Colored, ConstructError> {
    let g = &fam_g.graph;
    if fam_g.t() < c_h.palette_size {
        return Err(ConstructError::TooFewMembers {
            t: fam_g.t(),
            needed: c_h.palette_size,
        });
    }
    if !c_h.is_proper(h) {
        return Err(ConstructError::Parameters(
            "vertex coloring of H is not proper".into(),
        ));
    }
    require_star(h, f_h, "H coloring")?;
    let kg = fam_g.k();
    let members = fam_g.family.members();
    let product = cartesian_product(g, h)?;
    let colors = assemble(
        g,
        h,
        |x, e| members[c_h.color(x)].color(e),
        |_, e| f_h.color(e) + kg,
    );
    let c = EdgeColoring::new(&product, colors, kg + f_h.palette_size())?;
    certify(product, c, "family composition")
}

/// Compatible family of `G □ H` on `kG + kH` colors with
/// `min(tG, tH)` members. Member `i` puts `g_{(cH(x)+i) mod tG}` on copy `x`
/// of `G` and `h_{(cG(a)+i) mod tH}` on copy `a` of `H`.
pub fn product_family(
    fam_g: &Family,
    fam_h: &Family,
    c_g: &VertexColoring,
    c_h: &VertexColoring,
) -> Result<Family, ConstructError> {
    let (tg, th) = (fam_g.t(), fam_h.t());
    if tg < c_h.palette_size {
        return Err(ConstructError::TooFewMembers {
            t: tg,
            needed: c_h.palette_size,
        });
    }
    if th < c_g.palette_size {
        return Err(ConstructError::TooFewMembers {
            t: th,
            needed: c_g.palette_size,
        });
    }
    if !c_g.is_proper(&fam_g.graph) || !c_h.is_proper(&fam_h.graph) {
        return Err(ConstructError::Parameters("vertex coloring is not proper".into()));
    }
    let (g, h) = (&fam_g.graph, &fam_h.graph);
    let (gm, hm) = (fam_g.family.members(), fam_h.family.members());
    let kg = fam_g.k();
    let k = kg + fam_h.k();
    let product = cartesian_product(g, h)?;
    let members = (0..tg.min(th))
        .map(|i| {
            let colors = assemble(
                g,
                h,
                |x, e| gm[(c_h.color(x) + i) % tg].color(e),
                |a, e| hm[(c_g.color(a) + i) % th].color(e) + kg,
            );
            EdgeColoring::new(&product, colors, k)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let family = CompatibleFamily::new(members, k)?;
    certify_family(product, family, "product family")
}

/// Family of the `d`-fold product `G □ ... □ G` on `d * kG` colors.
pub fn power_family(fam_g: &Family, d: usize) -> Result<Family, ConstructError> {
    if d == 0 {
        return Err(ConstructError::Parameters("power needs d >= 1".into()));
    }
    let c_g = proper_vertex_coloring(&fam_g.graph);
    let mut acc = fam_g.clone();
    for _ in 1..d {
        let c_acc = proper_vertex_coloring(&acc.graph);
        acc = product_family(&acc, fam_g, &c_acc, &c_g)?;
    }
    Ok(acc)
}

/// Compatible family from a sequence of factor families, folded left.
pub(crate) fn fold_families(parts: Vec<Family>) -> Result<Family, ConstructError> {
    let mut iter = parts.into_iter();
    let first = iter
        .next()
        .ok_or_else(|| ConstructError::Parameters("no factors".into()))?;
    iter.try_fold(first, |acc, f| {
        let (ca, cf) = (
            proper_vertex_coloring(&acc.graph),
            proper_vertex_coloring(&f.graph),
        );
        product_family(&acc, &f, &ca, &cf)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{cycle_family, cycle_star_coloring, path_family};
    use crate::graph::{cycle_graph, path_graph};
    use crate::verify::verify_compatible_family;

    fn single_edge() -> (Graph, EdgeColoring) {
        let p2 = path_graph(2).unwrap();
        let c = EdgeColoring::new(&p2, vec![0], 1).unwrap();
        (p2, c)
    }

    #[test]
    fn product_of_two_edges_is_a_three_colored_square() {
        let (p2, c) = single_edge();
        let out = product_star_coloring(&p2, &c, &p2, &c).unwrap();
        assert_eq!(out.graph.edge_count(), 4);
        assert!(out.palette_size() <= 3);
    }

    #[test]
    fn edge_times_even_cycle() {
        let (p2, c) = single_edge();
        let c6 = cycle_star_coloring(6).unwrap();
        let out = product_star_coloring(&p2, &c, &c6.graph, &c6.coloring).unwrap();
        assert!(out.palette_size() <= 5);
    }

    #[test]
    fn square_times_square() {
        let c4 = cycle_star_coloring(4).unwrap();
        let out = product_star_coloring(&c4.graph, &c4.coloring, &c4.graph, &c4.coloring).unwrap();
        assert!(out.palette_size() <= 9);
    }

    #[test]
    fn rejects_non_star_input() {
        let c4 = cycle_graph(4).unwrap();
        let bad = EdgeColoring::new(&c4, vec![0, 1, 0, 1], 2).unwrap();
        let (p2, c) = single_edge();
        assert!(product_star_coloring(&c4, &bad, &p2, &c).is_err());
    }

    #[test]
    fn composition_restricts_to_members_and_shifted_factor() {
        let fam = path_family(5, 2).unwrap();
        let h = path_graph(4).unwrap();
        let f_h = EdgeColoring::new(&h, vec![0, 1, 0], 2).unwrap();
        let c_h = proper_vertex_coloring(&h);
        let out = compose_with_family(&fam, &h, &f_h, &c_h).unwrap();
        assert_eq!(out.palette_size(), 6);
        let eg = fam.graph.edge_count();
        for x in 0..h.vertex_count() {
            let row = &out.coloring.colors()[x * eg..(x + 1) * eg];
            assert_eq!(row, fam.family.member(c_h.color(x)).colors());
        }
        let base = eg * h.vertex_count();
        for a in 0..fam.graph.vertex_count() {
            let col = &out.coloring.colors()[base + a * 3..base + (a + 1) * 3];
            assert_eq!(col, &[4, 5, 4]);
        }
    }

    #[test]
    fn composition_needs_enough_members() {
        let fam = cycle_family(6, 2).unwrap();
        let c5 = cycle_star_coloring(5).unwrap();
        let c_h = proper_vertex_coloring(&c5.graph);
        let err = compose_with_family(&fam, &c5.graph, &c5.coloring, &c_h).unwrap_err();
        assert!(matches!(err, ConstructError::TooFewMembers { t: 2, needed: 3 }));
    }

    #[test]
    fn composition_with_even_cycles() {
        let fam = cycle_family(6, 2).unwrap();
        let c8 = cycle_star_coloring(8).unwrap();
        let c_h = proper_vertex_coloring(&c8.graph);
        let out = compose_with_family(&fam, &c8.graph, &c8.coloring, &c_h).unwrap();
        assert!(out.palette_size() <= 7);
    }

    #[test]
    fn single_member_family_on_one_vertex() {
        let fam = cycle_family(6, 2).unwrap();
        let one = Family {
            graph: fam.graph.clone(),
            family: CompatibleFamily::new(vec![fam.family.member(0).clone()], fam.k()).unwrap(),
        };
        let p1 = path_graph(1).unwrap();
        let empty = EdgeColoring::new(&p1, vec![], 0).unwrap();
        let out = compose_with_family(&one, &p1, &empty, &proper_vertex_coloring(&p1)).unwrap();
        assert_eq!(out.coloring.colors(), fam.family.member(0).colors());
    }

    #[test]
    fn families_of_products() {
        let p4 = path_family(4, 2).unwrap();
        let c = proper_vertex_coloring(&p4.graph);
        let f = product_family(&p4, &p4, &c, &c).unwrap();
        assert_eq!((f.k(), f.t()), (8, 2));
        let (c6, c8) = (cycle_family(6, 2).unwrap(), cycle_family(8, 2).unwrap());
        let f = product_family(
            &c6,
            &c8,
            &proper_vertex_coloring(&c6.graph),
            &proper_vertex_coloring(&c8.graph),
        )
        .unwrap();
        assert_eq!((f.k(), f.t()), (8, 2));
        assert!(verify_compatible_family(&f.graph, &f.family).unwrap().ok);
    }

    #[test]
    fn product_family_precondition() {
        let p4 = path_family(4, 2).unwrap();
        let one = Family {
            graph: p4.graph.clone(),
            family: CompatibleFamily::new(vec![p4.family.member(0).clone()], 4).unwrap(),
        };
        let c = proper_vertex_coloring(&p4.graph);
        assert!(matches!(
            product_family(&one, &p4, &c, &c),
            Err(ConstructError::TooFewMembers { t: 1, needed: 2 })
        ));
    }

    #[test]
    fn powers() {
        let p3 = path_family(3, 2).unwrap();
        assert_eq!(power_family(&p3, 1).unwrap(), p3);
        let cube = power_family(&p3, 3).unwrap();
        assert_eq!((cube.k(), cube.t()), (12, 2));
        assert_eq!(cube.graph.vertex_count(), 27);
        let c4 = cycle_family(4, 2).unwrap();
        let sq = power_family(&c4, 2).unwrap();
        assert_eq!((sq.k(), sq.t()), (8, 2));
    }
}
