//! Explicit star edge colorings and compatible families for products of
//! paths and cycles.
//!
//! Every public constructor verifies its output before returning it, so a
//! returned [`Colored`] or [`Family`] is always a valid certificate.

mod cycles;
mod families;
mod grid;
mod path_cycle;
mod product;
mod tables;
mod torus;
mod vertex;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::verify::{
    verify_compatible_family, verify_star, ColoringError, CompatibleFamily, EdgeColoring, VerificationReport,
};

pub use cycles::{cycle_family, cycle_family_with_trace, cycle_star_coloring, CycleFamilyTrace};
pub use families::{path_family, path_star_coloring};
pub use grid::{grid2_star_coloring, grid_d_star_coloring, hypercube_star_coloring};
pub use path_cycle::path_cycle_star_coloring;
pub use product::{compose_with_family, power_family, product_family, product_star_coloring};
pub use torus::{cycle_cycle_star_coloring, toroidal_star_coloring};
pub use vertex::{proper_vertex_coloring, VertexColoring};

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("invalid parameters: {0}")]
    Parameters(String),
    #[error("family has {t} members but the other factor needs {needed}")]
    TooFewMembers { t: usize, needed: usize },
    #[error("no perfect matching for the closing colors (Hall violator {left:?})")]
    Matching {
        left: Vec<usize>,
        trace: Box<CycleFamilyTrace>,
    },
    #[error("{context}: output failed verification: {report:?}")]
    Verification {
        context: String,
        report: VerificationReport,
    },
}

/// A verified star edge coloring together with the graph it colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colored {
    pub graph: Graph,
    pub coloring: EdgeColoring,
    /// Set when the dispatcher built the coloring on the factors in swapped
    /// order and moved it back.
    pub transposed: bool,
    /// Free-form remark, set when a result departs from the usual bound.
    pub note: Option<String>,
}

impl Colored {
    pub fn palette_size(&self) -> usize {
        self.coloring.palette_size()
    }
}

/// A verified compatible family together with its graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    pub graph: Graph,
    pub family: CompatibleFamily,
}

impl Family {
    pub fn k(&self) -> usize {
        self.family.k()
    }

    pub fn t(&self) -> usize {
        self.family.t()
    }
}

fn certify(graph: Graph, coloring: EdgeColoring, context: &str) -> Result<Colored, ConstructError> {
    let report = verify_star(&graph, &coloring)?;
    if !report.ok {
        return Err(ConstructError::Verification {
            context: context.to_string(),
            report,
        });
    }
    Ok(Colored {
        graph,
        coloring,
        transposed: false,
        note: None,
    })
}

fn certify_family(graph: Graph, family: CompatibleFamily, context: &str) -> Result<Family, ConstructError> {
    let report = verify_compatible_family(&graph, &family)?;
    if !report.ok {
        return Err(ConstructError::Verification {
            context: context.to_string(),
            report,
        });
    }
    Ok(Family { graph, family })
}

/// Colors every edge of a product by `rule(axis, coords)`, where `coords`
/// are those of the edge's first endpoint; along a cycle axis the second
/// endpoint is one step further modulo the length.
fn color_by_rule(
    g: &Graph,
    palette: usize,
    rule: impl Fn(usize, &[usize]) -> usize,
) -> Result<EdgeColoring, ConstructError> {
    let label = g.label();
    let colors = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, _))| rule(label.edge_axis(e), &label.coords(u)))
        .collect();
    Ok(EdgeColoring::new(g, colors, palette)?)
}

/// Moves a coloring of a product onto `dst`, another product of the same
/// factors in a different axis order: axis `k` of `src` is axis `perm[k]` of
/// `dst`.
fn permute_axes(
    src: &Graph,
    coloring: &EdgeColoring,
    dst: &Graph,
    perm: &[usize],
) -> Result<EdgeColoring, ConstructError> {
    let (sl, dl) = (src.label(), dst.label());
    let moved = coloring.transfer(src, dst, |v| {
        let c = sl.coords(v);
        let mut coords = vec![0; perm.len()];
        for (k, &p) in perm.iter().enumerate() {
            coords[p] = c[k];
        }
        dl.index(&coords)
    });
    Ok(moved?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cartesian_product, cycle_graph, path_graph};

    #[test]
    fn axis_permutation_round_trip() {
        let p3 = path_graph(3).unwrap();
        let c4 = cycle_graph(4).unwrap();
        let a = cartesian_product(&p3, &c4).unwrap();
        let b = cartesian_product(&c4, &p3).unwrap();
        let colors: Vec<usize> = (0..a.edge_count()).collect();
        let c = EdgeColoring::new(&a, colors.clone(), a.edge_count()).unwrap();
        let moved = permute_axes(&a, &c, &b, &[1, 0]).unwrap();
        let back = permute_axes(&b, &moved, &a, &[1, 0]).unwrap();
        assert_eq!(back.colors(), &colors[..]);
    }
}
