//! Simple undirected graphs with product-aware labelling.
//!
//! Every graph carries a [`ProductLabel`]: the list of factors it was built
//! from and, for each edge, the factor axis it runs along. A graph that was
//! not built as a product (for example one read from a file without a
//! `factors` entry) has a single opaque factor.
//!
//! Vertex and edge orders are canonical and 0-based:
//!
//! * `path_graph(n)`: edges `{x, x+1}` for `x = 0..n-1`.
//! * `cycle_graph(n)`: edges `{x, x+1 mod n}` for `x = 0..n`, so edge `x`
//!   leaves vertex `x`.
//! * `cartesian_product(G, H)`: vertex `(a, x)` has index `a * |H| + x`;
//!   edges are all `G`-axis edges grouped by `H`-vertex, then all `H`-axis
//!   edges grouped by `G`-vertex.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashSet;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("a path needs at least 1 vertex")]
    EmptyPath,
    #[error("dimension list is empty")]
    EmptyDims,
    #[error("dimension {len} is below the minimum of {min}")]
    DimTooSmall { len: usize, min: usize },
    #[error("hypercube dimension must be at least 1")]
    ZeroDimension,
    #[error("vertex count overflows")]
    Overflow,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge endpoint {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("factor label inconsistent with graph: {0}")]
    InvalidLabel(String),
}

/// Kind of one Cartesian factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FactorKind {
    Path,
    Cycle,
    /// A graph with no known path/cycle structure.
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factor {
    pub kind: FactorKind,
    pub len: usize,
}

impl Factor {
    pub fn path(len: usize) -> Self {
        Factor {
            kind: FactorKind::Path,
            len,
        }
    }

    pub fn cycle(len: usize) -> Self {
        Factor {
            kind: FactorKind::Cycle,
            len,
        }
    }
}

/// Factor structure of a (possibly trivial) Cartesian product.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProductLabel {
    factors: Vec<Factor>,
    edge_axis: Vec<usize>,
}

impl ProductLabel {
    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn factor_sizes(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.len).collect()
    }

    /// Axis along which edge `e` runs.
    pub fn edge_axis(&self, e: usize) -> usize {
        self.edge_axis[e]
    }

    /// Mixed-radix coordinates of vertex `v`, first factor most significant.
    pub fn coords(&self, mut v: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (slot, f) in out.iter_mut().zip(&self.factors).rev() {
            *slot = v % f.len;
            v /= f.len;
        }
        out
    }

    /// Inverse of [`ProductLabel::coords`].
    pub fn index(&self, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.factors.len());
        coords
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&c, f)| acc * f.len + c)
    }

    /// True when every factor is a path or a cycle.
    pub fn is_structured(&self) -> bool {
        self.factors.iter().all(|f| f.kind != FactorKind::Other)
    }
}

/// Immutable simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<(usize, usize)>>,
    max_degree: usize,
    label: ProductLabel,
}

impl Graph {
    /// Builds a graph with a single opaque factor.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let label = ProductLabel {
            factors: vec![Factor {
                kind: FactorKind::Other,
                len: n,
            }],
            edge_axis: vec![0; edges.len()],
        };
        Self::build(n, edges, label)
    }

    /// Builds a graph and attaches the given factor list, checking that the
    /// edges are consistent with it.
    pub fn with_factors(
        n: usize,
        edges: Vec<(usize, usize)>,
        factors: Vec<Factor>,
    ) -> Result<Self, GraphError> {
        let product = factors
            .iter()
            .try_fold(1usize, |acc, f| acc.checked_mul(f.len))
            .ok_or(GraphError::Overflow)?;
        if factors.is_empty() || product != n {
            return Err(GraphError::InvalidLabel(format!(
                "factor sizes multiply to {product}, graph has {n} vertices"
            )));
        }
        let mut label = ProductLabel {
            factors,
            edge_axis: Vec::with_capacity(edges.len()),
        };
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u.max(v), n });
            }
            let (cu, cv) = (label.coords(u), label.coords(v));
            let differing: Vec<usize> = (0..cu.len()).filter(|&i| cu[i] != cv[i]).collect();
            if differing.len() != 1 {
                return Err(GraphError::InvalidLabel(format!(
                    "edge {{{u}, {v}}} changes {} coordinates",
                    differing.len()
                )));
            }
            label.edge_axis.push(differing[0]);
        }
        let g = Self::build(n, edges, label)?;
        g.check_label().map_err(GraphError::InvalidLabel)?;
        Ok(g)
    }

    fn build(n: usize, edges: Vec<(usize, usize)>, label: ProductLabel) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = HashSet::with_capacity(edges.len());
        for (idx, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adjacency[u].push((v, idx));
            adjacency[v].push((u, idx));
        }
        let max_degree = adjacency.iter().map(Vec::len).max().unwrap_or(0);
        Ok(Graph {
            n,
            edges,
            adjacency,
            max_degree,
            label,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// `(neighbor, edge index)` pairs at `v`.
    pub fn adjacency(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn label(&self) -> &ProductLabel {
        &self.label
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adjacency
            .get(u)?
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
    }

    /// Endpoint of `e` other than `v`.
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Structural hash of the vertex count and canonical edge list.
    pub fn fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.n.hash(&mut h);
        self.edges.hash(&mut h);
        h.finish()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    /// Number of paths with four edges (five distinct vertices), each counted
    /// once regardless of direction.
    pub fn four_path_count(&self) -> usize {
        let mut directed = 0;
        for v0 in 0..self.n {
            for &(v1, _) in &self.adjacency[v0] {
                for &(v2, _) in &self.adjacency[v1] {
                    if v2 == v0 {
                        continue;
                    }
                    for &(v3, _) in &self.adjacency[v2] {
                        if v3 == v1 || v3 == v0 {
                            continue;
                        }
                        directed += self.adjacency[v3]
                            .iter()
                            .filter(|&&(v4, _)| v4 != v2 && v4 != v1 && v4 != v0)
                            .count();
                    }
                }
            }
        }
        directed / 2
    }

    /// Checks the [`ProductLabel`] invariant on every edge: endpoints differ
    /// in exactly the labelled axis, by one along a path and by one modulo
    /// the length along a cycle.
    pub fn check_label(&self) -> Result<(), String> {
        let product: Option<usize> = self
            .label
            .factors
            .iter()
            .try_fold(1usize, |acc, f| acc.checked_mul(f.len));
        if product != Some(self.n) {
            return Err("factor sizes do not multiply to the vertex count".into());
        }
        if self.label.edge_axis.len() != self.edges.len() {
            return Err("edge axis list has the wrong length".into());
        }
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            let axis = self.label.edge_axis[e];
            let (cu, cv) = (self.label.coords(u), self.label.coords(v));
            for (i, (&a, &b)) in cu.iter().zip(&cv).enumerate() {
                if i != axis && a != b {
                    return Err(format!("edge {e} changes axis {i}, labelled {axis}"));
                }
            }
            let f = self.label.factors[axis];
            let diff = cu[axis].abs_diff(cv[axis]);
            let ok = match f.kind {
                FactorKind::Path => diff == 1,
                FactorKind::Cycle => diff == 1 || diff == f.len - 1,
                FactorKind::Other => diff != 0,
            };
            if !ok {
                return Err(format!("edge {e} is not a step along axis {axis}"));
            }
        }
        Ok(())
    }
}

pub fn path_graph(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::EmptyPath);
    }
    let edges = (0..n - 1).map(|x| (x, x + 1)).collect();
    let label = ProductLabel {
        factors: vec![Factor::path(n)],
        edge_axis: vec![0; n - 1],
    };
    Graph::build(n, edges, label)
}

pub fn cycle_graph(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::CycleTooShort(n));
    }
    let edges = (0..n).map(|x| (x, (x + 1) % n)).collect();
    let label = ProductLabel {
        factors: vec![Factor::cycle(n)],
        edge_axis: vec![0; n],
    };
    Graph::build(n, edges, label)
}

pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let (gn, hn) = (g.vertex_count(), h.vertex_count());
    let n = gn.checked_mul(hn).ok_or(GraphError::Overflow)?;
    let mut edges = Vec::with_capacity(g.edge_count() * hn + gn * h.edge_count());
    let mut edge_axis = Vec::with_capacity(edges.capacity());
    let g_axes = g.label.factors.len();
    for x in 0..hn {
        for (e, &(a, b)) in g.edges.iter().enumerate() {
            edges.push((a * hn + x, b * hn + x));
            edge_axis.push(g.label.edge_axis[e]);
        }
    }
    for a in 0..gn {
        for (e, &(x, y)) in h.edges.iter().enumerate() {
            edges.push((a * hn + x, a * hn + y));
            edge_axis.push(g_axes + h.label.edge_axis[e]);
        }
    }
    let mut factors = g.label.factors.clone();
    factors.extend_from_slice(&h.label.factors);
    Graph::build(n, edges, ProductLabel { factors, edge_axis })
}

fn fold_product(factors: Vec<Graph>) -> Result<Graph, GraphError> {
    let mut iter = factors.into_iter();
    let first = iter.next().ok_or(GraphError::EmptyDims)?;
    iter.try_fold(first, |acc, f| cartesian_product(&acc, &f))
}

/// `P_{l1} □ ... □ P_{ld}`, left-associated.
pub fn grid_graph(dims: &[usize]) -> Result<Graph, GraphError> {
    if dims.is_empty() {
        return Err(GraphError::EmptyDims);
    }
    if let Some(&len) = dims.iter().find(|&&l| l < 2) {
        return Err(GraphError::DimTooSmall { len, min: 2 });
    }
    fold_product(dims.iter().map(|&l| path_graph(l)).collect::<Result<_, _>>()?)
}

/// `Q_d`, the `d`-fold product of `P_2`.
pub fn hypercube(d: usize) -> Result<Graph, GraphError> {
    if d == 0 {
        return Err(GraphError::ZeroDimension);
    }
    grid_graph(&vec![2; d])
}

/// `C_{l1} □ ... □ C_{ld}`, left-associated.
pub fn toroidal_graph(dims: &[usize]) -> Result<Graph, GraphError> {
    if dims.is_empty() {
        return Err(GraphError::EmptyDims);
    }
    if let Some(&len) = dims.iter().find(|&&l| l < 3) {
        return Err(GraphError::DimTooSmall { len, min: 3 });
    }
    fold_product(dims.iter().map(|&l| cycle_graph(l)).collect::<Result<_, _>>()?)
}

/// `P_m □ C_n`.
pub fn path_cycle_graph(m: usize, n: usize) -> Result<Graph, GraphError> {
    cartesian_product(&path_graph(m)?, &cycle_graph(n)?)
}

/// Builds the graph described by a factor list (used when reading files).
pub fn from_factors(factors: &[Factor]) -> Result<Graph, GraphError> {
    let parts = factors
        .iter()
        .map(|f| match f.kind {
            FactorKind::Path => path_graph(f.len),
            FactorKind::Cycle => cycle_graph(f.len),
            FactorKind::Other => Err(GraphError::InvalidLabel(
                "opaque factors cannot be rebuilt".into(),
            )),
        })
        .collect::<Result<Vec<_>, _>>()?;
    fold_product(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_paths_and_cycles() {
        let p1 = path_graph(1).unwrap();
        assert_eq!((p1.vertex_count(), p1.edge_count()), (1, 0));
        let p3 = path_graph(3).unwrap();
        assert_eq!(p3.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(p3.max_degree(), 2);
        let p5 = path_graph(5).unwrap();
        assert_eq!((p5.edge_count(), p5.max_degree()), (4, 2));

        let c3 = cycle_graph(3).unwrap();
        assert_eq!((c3.edge_count(), c3.max_degree()), (3, 2));
        let c4 = cycle_graph(4).unwrap();
        assert_eq!(c4.edges(), &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(cycle_graph(15).unwrap().edge_count(), 15);
        assert_eq!(cycle_graph(2), Err(GraphError::CycleTooShort(2)));
        assert_eq!(path_graph(0), Err(GraphError::EmptyPath));
    }

    #[test]
    fn products() {
        let p2 = path_graph(2).unwrap();
        let sq = cartesian_product(&p2, &p2).unwrap();
        assert_eq!((sq.vertex_count(), sq.edge_count()), (4, 4));
        assert_eq!(sq.degree_sequence(), vec![2; 4]);

        let pc = cartesian_product(&p2, &cycle_graph(4).unwrap()).unwrap();
        assert_eq!((pc.vertex_count(), pc.edge_count()), (8, 12));
        assert!((0..8).all(|v| pc.degree(v) == 3));

        let c4c4 = toroidal_graph(&[4, 4]).unwrap();
        let q4 = hypercube(4).unwrap();
        assert_eq!((c4c4.vertex_count(), c4c4.edge_count()), (16, 32));
        assert_eq!(c4c4.degree_sequence(), q4.degree_sequence());
        assert_eq!(c4c4.four_path_count(), q4.four_path_count());
    }

    #[test]
    fn named_families() {
        let q3 = hypercube(3).unwrap();
        assert_eq!((q3.vertex_count(), q3.edge_count()), (8, 12));
        let g = grid_graph(&[2, 7]).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (14, 19));
        let t = toroidal_graph(&[4, 4, 4]).unwrap();
        assert_eq!((t.vertex_count(), t.edge_count()), (64, 192));
        assert!((0..64).all(|v| t.degree(v) == 6));
        assert_eq!(grid_graph(&[]), Err(GraphError::EmptyDims));
        assert_eq!(
            toroidal_graph(&[4, 2]),
            Err(GraphError::DimTooSmall { len: 2, min: 3 })
        );
    }

    #[test]
    fn canonical_product_order() {
        let g = cartesian_product(&path_graph(2).unwrap(), &path_graph(3).unwrap()).unwrap();
        // P_2-axis edges grouped by the P_3 vertex, then P_3-axis edges by P_2 vertex.
        assert_eq!(
            g.edges(),
            &[(0, 3), (1, 4), (2, 5), (0, 1), (1, 2), (3, 4), (4, 5)]
        );
        assert_eq!(g.label().coords(4), vec![1, 1]);
        assert_eq!(g.label().index(&[1, 2]), 5);
        assert_eq!(g.label().edge_axis(0), 0);
        assert_eq!(g.label().edge_axis(3), 1);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(2, vec![(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::new(2, vec![(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(1, 0))
        );
        assert!(matches!(
            Graph::new(2, vec![(0, 2)]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
        assert!(Graph::with_factors(4, vec![(0, 3)], vec![Factor::path(2), Factor::path(2)]).is_err());
    }

    #[test]
    fn from_factor_list_matches_generators() {
        let g = from_factors(&[Factor::path(3), Factor::cycle(4)]).unwrap();
        assert_eq!(g, path_cycle_graph(3, 4).unwrap());
        let h =
            Graph::with_factors(g.vertex_count(), g.edges().to_vec(), g.label().factors().to_vec()).unwrap();
        assert_eq!(h, g);
    }
}
