//! JSON and DOT formats.
//!
//! Graph: `{"n": 4, "edges": [[0,1],[1,2],[2,3],[3,0]], "factors": [{"kind":"cycle","len":4}]}`.
//! The `factors` entry is optional. Coloring: `{"k": 3, "colors": [...]}`.
//! Both lists follow the canonical edge order.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Factor, Graph, GraphError};
use crate::verify::{ColoringError, CompatibleFamily, EdgeColoring};

/// Colors used for palette indices `0..10` in DOT output.
pub const DOT_PALETTE: [&str; 10] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628", "#f781bf", "#999999", "#17becf",
    "#bcbd22",
];

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<Factor>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringFile {
    pub k: usize,
    pub colors: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyFile {
    pub k: usize,
    pub t: usize,
    pub members: Vec<Vec<usize>>,
}

impl GraphFile {
    pub fn from_graph(g: &Graph) -> Self {
        let label = g.label();
        GraphFile {
            n: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            factors: label.is_structured().then(|| label.factors().to_vec()),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        let edges = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        match &self.factors {
            Some(f) => Graph::with_factors(self.n, edges, f.clone()),
            None => Graph::new(self.n, edges),
        }
    }
}

impl ColoringFile {
    pub fn from_coloring(c: &EdgeColoring) -> Self {
        ColoringFile {
            k: c.palette_size(),
            colors: c.colors().to_vec(),
        }
    }

    pub fn bind(&self, g: &Graph) -> Result<EdgeColoring, ColoringError> {
        EdgeColoring::new(g, self.colors.clone(), self.k)
    }
}

impl FamilyFile {
    pub fn from_family(f: &CompatibleFamily) -> Self {
        FamilyFile {
            k: f.k(),
            t: f.t(),
            members: f.members().iter().map(|m| m.colors().to_vec()).collect(),
        }
    }

    pub fn bind(&self, g: &Graph) -> Result<CompatibleFamily, ColoringError> {
        let members = self
            .members
            .iter()
            .map(|m| EdgeColoring::new(g, m.clone(), self.k))
            .collect::<Result<Vec<_>, _>>()?;
        CompatibleFamily::new(members, self.k)
    }
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphFile::from_graph(g)).expect("graph file serializes")
}

pub fn graph_from_json(s: &str) -> Result<Graph, IoError> {
    let file: GraphFile = serde_json::from_str(s)?;
    Ok(file.to_graph()?)
}

pub fn coloring_to_json(c: &EdgeColoring) -> String {
    serde_json::to_string(&ColoringFile::from_coloring(c)).expect("coloring file serializes")
}

pub fn coloring_from_json(g: &Graph, s: &str) -> Result<EdgeColoring, IoError> {
    let file: ColoringFile = serde_json::from_str(s)?;
    Ok(file.bind(g)?)
}

pub fn family_to_json(f: &CompatibleFamily) -> String {
    serde_json::to_string(&FamilyFile::from_family(f)).expect("family file serializes")
}

pub fn family_from_json(g: &Graph, s: &str) -> Result<CompatibleFamily, IoError> {
    let file: FamilyFile = serde_json::from_str(s)?;
    Ok(file.bind(g)?)
}

/// DOT rendering of `g`, with edge labels and colors when `c` is given.
/// Indices past the fixed palette get a label only.
pub fn to_dot(g: &Graph, c: Option<&EdgeColoring>) -> String {
    let mut out = String::from("graph G {\n  node [shape=point];\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v};");
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        match c.map(|c| c.color(e)) {
            Some(k) if k < DOT_PALETTE.len() => {
                let _ = writeln!(out, "  {u} -- {v} [label=\"{k}\", color=\"{}\"];", DOT_PALETTE[k]);
            }
            Some(k) => {
                let _ = writeln!(out, "  {u} -- {v} [label=\"{k}\"];");
            }
            None => {
                let _ = writeln!(out, "  {u} -- {v};");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, grid_graph};

    #[test]
    fn graph_round_trip() {
        let g = grid_graph(&[3, 4]).unwrap();
        let back = graph_from_json(&graph_to_json(&g)).unwrap();
        assert_eq!(back, g);
        let plain = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let s = graph_to_json(&plain);
        assert!(!s.contains("factors"));
        assert_eq!(graph_from_json(&s).unwrap(), plain);
    }

    #[test]
    fn coloring_round_trip() {
        let g = cycle_graph(5).unwrap();
        let c = EdgeColoring::new(&g, vec![0, 1, 2, 0, 3], 4).unwrap();
        let s = coloring_to_json(&c);
        assert_eq!(s, r#"{"k":4,"colors":[0,1,2,0,3]}"#);
        assert_eq!(coloring_from_json(&g, &s).unwrap(), c);
        assert!(coloring_from_json(&g, r#"{"k":2,"colors":[0,1]}"#).is_err());
    }

    #[test]
    fn bad_factor_label_is_rejected() {
        let s = r#"{"n":4,"edges":[[0,2],[1,3]],"factors":[{"kind":"path","len":4}]}"#;
        assert!(matches!(graph_from_json(s), Err(IoError::Graph(_))));
    }

    #[test]
    fn dot_output() {
        let g = cycle_graph(3).unwrap();
        let c = EdgeColoring::new(&g, vec![0, 1, 11], 12).unwrap();
        let dot = to_dot(&g, Some(&c));
        assert!(dot.contains("0 -- 1 [label=\"0\", color=\"#e41a1c\"]"));
        assert!(dot.contains("2 -- 0 [label=\"11\"];"));
        assert!(to_dot(&g, None).contains("1 -- 2;"));
    }
}
