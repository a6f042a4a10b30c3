use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::{FactorKind, Graph};

/// Proper vertex coloring with colors `0..palette_size`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexColoring {
    pub colors: Vec<usize>,
    pub palette_size: usize,
}

impl VertexColoring {
    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        g.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
            && self.colors.iter().all(|&c| c < self.palette_size)
    }
}

/// A proper vertex coloring. Exact for bipartite graphs and for products of
/// paths and cycles; other graphs get a greedy coloring.
pub fn proper_vertex_coloring(g: &Graph) -> VertexColoring {
    let n = g.vertex_count();
    if g.edge_count() == 0 {
        return VertexColoring {
            colors: vec![0; n],
            palette_size: n.min(1),
        };
    }
    if let Some(colors) = two_coloring(g) {
        return VertexColoring {
            colors,
            palette_size: 2,
        };
    }
    let label = g.label();
    if label.is_structured() {
        // Sum of per-factor colorings modulo the largest factor chromatic
        // number; the only non-bipartite factors here are odd cycles.
        let colors = (0..n)
            .map(|v| {
                let c = label.coords(v);
                let s: usize = c
                    .iter()
                    .zip(label.factors())
                    .map(|(&x, f)| match f.kind {
                        FactorKind::Cycle if f.len % 2 == 1 && x == f.len - 1 => 2,
                        _ => x % 2,
                    })
                    .sum();
                s % 3
            })
            .collect();
        return VertexColoring {
            colors,
            palette_size: 3,
        };
    }
    greedy(g)
}

fn two_coloring(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut color = vec![usize::MAX; n];
    for s in 0..n {
        if color[s] != usize::MAX {
            continue;
        }
        color[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &(w, _) in g.adjacency(u) {
                if color[w] == usize::MAX {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

fn greedy(g: &Graph) -> VertexColoring {
    let n = g.vertex_count();
    let mut colors = vec![usize::MAX; n];
    let mut palette = 0;
    for v in 0..n {
        let mut used = vec![false; g.degree(v) + 1];
        for &(w, _) in g.adjacency(v) {
            if colors[w] < used.len() {
                used[colors[w]] = true;
            }
        }
        let c = used.iter().position(|&u| !u).expect("degree + 1 slots");
        colors[v] = c;
        palette = palette.max(c + 1);
    }
    VertexColoring {
        colors,
        palette_size: palette,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, path_graph, toroidal_graph, Graph};

    #[test]
    fn chromatic_numbers() {
        let p4 = proper_vertex_coloring(&path_graph(4).unwrap());
        assert_eq!(p4.palette_size, 2);
        let c5 = cycle_graph(5).unwrap();
        let c = proper_vertex_coloring(&c5);
        assert_eq!(c.palette_size, 3);
        assert!(c.is_proper(&c5));
        let t = toroidal_graph(&[4, 6]).unwrap();
        assert_eq!(proper_vertex_coloring(&t).palette_size, 2);
        assert_eq!(proper_vertex_coloring(&path_graph(1).unwrap()).palette_size, 1);
    }

    #[test]
    fn odd_products_use_three_colors() {
        for dims in [[3, 3], [5, 4], [3, 7], [9, 5]] {
            let g = toroidal_graph(&dims).unwrap();
            let c = proper_vertex_coloring(&g);
            assert_eq!(c.palette_size, 3, "{dims:?}");
            assert!(c.is_proper(&g), "{dims:?}");
        }
    }

    #[test]
    fn unlabeled_graph_falls_back_to_greedy() {
        let k4 = Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let c = proper_vertex_coloring(&k4);
        assert_eq!(c.palette_size, 4);
        assert!(c.is_proper(&k4));
    }
}
