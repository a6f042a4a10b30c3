//! Python bindings for `starlit`. Graphs cross the boundary as a vertex
//! count plus an edge list, colorings as a list of colors in edge order.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use starlit::construct::{
    cycle_cycle_star_coloring, cycle_star_coloring, grid2_star_coloring, grid_d_star_coloring,
    hypercube_star_coloring, path_cycle_star_coloring, path_star_coloring, toroidal_star_coloring, Colored,
};
use starlit::graph::Graph;
use starlit::solve::{star_chromatic_index_exact, SearchLimits, SolveStatus};
use starlit::verify::{self, EdgeColoring};

type Edges = Vec<(usize, usize)>;

/// `(n, edges, colors, palette, note)`.
type Built = (usize, Edges, Vec<usize>, usize, Option<String>);

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn build(n: usize, edges: Edges) -> PyResult<Graph> {
    Graph::new(n, edges).map_err(value_error)
}

fn construct(family: &str, params: &[usize]) -> PyResult<Colored> {
    let arity = |k: usize| {
        if params.len() == k {
            Ok(())
        } else {
            Err(value_error(format!(
                "{family} takes {k} parameter(s), got {}",
                params.len()
            )))
        }
    };
    let built = match family {
        "path" => arity(1).map(|_| path_star_coloring(params[0]))?,
        "cycle" => arity(1).map(|_| cycle_star_coloring(params[0]))?,
        "grid" if params.len() == 2 => grid2_star_coloring(params[0], params[1]),
        "grid" => grid_d_star_coloring(params),
        "hypercube" => arity(1).map(|_| hypercube_star_coloring(params[0]))?,
        "path-cycle" => arity(2).map(|_| path_cycle_star_coloring(params[0], params[1]))?,
        "cycle-cycle" => arity(2).map(|_| cycle_cycle_star_coloring(params[0], params[1]))?,
        "torus" => toroidal_star_coloring(params),
        other => return Err(value_error(format!("unknown family {other:?}"))),
    };
    built.map_err(value_error)
}

/// Builds a named family and returns `(n, edges, colors, palette, note)`.
#[pyfunction]
fn star_coloring(family: &str, params: Vec<usize>) -> PyResult<Built> {
    let c = construct(family, &params)?;
    Ok((
        c.graph.vertex_count(),
        c.graph.edges().to_vec(),
        c.coloring.colors().to_vec(),
        c.palette_size(),
        c.note,
    ))
}

/// Checks a star edge coloring. Returns `(ok, failure_kind, vertices)`.
#[pyfunction]
fn verify_star(n: usize, edges: Edges, colors: Vec<usize>) -> PyResult<(bool, Option<String>, Vec<usize>)> {
    let g = build(n, edges)?;
    let c = EdgeColoring::from_colors(&g, colors).map_err(value_error)?;
    let report = verify::verify_star(&g, &c).map_err(value_error)?;
    let kind = report
        .failure_kind
        .map(|k| serde_json::to_value(k).map(|v| v.as_str().unwrap_or_default().to_string()))
        .transpose()
        .map_err(value_error)?;
    let vertices = report
        .witness
        .and_then(|w| {
            let v = serde_json::to_value(w).unwrap_or_default();
            v["vertices"]
                .as_array()
                .map(|a| a.iter().filter_map(|x| x.as_u64()).map(|x| x as usize).collect())
        })
        .unwrap_or_default();
    Ok((report.ok, kind, vertices))
}

/// Exact star chromatic index. Returns `(value, colors)`, or `None` when no
/// coloring exists within `max_colors`. Raises when a budget runs out.
#[pyfunction]
#[pyo3(signature = (n, edges, max_colors = 16, node_budget = None, seconds = None))]
fn star_chromatic_index(
    py: Python<'_>,
    n: usize,
    edges: Edges,
    max_colors: usize,
    node_budget: Option<u64>,
    seconds: Option<f64>,
) -> PyResult<Option<(usize, Vec<usize>)>> {
    let g = build(n, edges)?;
    let mut limits = SearchLimits::default().with_max_colors(max_colors);
    if let Some(b) = node_budget {
        limits = limits.with_node_budget(b);
    }
    if let Some(s) = seconds {
        limits = limits.with_time_budget(std::time::Duration::from_secs_f64(s));
    }
    let r = py.detach(|| star_chromatic_index_exact(&g, &limits));
    match r.status {
        SolveStatus::Exact => Ok(r.value.zip(r.witness.map(|w| w.colors().to_vec()))),
        SolveStatus::BudgetExhausted => Err(PyRuntimeError::new_err(format!(
            "search budget exhausted after {} nodes",
            r.nodes_explored
        ))),
        _ => Ok(None),
    }
}

/// The reference table as CSV text.
#[pyfunction]
fn tables_csv() -> PyResult<String> {
    let rows = starlit::tables::reproduce().map_err(value_error)?;
    Ok(starlit::tables::to_csv(&rows))
}

#[pymodule]
fn starlit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(star_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(verify_star, m)?)?;
    m.add_function(wrap_pyfunction!(star_chromatic_index, m)?)?;
    m.add_function(wrap_pyfunction!(tables_csv, m)?)?;
    Ok(())
}
