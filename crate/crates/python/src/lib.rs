//! Python bindings: a `Graph` class plus generators, all results checked
//! by the same code paths as the CLI.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use grundy_core::block::generate_clique_family;
use grundy_core::generators;
use grundy_core::girth::decide_gamma_at_least_with;
use grundy_core::io::{parse_graph, write_edge_list};
use grundy_core::oracle::{first_fit, is_grundy_coloring, Oracle};
use grundy_core::report::{gamma_report, summarize, GraphSummary, MethodChoice};
use grundy_core::{Graph, GrundyError, SolveOptions};

fn err(e: GrundyError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn summary_dict<'py>(py: Python<'py>, s: &GraphSummary) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("n", s.n)?;
    d.set_item("m", s.m)?;
    d.set_item("components", s.components)?;
    d.set_item("girth", s.girth.finite())?;
    d.set_item("max_degree", s.max_degree)?;
    d.set_item("delta2", s.delta2)?;
    d.set_item("is_block_graph", s.is_block_graph)?;
    d.set_item("omega", s.omega)?;
    d.set_item("beta", s.beta)?;
    d.set_item("delta_tilde", s.delta_tilde)?;
    d.set_item("cut_vertices", s.cut_vertices)?;
    Ok(d)
}

/// Simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "grundy")]
struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph { inner: Graph::from_edges(n, edges).map_err(err)? })
    }

    /// Reads edge-list or DIMACS text.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyGraph { inner: parse_graph(text, None).map_err(err)?.graph })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn to_edge_list(&self) -> String {
        write_edge_list(&self.inner)
    }

    fn summary<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        summary_dict(py, &summarize(&self.inner))
    }

    /// Γ or bounds on it; the witness is a checked Grundy coloring.
    #[pyo3(signature = (method = "auto", threads = 1, oracle_cap = 9))]
    fn gamma<'py>(
        &self,
        py: Python<'py>,
        method: &str,
        threads: usize,
        oracle_cap: usize,
    ) -> PyResult<Bound<'py, PyDict>> {
        let choice: MethodChoice = method.parse().map_err(err)?;
        let oracle = Oracle::new(oracle_cap).map_err(err)?;
        let r = gamma_report(&self.inner, choice, &SolveOptions::with_threads(threads), &oracle).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("method", format!("{:?}", r.method))?;
        d.set_item("gamma", r.gamma)?;
        d.set_item("lower", r.lower)?;
        d.set_item("upper", r.upper)?;
        d.set_item("ratio", r.ratio)?;
        d.set_item("witness", r.witness.map(|c| c.into_colors()))?;
        d.set_item("summary", summary_dict(py, &r.summary)?)?;
        Ok(d)
    }

    /// A witness coloring if Γ ≥ k, else `None`; needs k ≤ (g+1)/2.
    #[pyo3(signature = (k, threads = 1))]
    fn decide(&self, k: usize, threads: usize) -> PyResult<Option<Vec<usize>>> {
        let w = decide_gamma_at_least_with(&self.inner, k, &SolveOptions::with_threads(threads)).map_err(err)?;
        Ok(w.map(|c| c.into_colors()))
    }

    #[pyo3(signature = (cap = 9))]
    fn brute_force_gamma(&self, cap: usize) -> PyResult<usize> {
        Oracle::new(cap).and_then(|o| o.brute_force_gamma(&self.inner)).map_err(err)
    }

    fn first_fit(&self, order: Vec<usize>) -> PyResult<Vec<usize>> {
        Ok(first_fit(&self.inner, &order).map_err(err)?.into_colors())
    }

    fn is_grundy_coloring(&self, colors: Vec<usize>) -> bool {
        is_grundy_coloring(&self.inner, &colors)
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

fn wrap(g: Graph) -> PyGraph {
    PyGraph { inner: g }
}

#[pyfunction]
#[pyo3(signature = (n, seed = 0))]
fn random_tree(n: usize, seed: u64) -> PyGraph {
    wrap(generators::random_tree(n, seed))
}

#[pyfunction]
#[pyo3(signature = (n, max_block = 4, seed = 0))]
fn random_block_graph(n: usize, max_block: usize, seed: u64) -> PyResult<PyGraph> {
    generators::random_block_graph(n, max_block, seed).map(wrap).map_err(err)
}

#[pyfunction]
fn clique_family(t: usize, p: usize) -> PyResult<PyGraph> {
    generate_clique_family(t, p).map(wrap).map_err(err)
}

#[pyfunction]
fn cycle(n: usize) -> PyResult<PyGraph> {
    if n < 3 {
        return Err(PyValueError::new_err("a cycle needs at least 3 vertices"));
    }
    Ok(wrap(generators::cycle(n)))
}

#[pyfunction]
fn petersen() -> PyGraph {
    wrap(generators::petersen())
}

/// The 14-vertex worked block-graph example and its root.
#[pyfunction]
fn figure2() -> (PyGraph, usize) {
    (wrap(generators::figure2_fixture()), generators::FIGURE2_ROOT)
}

#[pymodule]
fn grundy(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(random_tree, m)?)?;
    m.add_function(wrap_pyfunction!(random_block_graph, m)?)?;
    m.add_function(wrap_pyfunction!(clique_family, m)?)?;
    m.add_function(wrap_pyfunction!(cycle, m)?)?;
    m.add_function(wrap_pyfunction!(petersen, m)?)?;
    m.add_function(wrap_pyfunction!(figure2, m)?)?;
    Ok(())
}
