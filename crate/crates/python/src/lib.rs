//! Python bindings: graphs, formulas, constructions, checkers and the oracle.
//!
//! Families are given as strings (`"K4,C>=5"`, `"K3,P5"`); results come back
//! as dicts.

use circum_turan::constructions::ConstructionId;
use circum_turan::formulas::{self, AuditGrid, ExtremalResult, Problem};
use circum_turan::invariants::{self, ForbiddenFamily, Freeness};
use circum_turan::oracle::{self, Connectivity, EnumerationTask, OracleResult};
use circum_turan::{graph6, Graph};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An immutable simple undirected graph on vertices `0..n`.
#[pyclass(
    name = "Graph",
    frozen,
    eq,
    hash,
    skip_from_py_object,
    module = "circum_turan_py"
)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyGraph(pub Graph);

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Graph::from_edges(n, &edges)
            .map(PyGraph)
            .map_err(value_error)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        graph6::decode(text).map(PyGraph).map_err(value_error)
    }

    fn to_graph6(&self) -> String {
        graph6::encode(&self.0)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn edge_count(&self) -> usize {
        self.0.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().collect()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.0.has_edge(u, v)
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.0.n() {
            return Err(value_error(format!("vertex {v} out of range")));
        }
        Ok(self.0.degree(v))
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, edges={}, graph6={:?})",
            self.0.n(),
            self.0.edge_count(),
            graph6::encode(&self.0)
        )
    }
}

fn family(text: &str) -> PyResult<ForbiddenFamily> {
    text.parse().map_err(value_error)
}

fn extremal_dict<'py>(py: Python<'py>, r: &ExtremalResult) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("problem", r.problem.to_string())?;
    d.set_item("n", r.n)?;
    d.set_item("k", r.k)?;
    d.set_item("r", r.r)?;
    d.set_item("value", r.value)?;
    d.set_item("status", r.status.to_string())?;
    d.set_item("exact", r.status.is_exact())?;
    d.set_item(
        "achievers",
        r.achievers
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>(),
    )?;
    Ok(d)
}

/// `ex(n, ...)` for `problem` in `cycles`, `cycles2conn`, `paths`.
#[pyfunction]
fn turan_number<'py>(
    py: Python<'py>,
    problem: &str,
    n: usize,
    k: usize,
    r: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let p: Problem = problem.parse().map_err(value_error)?;
    let res = formulas::turan_number(p, n, k, r).map_err(value_error)?;
    extremal_dict(py, &res)
}

fn construction_id(name: &str, p: &[usize]) -> PyResult<ConstructionId> {
    let need = |k: usize| {
        if p.len() == k {
            Ok(())
        } else {
            Err(value_error(format!(
                "{name} takes {k} parameters, got {}",
                p.len()
            )))
        }
    };
    Ok(match name.to_ascii_lowercase().as_str() {
        "tree" => need(1).map(|_| ConstructionId::Tree { n: p[0] })?,
        "turan" => need(2).map(|_| ConstructionId::Turan { n: p[0], p: p[1] })?,
        "g1" => need(2).map(|_| ConstructionId::G1 { n: p[0], k: p[1] })?,
        "g4" => need(2).map(|_| ConstructionId::G4 { n: p[0], k: p[1] })?,
        "f" => need(3).map(|_| ConstructionId::F {
            n: p[0],
            k: p[1],
            r: p[2],
        })?,
        "h" => need(3).map(|_| ConstructionId::H {
            n: p[0],
            a: p[1],
            k: p[2],
        })?,
        "g2" => need(3).map(|_| ConstructionId::G2 {
            n: p[0],
            k: p[1],
            r: p[2],
        })?,
        "g3" => need(3).map(|_| ConstructionId::G3 {
            n: p[0],
            k: p[1],
            r: p[2],
        })?,
        "katonaxiao" => need(3).map(|_| ConstructionId::KatonaXiao {
            n: p[0],
            k: p[1],
            r: p[2],
        })?,
        "gr" => need(4).map(|_| ConstructionId::GrNak {
            n: p[0],
            a: p[1],
            k: p[2],
            r: p[3],
        })?,
        _ => return Err(value_error(format!("unknown construction {name:?}"))),
    })
}

/// Builds a named construction, e.g. `construct("F", 13, 7, 5)`.
#[pyfunction]
#[pyo3(signature = (name, *params, verify = false))]
fn construct(name: &str, params: Vec<usize>, verify: bool) -> PyResult<PyGraph> {
    let id = construction_id(name, &params)?;
    let g = id.build().map_err(value_error)?;
    if verify && !id.verify(&g).map_err(value_error)? {
        return Err(value_error(format!("{id} failed verification")));
    }
    Ok(PyGraph(g))
}

/// Violation kind and the vertices that carry it.
type Witness = (String, Vec<usize>);

/// `(True, None)` if free, else `(False, (kind, vertices))`.
#[pyfunction]
fn is_free(py: Python<'_>, graph: &PyGraph, fam: &str) -> PyResult<(bool, Option<Witness>)> {
    let fam = family(fam)?;
    let verdict = py
        .detach(|| invariants::is_free(&graph.0, &fam))
        .map_err(value_error)?;
    Ok(match verdict {
        Freeness::Free => (true, None),
        Freeness::Violation(c) => (false, Some((c.kind.to_string(), c.vertices))),
    })
}

#[pyfunction]
fn clique_number(py: Python<'_>, graph: &PyGraph) -> PyResult<usize> {
    py.detach(|| invariants::clique_number(&graph.0))
        .map(|(w, _)| w)
        .map_err(value_error)
}

/// Length of a longest cycle (0 for forests).
#[pyfunction]
fn circumference(py: Python<'_>, graph: &PyGraph) -> PyResult<usize> {
    py.detach(|| invariants::circumference(&graph.0))
        .map(|(c, _)| c)
        .map_err(value_error)
}

/// Vertices on a longest path.
#[pyfunction]
fn longest_path_order(py: Python<'_>, graph: &PyGraph) -> PyResult<usize> {
    py.detach(|| invariants::longest_path_order(&graph.0))
        .map(|(l, _)| l)
        .map_err(value_error)
}

#[pyfunction]
fn is_two_connected(graph: &PyGraph) -> bool {
    invariants::is_two_connected(&graph.0)
}

fn task(
    n: usize,
    fam: Option<&str>,
    connectivity: &str,
    budget: Option<u64>,
    workers: Option<usize>,
) -> PyResult<EnumerationTask> {
    let fam = fam.map(family).transpose()?;
    let conn: Connectivity = connectivity.parse().map_err(value_error)?;
    let mut t = EnumerationTask::new(n, fam).connectivity(conn);
    t.budget = budget;
    t.workers = workers;
    Ok(t)
}

fn oracle_dict<'py>(py: Python<'py>, r: OracleResult) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("max_edges", r.max_edges)?;
    d.set_item(
        "witnesses",
        r.witnesses.into_iter().map(PyGraph).collect::<Vec<_>>(),
    )?;
    d.set_item("optimal_classes", r.optimal_classes)?;
    d.set_item("explored", r.explored)?;
    d.set_item("complete", r.complete)?;
    Ok(d)
}

/// Exhaustive maximum edge count over free graphs on `n` vertices.
#[pyfunction]
#[pyo3(signature = (n, family = None, connectivity = "any", budget = None, workers = None))]
fn brute_force_ex<'py>(
    py: Python<'py>,
    n: usize,
    family: Option<&str>,
    connectivity: &str,
    budget: Option<u64>,
    workers: Option<usize>,
) -> PyResult<Bound<'py, PyDict>> {
    let t = task(n, family, connectivity, budget, workers)?;
    let res = py
        .detach(|| oracle::brute_force_ex(&t))
        .map_err(value_error)?;
    oracle_dict(py, res)
}

/// One graph per isomorphism class of free graphs on `n` vertices.
#[pyfunction]
#[pyo3(signature = (n, family = None, connectivity = "any", budget = None, workers = None))]
fn enumerate_free_graphs(
    py: Python<'_>,
    n: usize,
    family: Option<&str>,
    connectivity: &str,
    budget: Option<u64>,
    workers: Option<usize>,
) -> PyResult<Vec<PyGraph>> {
    let t = task(n, family, connectivity, budget, workers)?;
    let res = py
        .detach(|| oracle::enumerate_free_graphs(&t))
        .map_err(value_error)?;
    Ok(res.graphs.into_iter().map(PyGraph).collect())
}

/// Randomized saturation lower bound, optionally seeded with `start`.
#[pyfunction]
#[pyo3(signature = (n, family, connectivity = "any", budget = None, seed = 0, start = None))]
fn lower_bound_search<'py>(
    py: Python<'py>,
    n: usize,
    family: &str,
    connectivity: &str,
    budget: Option<u64>,
    seed: u64,
    start: Option<&PyGraph>,
) -> PyResult<Bound<'py, PyDict>> {
    let fam = self::family(family)?;
    let conn: Connectivity = connectivity.parse().map_err(value_error)?;
    let start = match start {
        Some(g) if g.0.n() != n => return Err(value_error("start graph must have n vertices")),
        Some(g) => g.0.clone(),
        None => circum_turan::graph::empty_graph(n),
    };
    let res = py
        .detach(|| oracle::lower_bound_search_from(&start, &fam, conn, budget, seed))
        .map_err(value_error)?;
    oracle_dict(py, res)
}

/// Lemma audit reports as dicts with `lemma`, `checked`, `failed`.
#[pyfunction]
#[pyo3(signature = (k_min = 3, k_max = 30, n_max = 200))]
fn audit_lemmas<'py>(
    py: Python<'py>,
    k_min: usize,
    k_max: usize,
    n_max: usize,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let grid = AuditGrid {
        k_min,
        k_max,
        n_max,
    };
    let reports = py.detach(|| formulas::audit_lemmas(&grid));
    reports
        .iter()
        .map(|r| {
            let d = PyDict::new(py);
            d.set_item("lemma", r.lemma.to_string())?;
            d.set_item("checked", r.checked)?;
            d.set_item("failed", r.failed)?;
            Ok(d)
        })
        .collect()
}

#[pymodule]
fn circum_turan_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(turan_number, m)?)?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(is_free, m)?)?;
    m.add_function(wrap_pyfunction!(clique_number, m)?)?;
    m.add_function(wrap_pyfunction!(circumference, m)?)?;
    m.add_function(wrap_pyfunction!(longest_path_order, m)?)?;
    m.add_function(wrap_pyfunction!(is_two_connected, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_ex, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_free_graphs, m)?)?;
    m.add_function(wrap_pyfunction!(lower_bound_search, m)?)?;
    m.add_function(wrap_pyfunction!(audit_lemmas, m)?)?;
    Ok(())
}
