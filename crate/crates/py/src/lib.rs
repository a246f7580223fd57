//! Python bindings: graphs, generators, the three constructions, the
//! certificate verifier and the exhaustive oracle.

use std::time::Duration;

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use bchrome::construct::{color_choice, hypothesis_report as report, Strategy};
use bchrome::generators::{self, GenSpec};
use bchrome::io;
use bchrome::oracle::{exact_b_chromatic, BChromatic, SearchLimits};
use bchrome::transversal::{find_transversal as transversal, SetFamily, TransversalResult};
use bchrome::{verify_certificate, Certificate, Error, Graph, Verdict};

create_exception!(pybchrome, BchromeError, PyException);
create_exception!(pybchrome, ParseError, BchromeError);
create_exception!(pybchrome, PreconditionError, BchromeError);
create_exception!(pybchrome, ConstructionError, BchromeError);

fn to_py(e: Error) -> PyErr {
    let msg = e.to_string();
    match e {
        Error::MalformedGraph6 { .. }
        | Error::MalformedDimacs { .. }
        | Error::SchemaViolation { .. } => ParseError::new_err(msg),
        Error::PreconditionViolated(_) | Error::NoStrategyApplies(_) | Error::GirthTooSmall(_) => {
            PreconditionError::new_err(msg)
        }
        Error::ConstructionFailed { .. }
        | Error::RepairStuck { .. }
        | Error::HallFailure { .. }
        | Error::InternalInvariantViolation(_) => ConstructionError::new_err(msg),
        _ => BchromeError::new_err(msg),
    }
}

/// An undirected simple graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "pybchrome", frozen)]
struct PyGraph(Graph);

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Graph::new(n, &edges).map(Self).map_err(to_py)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        io::parse_graph6(text).map(Self).map_err(to_py)
    }

    #[staticmethod]
    fn from_dimacs(text: &str) -> PyResult<Self> {
        io::parse_dimacs(text).map(Self).map_err(to_py)
    }

    /// graph6 or DIMACS, detected from the first line.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        io::parse_auto(text).map(Self).map_err(to_py)
    }

    fn to_graph6(&self) -> PyResult<String> {
        io::write_graph6(&self.0).map_err(to_py)
    }

    fn to_dimacs(&self) -> String {
        io::write_dimacs(&self.0)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.0.m()
    }

    #[getter]
    fn girth(&self) -> Option<usize> {
        self.0.girth()
    }

    #[getter]
    fn regular_degree(&self) -> Option<usize> {
        self.0.regular_degree()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.0.n() {
            return Err(to_py(Error::VertexOutOfRange {
                vertex: v,
                n: self.0.n(),
            }));
        }
        Ok(self.0.neighbors(v).to_vec())
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().collect()
    }

    fn relabel(&self, perm: Vec<usize>) -> PyResult<Self> {
        self.0.relabel(&perm).map(Self).map_err(to_py)
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.0.n(), self.0.m())
    }
}

/// A verified b-coloring together with the orderings that produced it.
#[pyclass(name = "Certificate", module = "pybchrome", frozen)]
struct PyCertificate(Certificate);

#[pymethods]
impl PyCertificate {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        io::read_certificate(text).map(Self).map_err(to_py)
    }

    fn to_json(&self) -> PyResult<String> {
        io::write_certificate(&self.0).map_err(to_py)
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.k
    }

    #[getter]
    fn strategy(&self) -> &str {
        &self.0.strategy
    }

    #[getter]
    fn center(&self) -> usize {
        self.0.center
    }

    /// Color of each vertex, in `1..=k`.
    #[getter]
    fn colors(&self) -> Vec<usize> {
        self.0.colors.clone()
    }

    /// Claimed b-vertex for each color class.
    #[getter]
    fn b_vertices(&self) -> Vec<(usize, usize)> {
        self.0.b_vertices.iter().map(|(&c, &v)| (c, v)).collect()
    }

    #[getter]
    fn neighbor_order(&self) -> Vec<usize> {
        self.0.neighbor_order.clone()
    }

    fn __repr__(&self) -> String {
        format!(
            "Certificate(strategy={:?}, center={}, k={})",
            self.0.strategy, self.0.center, self.0.k
        )
    }
}

#[pyfunction]
fn petersen() -> PyGraph {
    PyGraph(generators::petersen())
}

#[pyfunction]
fn hoffman_singleton() -> PyGraph {
    PyGraph(generators::hoffman_singleton())
}

#[pyfunction]
fn robertson() -> PyGraph {
    PyGraph(generators::robertson())
}

#[pyfunction]
fn cycle(n: usize) -> PyResult<PyGraph> {
    generators::cycle(n).map(PyGraph).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (d, n, seed=0, girth_min=5))]
fn random_regular(
    py: Python<'_>,
    d: usize,
    n: usize,
    seed: u64,
    girth_min: usize,
) -> PyResult<PyGraph> {
    let spec = GenSpec::random_regular(d, n, girth_min, seed);
    py.detach(|| generators::random_regular_girth(&spec))
        .map(PyGraph)
        .map_err(to_py)
}

/// Builds a certificate with `strategy` ("auto", "no-c6", "bounded-c6" or
/// "two-bunch") at `vertex`, or at the first vertex where it applies.
#[pyfunction]
#[pyo3(signature = (g, strategy="auto", vertex=None))]
fn color(
    py: Python<'_>,
    g: &PyGraph,
    strategy: &str,
    vertex: Option<usize>,
) -> PyResult<PyCertificate> {
    let strategy = match strategy {
        "auto" => None,
        s => Some(s.parse::<Strategy>().map_err(to_py)?),
    };
    py.detach(|| color_choice(&g.0, strategy, vertex))
        .map(PyCertificate)
        .map_err(to_py)
}

/// `(True, None)` on acceptance, `(False, reason)` otherwise.
#[pyfunction]
fn verify(cert: &PyCertificate, g: &PyGraph) -> (bool, Option<String>) {
    match verify_certificate(&cert.0, &g.0) {
        Verdict::Accept => (true, None),
        Verdict::Reject(reason) => (false, Some(reason.to_string())),
    }
}

/// Per-vertex census and scope flags as a dict.
#[pyfunction]
fn hypothesis_report<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    let json = py
        .detach(|| serde_json::to_string(&report(&g.0)))
        .map_err(|e| BchromeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (json,))
}

/// `(k, exact)`: the b-chromatic number when `exact`, a lower bound when the
/// search ran out of budget.
#[pyfunction]
#[pyo3(signature = (g, time_budget=60.0, node_budget=10_000_000, max_vertices=512))]
fn b_chromatic(
    py: Python<'_>,
    g: &PyGraph,
    time_budget: f64,
    node_budget: u64,
    max_vertices: usize,
) -> PyResult<(usize, bool)> {
    let time_budget = Duration::try_from_secs_f64(time_budget)
        .map_err(|e| PyValueError::new_err(format!("time_budget: {e}")))?;
    let lim = SearchLimits {
        max_vertices,
        time_budget,
        node_budget,
    };
    Ok(match py.detach(|| exact_b_chromatic(&g.0, &lim)) {
        BChromatic::Exact(k) => (k, true),
        BChromatic::LowerBoundOnly(k) => (k, false),
    })
}

/// System of distinct representatives for sets over `1..=universe`.
/// Returns `{"assignment": [...]}` or `{"violator": [...]}`.
#[pyfunction]
fn find_transversal<'py>(
    py: Python<'py>,
    universe: usize,
    sets: Vec<Vec<usize>>,
) -> PyResult<Bound<'py, PyDict>> {
    let fam = SetFamily::new(universe, sets).map_err(to_py)?;
    let out = PyDict::new(py);
    match transversal(&fam) {
        TransversalResult::Assignment(a) => out.set_item("assignment", a)?,
        TransversalResult::Violator(i) => out.set_item("violator", i)?,
    }
    Ok(out)
}

#[pymodule]
fn pybchrome(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("BchromeError", py.get_type::<BchromeError>())?;
    m.add("ParseError", py.get_type::<ParseError>())?;
    m.add("PreconditionError", py.get_type::<PreconditionError>())?;
    m.add("ConstructionError", py.get_type::<ConstructionError>())?;
    m.add_class::<PyGraph>()?;
    m.add_class::<PyCertificate>()?;
    m.add_function(wrap_pyfunction!(petersen, m)?)?;
    m.add_function(wrap_pyfunction!(hoffman_singleton, m)?)?;
    m.add_function(wrap_pyfunction!(robertson, m)?)?;
    m.add_function(wrap_pyfunction!(cycle, m)?)?;
    m.add_function(wrap_pyfunction!(random_regular, m)?)?;
    m.add_function(wrap_pyfunction!(color, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(hypothesis_report, m)?)?;
    m.add_function(wrap_pyfunction!(b_chromatic, m)?)?;
    m.add_function(wrap_pyfunction!(find_transversal, m)?)?;
    Ok(())
}
