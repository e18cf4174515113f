use std::str::FromStr;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ::mapkit::crossing::crossing_profile;
use ::mapkit::decomposition::io::write_nice;
use ::mapkit::decomposition::EXACT_MAX_VERTICES;
use ::mapkit::graph_core::{half_square, parse_witness, validate_witness};
use ::mapkit::pipeline::Decomposer;
use ::mapkit::solvers::{CapOverride, Certificate};
use ::mapkit::testbench::{brute_force_solve, generate, GenSpec};
use ::mapkit::{BipartiteWitness, Instance, MapGraph, Problem, SolveOptions, SolveResult};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn problem(name: &str) -> PyResult<Problem> {
    Problem::from_str(name).map_err(value_err)
}

/// Planar bipartite witness: nations `0..nations`, specials after them.
#[pyclass(name = "Witness", module = "mapkit", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyWitness {
    inner: BipartiteWitness,
}

#[pymethods]
impl PyWitness {
    /// Builds a witness from `(nation, special)` incidences, 0-based within each side.
    #[new]
    fn new(nations: usize, specials: usize, incidences: Vec<(usize, usize)>) -> PyResult<Self> {
        BipartiteWitness::new(nations, specials, incidences).map(|inner| PyWitness { inner }).map_err(value_err)
    }

    /// Parses the `p tmap W U M` text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_witness(text).map(|inner| PyWitness { inner }).map_err(value_err)
    }

    #[staticmethod]
    fn star(leaves: usize) -> PyResult<Self> {
        gen(GenSpec::Star { leaves })
    }

    #[staticmethod]
    fn grid(rows: usize, cols: usize) -> PyResult<Self> {
        gen(GenSpec::Grid { rows, cols })
    }

    #[staticmethod]
    #[pyo3(signature = (n, p, seed=0))]
    fn random_incidence(n: usize, p: f64, seed: u64) -> PyResult<Self> {
        gen(GenSpec::RandomIncidence { n, p, seed })
    }

    #[staticmethod]
    #[pyo3(signature = (n, special_ratio, seed=0))]
    fn random_planar_bipartite(n: usize, special_ratio: f64, seed: u64) -> PyResult<Self> {
        gen(GenSpec::RandomPlanarBipartite { n, special_ratio, seed })
    }

    #[getter]
    fn nations(&self) -> usize {
        self.inner.nation_count()
    }

    #[getter]
    fn specials(&self) -> usize {
        self.inner.special_count()
    }

    /// `(nation, special)` pairs.
    fn incidences(&self) -> Vec<(usize, usize)> {
        self.inner.incidences()
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    /// Violation messages; empty when the witness is fine.
    #[pyo3(signature = (strict=false))]
    fn validate(&self, strict: bool) -> Vec<String> {
        validate_witness(&self.inner, strict).violations.iter().map(|v| v.to_string()).collect()
    }

    fn map_graph(&self) -> PyMapGraph {
        PyMapGraph { inner: half_square(&self.inner) }
    }

    fn __repr__(&self) -> String {
        format!("Witness(nations={}, specials={})", self.inner.nation_count(), self.inner.special_count())
    }
}

fn gen(spec: GenSpec) -> PyResult<PyWitness> {
    generate(&spec).map(|inner| PyWitness { inner }).map_err(value_err)
}

/// Half-square of a witness, on the nations.
#[pyclass(name = "MapGraph", module = "mapkit", frozen)]
pub struct PyMapGraph {
    inner: MapGraph,
}

#[pymethods]
impl PyMapGraph {
    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.graph().edges().collect()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.inner.n() && v < self.inner.n() && self.inner.graph().has_edge(u, v)
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.n() {
            return Err(value_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.graph().neighbors(v).to_vec())
    }

    /// Nations adjacent to special `s`.
    fn clique(&self, s: usize) -> PyResult<Vec<usize>> {
        self.inner.special_cliques().get(s).cloned().ok_or_else(|| value_err(format!("special {s} out of range")))
    }

    fn __repr__(&self) -> String {
        format!("MapGraph(n={}, edges={})", self.inner.n(), self.inner.graph().edge_count())
    }
}

#[pyclass(name = "SolveResult", module = "mapkit", frozen, get_all)]
pub struct PySolveResult {
    problem: String,
    k: Option<usize>,
    value: Option<usize>,
    optimal: bool,
    decision: Option<bool>,
    headline: String,
    /// `"vertices"`, `"clique"`, `"cycle"`, `"path"`, `"cycles"` or `"none"`.
    certificate_kind: String,
    certificate: Vec<Vec<usize>>,
    width_d: usize,
    maxbag_dprime: usize,
    cap: Option<usize>,
    max_states: usize,
    node_states: Vec<usize>,
    early_exit: Option<String>,
}

impl From<&SolveResult> for PySolveResult {
    fn from(r: &SolveResult) -> Self {
        let kind = match r.certificate {
            Certificate::None => "none",
            Certificate::Vertices(_) => "vertices",
            Certificate::Clique(_) => "clique",
            Certificate::Cycle(_) => "cycle",
            Certificate::Path(_) => "path",
            Certificate::Cycles(_) => "cycles",
        };
        PySolveResult {
            problem: r.problem.name().to_string(),
            k: r.k,
            value: r.value,
            optimal: r.optimal,
            decision: r.decision,
            headline: r.headline(),
            certificate_kind: kind.to_string(),
            certificate: r.certificate.lines(),
            width_d: r.stats.width_d,
            maxbag_dprime: r.stats.maxbag_dprime,
            cap: r.stats.cap,
            max_states: r.stats.max_states,
            node_states: r.stats.node_states.clone(),
            early_exit: r.stats.early_exit.map(str::to_string),
        }
    }
}

#[pymethods]
impl PySolveResult {
    fn __repr__(&self) -> String {
        format!("SolveResult({} {})", self.problem, self.headline)
    }
}

/// A witness with its decomposition of `B` and the derived few-cliques decomposition.
#[pyclass(name = "Instance", module = "mapkit", frozen)]
pub struct PyInstance {
    inner: Instance,
}

#[pymethods]
impl PyInstance {
    #[new]
    #[pyo3(signature = (witness, exact=false, seed=0))]
    fn new(witness: &PyWitness, exact: bool, seed: u64) -> PyResult<Self> {
        let how = if exact { Decomposer::Exact { budget: EXACT_MAX_VERTICES } } else { Decomposer::Heuristic { seed } };
        Instance::build(witness.inner.clone(), how).map(|inner| PyInstance { inner }).map_err(value_err)
    }

    #[getter]
    fn witness(&self) -> PyWitness {
        PyWitness { inner: self.inner.witness.clone() }
    }

    fn map_graph(&self) -> PyMapGraph {
        PyMapGraph { inner: self.inner.map.clone() }
    }

    #[getter]
    fn width_b(&self) -> usize {
        self.inner.td.width()
    }

    #[getter]
    fn width_d(&self) -> usize {
        self.inner.fcd.width_d()
    }

    #[getter]
    fn maxbag_dprime(&self) -> usize {
        self.inner.fcd.max_bag()
    }

    #[getter]
    fn node_count(&self) -> usize {
        self.inner.fcd.node_count()
    }

    /// Bags of the few-cliques decomposition, in postorder.
    fn bags(&self) -> Vec<Vec<usize>> {
        (0..self.inner.fcd.node_count()).map(|t| self.inner.fcd.bag(t).to_vec()).collect()
    }

    fn nice_td_text(&self) -> String {
        write_nice(&self.inner.nice, self.inner.witness.graph().n())
    }

    fn fcd_text(&self) -> String {
        self.inner.fcd.to_text()
    }

    /// `cap` is `None` for the default per-node cap, `"none"` for no cap, or an integer.
    #[pyo3(signature = (problem, k=None, cap=None, exhaustive=false))]
    fn solve(
        &self,
        py: Python<'_>,
        problem: &str,
        k: Option<usize>,
        cap: Option<&Bound<'_, PyAny>>,
        exhaustive: bool,
    ) -> PyResult<PySolveResult> {
        let p = self::problem(problem)?;
        let cap = match cap {
            None => CapOverride::Default,
            Some(c) => match c.extract::<usize>() {
                Ok(n) => CapOverride::Uniform(n),
                Err(_) if c.extract::<String>().is_ok_and(|s| s == "none") => CapOverride::Unbounded,
                Err(_) => return Err(value_err("cap must be None, \"none\" or a non-negative integer")),
            },
        };
        let opts = SolveOptions { k, cap, skip_early_exit: exhaustive, exhaustive };
        let r = py.detach(|| self.inner.solve(p, &opts));
        Ok(PySolveResult::from(&r))
    }

    /// Brute-force optimum and its certificate lines, or `None` past the size limit.
    fn oracle(&self, problem: &str) -> PyResult<Option<(usize, Vec<Vec<usize>>)>> {
        let p = self::problem(problem)?;
        Ok(brute_force_solve(&self.inner.map, p).ok().map(|(v, c)| (v, c.lines())))
    }

    /// Per-node crossing counts of an edge set against the few-cliques decomposition.
    fn crossing_profile(&self, edges: Vec<(usize, usize)>) -> Vec<usize> {
        crossing_profile(&edges, &self.inner.fcd).counts
    }

    fn __repr__(&self) -> String {
        format!(
            "Instance(nations={}, width_D={}, maxbag_Dprime={})",
            self.inner.map.n(),
            self.inner.fcd.width_d(),
            self.inner.fcd.max_bag()
        )
    }
}

/// Names accepted by `Instance.solve`.
#[pyfunction]
fn problems() -> Vec<&'static str> {
    Problem::ALL.iter().map(|p| p.name()).collect()
}

#[pymodule]
#[pyo3(name = "mapkit")]
fn mapkit_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyWitness>()?;
    m.add_class::<PyMapGraph>()?;
    m.add_class::<PyInstance>()?;
    m.add_class::<PySolveResult>()?;
    m.add_function(wrap_pyfunction!(problems, m)?)?;
    Ok(())
}
