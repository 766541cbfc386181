//! Python bindings for the six-vertex motif counter.

use pyo3::exceptions::{PyOSError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use sixmotif::five::FIVE_MOTIFS;
use sixmotif::oracle::{automorphism_count as aut, count_noninduced_guarded, Pattern};
use sixmotif::{FiveInput, FiveMotifVector, LocalCounts, RunConfig, SIX_MOTIFS};

fn err(e: sixmotif::Error) -> PyErr {
    match e {
        sixmotif::Error::Io(e) => PyOSError::new_err(e.to_string()),
        e => PyValueError::new_err(e.to_string()),
    }
}

/// Undirected simple graph with dense vertex ids.
#[pyclass(name = "Graph", module = "sixmotif_py", frozen)]
struct PyGraph(sixmotif::Graph);

#[pymethods]
impl PyGraph {
    /// Builds a graph on `n` vertices; loops and duplicate edges are dropped.
    #[new]
    fn new(n: usize, edges: Vec<(u32, u32)>) -> PyResult<Self> {
        sixmotif::Graph::from_edges(n, edges)
            .map(PyGraph)
            .map_err(err)
    }

    /// Parses edge-list text; labels are densified in first-appearance order.
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        sixmotif::Graph::parse_edge_list(text)
            .map(PyGraph)
            .map_err(err)
    }

    #[staticmethod]
    fn read(path: &str) -> PyResult<Self> {
        let file =
            std::fs::File::open(path).map_err(|e| PyOSError::new_err(format!("{path}: {e}")))?;
        sixmotif::Graph::read_edge_list(std::io::BufReader::new(file))
            .map(PyGraph)
            .map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.0.m()
    }

    /// Original label of each dense vertex id.
    #[getter]
    fn labels(&self) -> Vec<u64> {
        self.0.labels().to_vec()
    }

    fn edges(&self) -> Vec<(u32, u32)> {
        self.0.edges().to_vec()
    }

    fn has_edge(&self, u: usize, v: usize) -> PyResult<bool> {
        self.0.has_edge(u, v).map_err(err)
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<u32>> {
        self.0.neighbors(v).map(<[u32]>::to_vec).map_err(err)
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        self.0.degree(v).map_err(err)
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.0.n(), self.0.m())
    }
}

/// Per-vertex and global primitive counts as a dict.
#[pyfunction]
fn local_counts<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyDict>> {
    let lc = LocalCounts::compute(&g.0).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("degree", &lc.degree)?;
    d.set_item("wedges", &lc.wedges)?;
    d.set_item("triangles", &lc.triangles.vertex)?;
    d.set_item("four_cycles", &lc.four_cycles.vertex)?;
    d.set_item("four_cliques", &lc.four_cliques.vertex)?;
    d.set_item("triangle_total", lc.triangles.total)?;
    d.set_item("four_cycle_total", lc.four_cycles.total)?;
    d.set_item("four_clique_total", lc.four_cliques.total)?;
    d.set_item("diamonds", lc.diamonds)?;
    d.set_item("tailed_triangles", lc.tailed_triangles)?;
    Ok(d)
}

fn five_dict<'py>(py: Python<'py>, v: &FiveMotifVector) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    for (i, c) in v.populated() {
        d.set_item(i, c)?;
    }
    Ok(d)
}

/// Five-vertex counts keyed by index 1..=21; `engine` is "scalable" or
/// "reference".
#[pyfunction]
#[pyo3(signature = (g, engine = "scalable"))]
fn count_five<'py>(py: Python<'py>, g: &PyGraph, engine: &str) -> PyResult<Bound<'py, PyDict>> {
    let v = match engine {
        "scalable" => {
            let lc = LocalCounts::compute(&g.0).map_err(err)?;
            sixmotif::count_five_scalable(&g.0, &lc)
        }
        "reference" => sixmotif::count_five_reference(&g.0),
        other => return Err(PyValueError::new_err(format!("unknown engine {other:?}"))),
    }
    .map_err(err)?;
    five_dict(py, &v)
}

fn five_from_dict(d: &Bound<'_, PyDict>) -> PyResult<FiveMotifVector> {
    let mut v = FiveMotifVector::empty(sixmotif::FiveSource::ExternalFile);
    for (k, c) in d.iter() {
        let i: usize = k.extract()?;
        if !(1..=FIVE_MOTIFS).contains(&i) {
            return Err(PyValueError::new_err(format!(
                "index {i} outside 1..={FIVE_MOTIFS}"
            )));
        }
        let c: i128 = c.extract()?;
        if c < 0 {
            return Err(PyValueError::new_err(format!(
                "negative count at index {i}"
            )));
        }
        v.set(i, c);
    }
    Ok(v)
}

/// Six-vertex counts as {"N1": ..., "N17": ...}. Five-vertex counts come
/// from `five` (index → count) when given, else the scalable engine.
#[pyfunction]
#[pyo3(signature = (g, five = None))]
fn count_six<'py>(
    py: Python<'py>,
    g: &PyGraph,
    five: Option<&Bound<'py, PyDict>>,
) -> PyResult<Bound<'py, PyDict>> {
    let lc = LocalCounts::compute(&g.0).map_err(err)?;
    let f5 = match five {
        Some(d) => five_from_dict(d)?,
        None => sixmotif::count_five_scalable(&g.0, &lc).map_err(err)?,
    };
    let v = sixmotif::count_six(&g.0, &lc, &f5).map_err(err)?;
    let d = PyDict::new(py);
    for i in 1..=SIX_MOTIFS {
        d.set_item(format!("N{i}"), v.get(i))?;
    }
    Ok(d)
}

/// Brute-force count of non-induced copies of the pattern `(k, edges)`.
#[pyfunction]
#[pyo3(signature = (g, k, edges, guard = sixmotif::oracle::ORACLE_GUARD))]
fn count_noninduced(
    g: &PyGraph,
    k: usize,
    edges: Vec<(usize, usize)>,
    guard: usize,
) -> PyResult<i128> {
    let p = Pattern::new("pattern", k, &edges).map_err(err)?;
    count_noninduced_guarded(&g.0, &p, guard).map_err(err)
}

#[pyfunction]
fn automorphism_count(k: usize, edges: Vec<(usize, usize)>) -> PyResult<u64> {
    let p = Pattern::new("pattern", k, &edges).map_err(err)?;
    Ok(aut(&p))
}

/// Least-squares `(slope, intercept)` over (edges in millions, seconds).
#[pyfunction]
fn fit_runtime_model(points: Vec<(f64, f64)>) -> PyResult<(f64, f64)> {
    let f = sixmotif::fit_runtime_model(&points).map_err(err)?;
    Ok((f.slope, f.intercept))
}

/// Cross-checks every count on a small graph against brute force; returns
/// the list of `(family, index, formula, oracle)` disagreements.
#[pyfunction]
#[pyo3(signature = (g, max_n = 12))]
fn verify(g: &PyGraph, max_n: usize) -> PyResult<Vec<(String, usize, i128, i128)>> {
    let cfg = RunConfig {
        five: FiveInput::Scalable,
        oracle_check: true,
        max_oracle_n: max_n,
        five_counts_path: None,
    };
    let r = sixmotif::run("python", &g.0, &cfg).map_err(err)?;
    let report = r.oracle.expect("oracle_check was requested");
    Ok(report
        .mismatches()
        .into_iter()
        .map(|m| {
            let family = match m.family {
                sixmotif::oracle::MotifFamily::Five => "five",
                sixmotif::oracle::MotifFamily::Six => "six",
            };
            (family.to_string(), m.index, m.formula, m.oracle)
        })
        .collect())
}

#[pymodule]
fn sixmotif_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(local_counts, m)?)?;
    m.add_function(wrap_pyfunction!(count_five, m)?)?;
    m.add_function(wrap_pyfunction!(count_six, m)?)?;
    m.add_function(wrap_pyfunction!(count_noninduced, m)?)?;
    m.add_function(wrap_pyfunction!(automorphism_count, m)?)?;
    m.add_function(wrap_pyfunction!(fit_runtime_model, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
