//! Python module `brandt_zeta`.

use std::path::PathBuf;

use brandt_zeta::arithmetic::{self, resolve_data_dir, Method};
use brandt_zeta::correspondence::{self, brandt_tree_count, hasse_weil_zeta};
use brandt_zeta::exact::{charpoly_int, IntMatrix, IntPolynomial, RationalFunction};
use brandt_zeta::graph::{graph_from_adjacency, io::graph_to_dot};
use brandt_zeta::selftest::{run_selftest, DEFAULT_SEED};
use brandt_zeta::zeta;
use brandt_zeta::Error;
use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(brandt_zeta, BrandtZetaError, PyException);
create_exception!(brandt_zeta, MissingDataError, BrandtZetaError);
create_exception!(brandt_zeta, ObstructionError, BrandtZetaError);

fn to_py_err(e: Error) -> PyErr {
    let msg = e.to_string();
    match e {
        Error::MissingModularPolynomial(_) | Error::Io(_) => MissingDataError::new_err(msg),
        Error::ParityObstruction(_) | Error::NotRealizable(_) => ObstructionError::new_err(msg),
        Error::CompositeModulus(_)
        | Error::ModulusTooLarge(_)
        | Error::EvenCharacteristic(_)
        | Error::NotCongruentOneMod12(_)
        | Error::LevelEqualsCharacteristic(_)
        | Error::UnsupportedMethod(_)
        | Error::AsymmetricMatrix(..)
        | Error::NegativeEntry(..)
        | Error::OddDiagonal(_)
        | Error::NonSquare { .. } => PyValueError::new_err(msg),
        _ => BrandtZetaError::new_err(msg),
    }
}

trait OrRaise<T> {
    fn or_raise(self) -> PyResult<T>;
}

impl<T> OrRaise<T> for brandt_zeta::Result<T> {
    fn or_raise(self) -> PyResult<T> {
        self.map_err(to_py_err)
    }
}

fn json_to_py<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

fn ratfun_to_py<'py>(py: Python<'py>, f: &RationalFunction) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("numerator", f.numerator().coeffs().to_vec())?;
    d.set_item("denominator", f.denominator().coeffs().to_vec())?;
    Ok(d)
}

fn poly_coeffs(p: &IntPolynomial) -> Vec<BigInt> {
    p.coeffs().to_vec()
}

fn parse_method(method: &str) -> PyResult<Method> {
    method.parse::<Method>().map_err(to_py_err)
}

fn matrix_from(adjacency: Vec<Vec<BigInt>>) -> PyResult<IntMatrix> {
    IntMatrix::new(adjacency).or_raise()
}

/// Brandt matrix B(p) for the supersingular locus in characteristic N.
#[pyclass(name = "BrandtMatrix", frozen)]
struct PyBrandtMatrix {
    inner: arithmetic::BrandtMatrix,
}

#[pymethods]
impl PyBrandtMatrix {
    #[getter(N)]
    fn characteristic(&self) -> u64 {
        self.inner.characteristic()
    }

    #[getter]
    fn p(&self) -> u64 {
        self.inner.p()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    /// j-invariants as `(a, b)` for `a + b g` in F_{N^2}.
    #[getter]
    fn j_invariants(&self) -> Vec<(u64, u64)> {
        self.inner.j_invariants().iter().map(|j| j.coords()).collect()
    }

    #[getter]
    fn matrix(&self) -> Vec<Vec<BigInt>> {
        self.inner.matrix().rows().to_vec()
    }

    /// Coefficients of det(x I - B), lowest degree first.
    fn charpoly(&self) -> PyResult<Vec<BigInt>> {
        Ok(poly_coeffs(&charpoly_int(self.inner.matrix()).or_raise()?))
    }

    fn mu(&self) -> PyResult<BigInt> {
        correspondence::mu(&self.inner).or_raise()
    }

    fn tree_count(&self) -> PyResult<BigInt> {
        brandt_tree_count(&self.inner).or_raise()
    }

    fn hasse_weil<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let w = hasse_weil_zeta(&self.inner).or_raise()?;
        ratfun_to_py(py, w.zeta())
    }

    /// Formal Ihara zeta of B; raises ObstructionError when the Euler
    /// characteristic is not an integer.
    fn ihara_zeta<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let z = zeta::formal_ihara_zeta(self.inner.matrix()).or_raise()?;
        ratfun_to_py(py, z.zeta())
    }

    fn graph_dot(&self) -> PyResult<String> {
        let g = arithmetic::brandt_graph(&self.inner).or_raise()?;
        Ok(graph_to_dot(&g, &format!("G_{}_{}", self.inner.characteristic(), self.inner.p())))
    }

    fn validate<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        json_to_py(py, &arithmetic::validate_brandt(&self.inner).to_json())
    }

    fn verify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let report = correspondence::verify_brandt(&self.inner).or_raise()?;
        json_to_py(py, &report.to_json())
    }

    fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.inner.to_json()).expect("serialisable")
    }

    fn __repr__(&self) -> String {
        format!("BrandtMatrix(N={}, p={}, size={})", self.inner.characteristic(), self.inner.p(), self.inner.size())
    }
}

#[pyfunction]
#[pyo3(signature = (N, p, method = "modpoly", data_dir = None))]
#[allow(non_snake_case)]
fn brandt_matrix(N: u64, p: u64, method: &str, data_dir: Option<PathBuf>) -> PyResult<PyBrandtMatrix> {
    let dir = resolve_data_dir(data_dir.as_deref());
    let inner = arithmetic::brandt_matrix(N, p, parse_method(method)?, &dir).or_raise()?;
    Ok(PyBrandtMatrix { inner })
}

#[pyfunction]
#[allow(non_snake_case)]
fn supersingular_locus(N: u64) -> PyResult<Vec<(u64, u64)>> {
    Ok(arithmetic::supersingular_locus(N).or_raise()?.coords())
}

#[pyfunction]
fn ihara_zeta<'py>(py: Python<'py>, adjacency: Vec<Vec<BigInt>>) -> PyResult<Bound<'py, PyDict>> {
    let g = graph_from_adjacency(&matrix_from(adjacency)?).or_raise()?;
    ratfun_to_py(py, zeta::ihara_zeta(&g).or_raise()?.zeta())
}

#[pyfunction]
fn closed_path_counts(adjacency: Vec<Vec<BigInt>>, max: usize) -> PyResult<Vec<BigInt>> {
    let g = graph_from_adjacency(&matrix_from(adjacency)?).or_raise()?;
    Ok(zeta::closed_path_counts(&g, max))
}

#[pyfunction]
fn tree_count(adjacency: Vec<Vec<BigInt>>) -> PyResult<BigInt> {
    let g = graph_from_adjacency(&matrix_from(adjacency)?).or_raise()?;
    brandt_zeta::graph::tree_count(&g).or_raise()
}

#[pyfunction]
#[pyo3(signature = (N, p, data_dir = None))]
#[allow(non_snake_case)]
fn verify<'py>(py: Python<'py>, N: u64, p: u64, data_dir: Option<PathBuf>) -> PyResult<Bound<'py, PyAny>> {
    let dir = resolve_data_dir(data_dir.as_deref());
    let report = correspondence::verify_theorems(N, p, &dir).or_raise()?;
    json_to_py(py, &report.to_json())
}

#[pyfunction]
#[pyo3(signature = (N, p_max = 29, data_dir = None))]
#[allow(non_snake_case)]
fn table<'py>(py: Python<'py>, N: u64, p_max: u64, data_dir: Option<PathBuf>) -> PyResult<Bound<'py, PyAny>> {
    let dir = resolve_data_dir(data_dir.as_deref());
    let n = arithmetic::supersingular_locus(N).or_raise()?.len();
    let primes = correspondence::table_primes(N, n, p_max);
    let report = correspondence::table_report(N, &primes, &dir).or_raise()?;
    json_to_py(py, &report.to_json())
}

#[pyfunction]
#[pyo3(signature = (seed = DEFAULT_SEED, data_dir = None))]
fn selftest<'py>(py: Python<'py>, seed: u64, data_dir: Option<PathBuf>) -> PyResult<Bound<'py, PyAny>> {
    let dir = resolve_data_dir(data_dir.as_deref());
    let report = py.detach(|| run_selftest(seed, &dir));
    json_to_py(py, &serde_json::to_string(&report).expect("serialisable"))
}

#[pymodule(name = "brandt_zeta")]
fn brandt_zeta_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("BrandtZetaError", py.get_type::<BrandtZetaError>())?;
    m.add("MissingDataError", py.get_type::<MissingDataError>())?;
    m.add("ObstructionError", py.get_type::<ObstructionError>())?;
    m.add("DEFAULT_SEED", DEFAULT_SEED)?;
    m.add_class::<PyBrandtMatrix>()?;
    m.add_function(wrap_pyfunction!(brandt_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(supersingular_locus, m)?)?;
    m.add_function(wrap_pyfunction!(ihara_zeta, m)?)?;
    m.add_function(wrap_pyfunction!(closed_path_counts, m)?)?;
    m.add_function(wrap_pyfunction!(tree_count, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    m.add_function(wrap_pyfunction!(selftest, m)?)?;
    Ok(())
}
