//! Python bindings: `import iocg`.

use std::collections::BTreeMap;

use ::iocg as core;
use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn sign_from(value: i64) -> PyResult<core::Sign> {
    core::Sign::try_from(value).map_err(value_error)
}

fn kind_from(kind: &str) -> PyResult<core::Kind> {
    kind.parse().map_err(PyValueError::new_err)
}

/// An integral oriented circulant graph, given by its order and signed divisors.
#[pyclass(name = "GraphSpec", module = "iocg", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyGraphSpec {
    inner: core::GraphSpec,
}

#[pymethods]
impl PyGraphSpec {
    /// `divisors` maps each divisor of `n/4` to its sign, `+1` or `-1`.
    #[new]
    #[pyo3(signature = (n, divisors = BTreeMap::new()))]
    fn new(n: u64, divisors: BTreeMap<u64, i64>) -> PyResult<Self> {
        let pairs = divisors
            .into_iter()
            .map(|(d, s)| Ok((d, sign_from(s)?)))
            .collect::<PyResult<Vec<_>>>()?;
        let inner = core::GraphSpec::new(n, pairs).map_err(value_error)?;
        Ok(PyGraphSpec { inner })
    }

    #[staticmethod]
    fn from_symbol(n: u64, symbol: Vec<u64>) -> PyResult<Self> {
        let symbol = core::SymbolSet::new(n, symbol).map_err(value_error)?;
        let inner = core::classify_symbol(&symbol).map_err(value_error)?;
        Ok(PyGraphSpec { inner })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = serde_json::from_str(text).map_err(value_error)?;
        Ok(PyGraphSpec { inner })
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("serializable spec")
    }

    #[getter]
    fn n(&self) -> u64 {
        self.inner.n()
    }

    #[getter]
    fn divisors(&self) -> BTreeMap<u64, i64> {
        self.inner
            .divisor_signs()
            .iter()
            .map(|(&d, &s)| (d, s.value()))
            .collect()
    }

    fn symbol(&self) -> Vec<u64> {
        core::build_symbol(&self.inner).elements().iter().copied().collect()
    }

    /// Divisors grouped by level `ϑ₂(n/d)`.
    fn partition(&self) -> BTreeMap<u32, Vec<u64>> {
        core::d_partition(&self.inner)
            .levels()
            .map(|(i, ds)| (i, ds.iter().copied().collect()))
            .collect()
    }

    /// Arc-indicator matrix: `+1` where `H[u][v] = i`, `-1` where `H[u][v] = -i`.
    fn adjacency(&self) -> Vec<Vec<i8>> {
        let h = core::hermitian_adjacency(&core::build_symbol(&self.inner));
        h.rows().map(|r| r.to_vec()).collect()
    }

    fn spectrum(&self) -> Vec<i64> {
        core::eigenvalues_closed(&self.inner).values().to_vec()
    }

    fn has_pst(&self) -> bool {
        core::has_pst(&self.inner)
    }

    fn has_mst(&self) -> bool {
        core::has_mst(&self.inner)
    }

    fn has_ust(&self) -> bool {
        core::has_ust(&self.inner)
    }

    fn pst_pair_offsets(&self) -> Vec<u64> {
        core::pst_pair_offsets(&self.inner).into_iter().collect()
    }

    /// Smallest `t` with perfect transfer `b → a`, or `None`.
    #[pyo3(signature = (a, b, tolerance = core::transfer::FIDELITY_TOLERANCE))]
    fn certify(&self, a: u64, b: u64, tolerance: f64) -> PyResult<Option<PyCertificate>> {
        let cert = core::certify_with_tolerance(&self.inner, a, b, tolerance).map_err(value_error)?;
        Ok(cert.map(|inner| PyCertificate { inner }))
    }

    fn transition_entry(&self, a: u64, b: u64, t: f64) -> PyResult<Complex64> {
        core::transition_entry(&core::eigenvalues_closed(&self.inner), a, b, t).map_err(value_error)
    }

    fn __repr__(&self) -> String {
        format!("GraphSpec({})", self.inner)
    }
}

/// A verified perfect state transfer.
#[pyclass(name = "Certificate", module = "iocg", frozen)]
struct PyCertificate {
    inner: core::TransferCertificate,
}

#[pymethods]
impl PyCertificate {
    #[getter]
    fn a(&self) -> u64 {
        self.inner.a
    }

    #[getter]
    fn b(&self) -> u64 {
        self.inner.b
    }

    /// `(p, q)` with the transfer time `t = 2πp/q`.
    #[getter]
    fn time(&self) -> (u64, u64) {
        (self.inner.time.p(), self.inner.time.q())
    }

    #[getter]
    fn t(&self) -> f64 {
        self.inner.time.radians()
    }

    #[getter]
    fn phase(&self) -> Complex64 {
        self.inner.phase
    }

    #[getter]
    fn fidelity(&self) -> f64 {
        self.inner.fidelity
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("serializable certificate")
    }

    fn __repr__(&self) -> String {
        format!(
            "Certificate(a={}, b={}, t=2π·{}, fidelity={:.12})",
            self.inner.a, self.inner.b, self.inner.time, self.inner.fidelity
        )
    }
}

/// Spectrum of an arbitrary oriented symbol by the direct Fourier sum.
/// Raises `ValueError` when it is not integral.
#[pyfunction]
fn eigenvalues_direct(n: u64, symbol: Vec<u64>) -> PyResult<Vec<i64>> {
    let symbol = core::SymbolSet::new(n, symbol).map_err(value_error)?;
    Ok(core::eigenvalues_direct(&symbol)
        .map_err(value_error)?
        .values()
        .to_vec())
}

#[pyfunction]
fn eigenvalues_float(n: u64, symbol: Vec<u64>) -> PyResult<Vec<f64>> {
    let symbol = core::SymbolSet::new(n, symbol).map_err(value_error)?;
    Ok(core::eigenvalues_float(&symbol))
}

#[pyfunction]
fn integral_specs(n: u64) -> PyResult<Vec<PyGraphSpec>> {
    let specs = core::integral_specs(n).map_err(value_error)?;
    Ok(specs.into_iter().map(|inner| PyGraphSpec { inner }).collect())
}

/// Graphs of order `n` with `kind` ("pst" or "mst"), in canonical order.
#[pyfunction]
#[pyo3(signature = (n, kind, cap = core::census::DEFAULT_ENUMERATION_CAP))]
fn enumerate(n: u64, kind: &str, cap: u64) -> PyResult<Vec<PyGraphSpec>> {
    let record = core::enumerate_with_cap(n, kind_from(kind)?, cap).map_err(value_error)?;
    Ok(record.specs.into_iter().map(|inner| PyGraphSpec { inner }).collect())
}

#[pyfunction]
fn count_formula(n: u64, kind: &str) -> PyResult<u64> {
    Ok(kind_from(kind)?.formula_count(n))
}

#[pyfunction]
fn sine_sum(n: u64, q: u64) -> PyResult<i64> {
    core::numtheory::sine_sum_closed(n, q).map_err(value_error)
}

#[pyfunction]
fn ramanujan_sum(n: u64, q: u64) -> PyResult<i64> {
    core::numtheory::ramanujan_sum(n, q).map_err(value_error)
}

#[pymodule(name = "iocg")]
fn iocg_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraphSpec>()?;
    m.add_class::<PyCertificate>()?;
    m.add_function(wrap_pyfunction!(eigenvalues_direct, m)?)?;
    m.add_function(wrap_pyfunction!(eigenvalues_float, m)?)?;
    m.add_function(wrap_pyfunction!(integral_specs, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(count_formula, m)?)?;
    m.add_function(wrap_pyfunction!(sine_sum, m)?)?;
    m.add_function(wrap_pyfunction!(ramanujan_sum, m)?)?;
    Ok(())
}
