//! Python bindings: the named series, the identity registry, the matrix
//! checks and the numeric transformation checks, exposed in-process.
//!
//! Reports come back as JSON strings in the same schema the CLI writes, so
//! Python callers can `json.loads` them directly.

use num_complex::Complex64;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use klein7::exact::{named_constant, rational_from_str, rational_to_string, NamedConstant};
use klein7::identities;
use klein7::klein;
use klein7::numeric::{self, NumericCheck};
use klein7::series::{named_series, PuiseuxSeries, SeriesName, DEFAULT_GRID};

fn parse_name(name: &str) -> PyResult<SeriesName> {
    SeriesName::parse(name)
        .ok_or_else(|| PyValueError::new_err(format!("unknown series name: {name}")))
}

/// A truncated q-expansion with exact rational coefficients.
#[pyclass]
struct Series {
    inner: PuiseuxSeries<klein7::exact::Rational>,
}

#[pymethods]
impl Series {
    /// Grid denominator D; exponents are integer multiples of 1/D.
    #[getter]
    fn grid(&self) -> i64 {
        self.inner.grid()
    }

    /// Leading exponent as an exact string, or None for a zero expansion.
    #[getter]
    fn lead(&self) -> Option<String> {
        self.inner.lead_exponent().map(|e| rational_to_string(&e))
    }

    /// The series is known modulo q^trunc (exact string).
    #[getter]
    fn trunc(&self) -> String {
        rational_to_string(&self.inner.trunc_exponent())
    }

    /// Coefficient at an exact rational exponent such as "1/56" or "-1".
    fn coefficient(&self, exponent: &str) -> PyResult<String> {
        let e = rational_from_str(exponent)
            .ok_or_else(|| PyValueError::new_err(format!("bad exponent: {exponent}")))?;
        self.inner
            .coefficient(&e)
            .map(|c| rational_to_string(&c))
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// All nonzero (exponent, coefficient) pairs as exact strings.
    fn terms(&self) -> Vec<(String, String)> {
        self.inner
            .terms()
            .map(|(n, c)| {
                let e = klein7::exact::Rational::new(n.into(), self.inner.grid().into());
                (rational_to_string(&e), rational_to_string(c))
            })
            .collect()
    }

    /// JSON form: {grid, lead, trunc, coefficients}.
    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    fn __repr__(&self) -> String {
        format!("Series({})", self.inner)
    }
}

/// Expand a named series (u, v, w, s, t, h, z, eta, eta7, etaquot4, j7star)
/// to the given integer truncation order.
#[pyfunction]
fn expand(name: &str, order: i64) -> PyResult<Series> {
    let sn = parse_name(name)?;
    if order < 1 {
        return Err(PyValueError::new_err("order must be >= 1"));
    }
    let inner = named_series(sn, DEFAULT_GRID, order * DEFAULT_GRID)
        .map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok(Series { inner })
}

/// Names of every series `expand` accepts.
#[pyfunction]
fn series_names() -> Vec<&'static str> {
    SeriesName::ALL.iter().map(|n| n.as_str()).collect()
}

/// Ids of every registry identity (series and polynomial kinds).
#[pyfunction]
fn registry_ids() -> Vec<&'static str> {
    identities::registry().iter().map(|e| e.id()).collect()
}

/// Verify one registry identity at the given truncation order; returns the
/// report as a JSON string.
#[pyfunction]
fn verify(id: &str, order: i64) -> PyResult<String> {
    identities::verify(id, order)
        .map(|r| r.to_json().to_string())
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Verify the whole registry; returns a JSON array of reports.
#[pyfunction]
fn verify_all(order: i64) -> PyResult<String> {
    let reports: Vec<serde_json::Value> = identities::verify_all(order)
        .iter()
        .map(|r| r.to_json())
        .collect();
    Ok(serde_json::Value::Array(reports).to_string())
}

/// Run the exact matrix/root checks; returns a JSON array of reports.
#[pyfunction]
fn klein_checks() -> String {
    let reports: Vec<serde_json::Value> = klein::run_all_checks()
        .iter()
        .map(|r| r.to_json())
        .collect();
    serde_json::Value::Array(reports).to_string()
}

/// Run one numeric transformation check at tau = tau_re + i tau_im.
#[pyfunction]
#[pyo3(signature = (check, tau_re, tau_im, terms = 64, tol = 1e-8))]
fn numeric_check(check: &str, tau_re: f64, tau_im: f64, terms: i64, tol: f64) -> PyResult<String> {
    let c = NumericCheck::parse(check).map_err(|e| PyValueError::new_err(e.to_string()))?;
    numeric::run_check(c, Complex64::new(tau_re, tau_im), terms, tol)
        .map(|r| r.to_json().to_string())
        .map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

/// The named constants of Q(zeta_7) with exact coefficient arrays and
/// complex approximations, as a JSON object keyed by name.
#[pyfunction]
fn roots_json() -> String {
    let mut obj = serde_json::Map::new();
    for c in NamedConstant::ALL {
        let v = named_constant(c);
        let a = v.embed(1, 10).expect("constants embed in f64");
        obj.insert(
            c.as_str().to_owned(),
            serde_json::json!({
                "coefficients": v.coeffs().iter().map(rational_to_string).collect::<Vec<_>>(),
                "approx": [a.re, a.im],
                "display": v.to_string(),
            }),
        );
    }
    serde_json::Value::Object(obj).to_string()
}

#[pymodule]
fn klein7_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<Series>()?;
    m.add_function(wrap_pyfunction!(expand, m)?)?;
    m.add_function(wrap_pyfunction!(series_names, m)?)?;
    m.add_function(wrap_pyfunction!(registry_ids, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    m.add_function(wrap_pyfunction!(klein_checks, m)?)?;
    m.add_function(wrap_pyfunction!(numeric_check, m)?)?;
    m.add_function(wrap_pyfunction!(roots_json, m)?)?;
    Ok(())
}
