use std::path::PathBuf;
use std::sync::Arc;

use bernoulli_stirling as bs;
use bs::deriv;
use bs::formulas::{self, FormulaContext, FormulaId};
use bs::harness;
use bs::stirling;
use bs::{ExactRational, RationalPolynomial};
use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyList;

fn to_py_err(e: bs::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Converts to `fractions.Fraction`.
fn fraction<'py>(py: Python<'py>, v: &ExactRational) -> PyResult<Bound<'py, PyAny>> {
    let cls = py.import("fractions")?.getattr("Fraction")?;
    cls.call1((v.numer().clone(), v.denom().clone()))
}

fn fractions<'py>(py: Python<'py>, vs: &[ExactRational]) -> PyResult<Bound<'py, PyList>> {
    let items = vs.iter().map(|v| fraction(py, v)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

/// Accepts a `Fraction`, an `int`, or a `"p/q"` string.
fn rational_arg(v: &Bound<'_, PyAny>) -> PyResult<ExactRational> {
    if let Ok(s) = v.extract::<String>() {
        return bs::exact::parse_rational(&s).map_err(to_py_err);
    }
    if let Ok(i) = v.extract::<BigInt>() {
        return Ok(ExactRational::from_integer(i));
    }
    let num: BigInt = v.getattr("numerator")?.extract()?;
    let den: BigInt = v.getattr("denominator")?.extract()?;
    bs::rat(num, den).map_err(to_py_err)
}

fn poly_coefficients<'py>(py: Python<'py>, p: &RationalPolynomial) -> PyResult<Bound<'py, PyList>> {
    fractions(py, p.coefficients())
}

fn parse_formula(name: &str) -> PyResult<FormulaId> {
    name.parse().map_err(to_py_err)
}

/// Stirling numbers of the second kind, rows `0..=max_n`.
#[pyclass(name = "StirlingTriangle", module = "bstir", frozen)]
struct PyStirlingTriangle {
    inner: Arc<stirling::StirlingTriangle>,
}

#[pymethods]
impl PyStirlingTriangle {
    #[new]
    fn new(max_n: usize) -> Self {
        Self { inner: Arc::new(stirling::StirlingTriangle::build(max_n)) }
    }

    #[staticmethod]
    fn load(path: PathBuf) -> PyResult<Self> {
        let t = stirling::triangle_load(&path).map_err(to_py_err)?;
        Ok(Self { inner: Arc::new(t) })
    }

    fn save(&self, path: PathBuf) -> PyResult<()> {
        stirling::triangle_save(&self.inner, &path).map_err(to_py_err)
    }

    #[getter]
    fn max_n(&self) -> usize {
        self.inner.max_n()
    }

    fn get(&self, n: usize, k: usize) -> PyResult<BigInt> {
        self.inner.get(n, k).cloned().map_err(to_py_err)
    }

    fn row(&self, n: usize) -> PyResult<Vec<BigInt>> {
        self.inner.row(n).map(<[BigInt]>::to_vec).map_err(to_py_err)
    }

    fn __repr__(&self) -> String {
        format!("StirlingTriangle(max_n={})", self.inner.max_n())
    }
}

/// `S(n, k)` by the recurrence.
#[pyfunction]
fn stirling2(n: usize, k: usize) -> PyResult<BigInt> {
    Ok(stirling::StirlingTriangle::build(n).get(n, k).map_err(to_py_err)?.clone())
}

/// `S(n, k)` by the explicit alternating sum.
#[pyfunction]
fn stirling2_explicit(n: usize, k: usize) -> PyResult<BigInt> {
    stirling::stirling_explicit(n, k).map_err(to_py_err)
}

/// Identifiers of every formula, in canonical order.
#[pyfunction]
fn formula_ids() -> Vec<&'static str> {
    FormulaId::ALL.iter().map(|f| f.name()).collect()
}

#[pyfunction]
fn is_trusted(formula: &str) -> PyResult<bool> {
    Ok(parse_formula(formula)?.trusted())
}

/// `B_n` from the given formula (default: the series oracle).
#[pyfunction]
#[pyo3(signature = (n, formula = "SERIES_ORACLE"))]
fn bernoulli<'py>(py: Python<'py>, n: usize, formula: &str) -> PyResult<Bound<'py, PyAny>> {
    let f = parse_formula(formula)?;
    let ctx = FormulaContext::for_index(n);
    let v = py.detach(|| f.evaluate_bernoulli(&ctx, n)).map_err(to_py_err)?;
    fraction(py, &v)
}

/// `G_k` from the Stirling-number theorem.
#[pyfunction]
fn genocchi(k: usize) -> PyResult<BigInt> {
    let ctx = FormulaContext::for_index(k);
    Ok(formulas::genocchi_theorem(&ctx, k).map_err(to_py_err)?.to_integer())
}

/// `G_k` from the derivative polynomial of `1/(e^t+1)` evaluated at `1/2`.
#[pyfunction]
fn genocchi_via_proof(k: usize) -> PyResult<BigInt> {
    Ok(deriv::genocchi_via_proof(k).map_err(to_py_err)?.to_integer())
}

#[pyfunction]
fn euler_at_zero<'py>(py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyAny>> {
    let ctx = FormulaContext::for_index(2 * n);
    fraction(py, &formulas::euler_at_zero(&ctx, n).map_err(to_py_err)?)
}

/// `[A_0, ..., A_{p+1}]` with `sum_{m=1..n} m^p = sum A_m n^m`.
#[pyfunction]
fn faulhaber_coefficients<'py>(py: Python<'py>, p: usize) -> PyResult<Bound<'py, PyList>> {
    fractions(py, formulas::faulhaber_coefficients(p).coefficients())
}

/// Coefficients (constant term first) of the k-th derivative polynomial.
#[pyfunction]
#[pyo3(signature = (k, alpha = None))]
fn derivative_polynomial<'py>(
    py: Python<'py>,
    k: usize,
    alpha: Option<&Bound<'py, PyAny>>,
) -> PyResult<Bound<'py, PyList>> {
    let alpha = match alpha {
        Some(a) => rational_arg(a)?,
        None => ExactRational::from_integer(1.into()),
    };
    poly_coefficients(py, &deriv::derivative_polynomial(k, &alpha))
}

#[pyfunction]
fn v_form_polynomial<'py>(py: Python<'py>, k: usize) -> PyResult<Bound<'py, PyList>> {
    poly_coefficients(py, &deriv::v_form_polynomial(k))
}

/// Runs the differential verification and returns the report as JSON text.
#[pyfunction]
#[pyo3(signature = (max_n, parallel = true, deterministic = false))]
fn verify(py: Python<'_>, max_n: usize, parallel: bool, deterministic: bool) -> PyResult<String> {
    let mut report = py
        .detach(|| {
            let ctx = FormulaContext::for_index(max_n);
            harness::verify_range_with(&ctx, max_n, parallel)
        })
        .map_err(to_py_err)?;
    if deterministic {
        report.zero_timings();
    }
    Ok(report.to_json())
}

#[pymodule]
fn bstir(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyStirlingTriangle>()?;
    m.add_function(wrap_pyfunction!(stirling2, m)?)?;
    m.add_function(wrap_pyfunction!(stirling2_explicit, m)?)?;
    m.add_function(wrap_pyfunction!(formula_ids, m)?)?;
    m.add_function(wrap_pyfunction!(is_trusted, m)?)?;
    m.add_function(wrap_pyfunction!(bernoulli, m)?)?;
    m.add_function(wrap_pyfunction!(genocchi, m)?)?;
    m.add_function(wrap_pyfunction!(genocchi_via_proof, m)?)?;
    m.add_function(wrap_pyfunction!(euler_at_zero, m)?)?;
    m.add_function(wrap_pyfunction!(faulhaber_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(derivative_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(v_form_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
