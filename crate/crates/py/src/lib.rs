//! Python bindings for the fatpoints library. Exact rationals cross the
//! boundary as strings like "5/3"; exponent vectors as lists of ints.

use std::str::FromStr;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use fatpoints_core::asymptotics::{
    chudnovsky_check, delta_t0, hh_points_check, seshadri_lower_bound, waldschmidt_report,
};
use fatpoints_core::interp::{
    alpha_symbolic, alpha_table, hilbert_function, is_generic_position, Mode,
};
use fatpoints_core::linalg::RankStrategy;
use fatpoints_core::monomial::{symbolic_power, verify_counterexample, Monomial, MonomialIdeal};
use fatpoints_core::points::{sample_config, star_configuration, Hyperplane, PointConfig};
use fatpoints_core::Rational;

fn core_err(e: fatpoints_core::Error) -> PyErr {
    use fatpoints_core::Error as E;
    match e {
        E::Internal(msg) => PyRuntimeError::new_err(msg),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn parse_strategy(s: &str) -> PyResult<RankStrategy> {
    match s {
        "exact" => Ok(RankStrategy::Exact),
        "modular" => Ok(RankStrategy::Modular),
        "multimodular" => Ok(RankStrategy::Multimodular),
        "multimodular-certify" => Ok(RankStrategy::MultimodularCertify),
        _ => Err(PyValueError::new_err(format!(
            "unknown strategy {:?}; expected exact, modular, multimodular, or multimodular-certify",
            s
        ))),
    }
}

fn parse_mode(s: &str) -> PyResult<Mode> {
    match s {
        "affine" => Ok(Mode::Affine),
        "homogeneous" => Ok(Mode::Homogeneous),
        _ => Err(PyValueError::new_err(format!(
            "unknown mode {:?}; expected affine or homogeneous",
            s
        ))),
    }
}

/// Rows may mix Python ints and strings like "2" or "1/3".
fn parse_rows(rows: &Bound<'_, PyAny>) -> PyResult<Vec<Vec<Rational>>> {
    let mut out = Vec::new();
    for (i, row) in rows.try_iter()?.enumerate() {
        let row = row?;
        let mut coords = Vec::new();
        for (j, entry) in row.try_iter()?.enumerate() {
            let entry = entry?;
            let text = if let Ok(n) = entry.extract::<i64>() {
                n.to_string()
            } else {
                entry.extract::<String>().map_err(|_| {
                    PyValueError::new_err(format!(
                        "row {} entry {}: expected int or rational string",
                        i, j
                    ))
                })?
            };
            coords.push(Rational::from_str(text.trim()).map_err(|e| {
                PyValueError::new_err(format!("row {} entry {}: {}", i, j, e))
            })?);
        }
        out.push(coords);
    }
    Ok(out)
}

/// A configuration of distinct points in projective space, stored with
/// normalized integer coordinates.
#[pyclass(name = "PointConfig", frozen)]
struct PyPointConfig {
    inner: PointConfig,
}

#[pymethods]
impl PyPointConfig {
    /// Build from homogeneous coordinate rows of length N+1.
    #[new]
    #[pyo3(signature = (rows, label=None))]
    fn new(rows: &Bound<'_, PyAny>, label: Option<String>) -> PyResult<Self> {
        let rows = parse_rows(rows)?;
        let dim = rows
            .first()
            .map(|r| r.len().saturating_sub(1))
            .ok_or_else(|| PyValueError::new_err("need at least one point"))?;
        let cfg = PointConfig::from_rational_rows(
            dim,
            &rows,
            label.unwrap_or_else(|| "python input".into()),
        )
        .map_err(core_err)?;
        cfg.ensure_valid().map_err(core_err)?;
        Ok(PyPointConfig { inner: cfg })
    }

    /// Sample n distinct rational points of bounded height in P^dim.
    #[staticmethod]
    #[pyo3(signature = (n, dim, seed=0, height=10))]
    fn sample(n: usize, dim: usize, seed: u64, height: u32) -> PyResult<Self> {
        Ok(PyPointConfig {
            inner: sample_config(n, dim, seed, height).map_err(core_err)?,
        })
    }

    /// Star configuration cut out by hyperplanes given as coefficient rows.
    #[staticmethod]
    fn star(rows: &Bound<'_, PyAny>) -> PyResult<Self> {
        let rows = parse_rows(rows)?;
        let planes = rows
            .iter()
            .map(|r| Hyperplane::new(r).map_err(core_err))
            .collect::<PyResult<Vec<_>>>()?;
        Ok(PyPointConfig {
            inner: star_configuration(&planes).map_err(core_err)?,
        })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn n_points(&self) -> usize {
        self.inner.len()
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label().to_string()
    }

    /// Normalized integer coordinates, as decimal strings.
    fn points(&self) -> Vec<Vec<String>> {
        self.inner
            .points()
            .iter()
            .map(|p| p.coords().iter().map(|c| c.to_string()).collect())
            .collect()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "PointConfig(dim={}, n_points={}, label={:?})",
            self.inner.dim(),
            self.inner.len(),
            self.inner.label()
        )
    }
}

/// Initial degree of the m-th symbolic power, with its certificate data.
#[pyfunction]
#[pyo3(signature = (cfg, m=1, strategy="multimodular-certify", mode="affine"))]
fn alpha<'py>(
    py: Python<'py>,
    cfg: &PyPointConfig,
    m: u32,
    strategy: &str,
    mode: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let entry = alpha_symbolic(&cfg.inner, m, parse_strategy(strategy)?, parse_mode(mode)?)
        .map_err(core_err)?;
    let d = PyDict::new(py);
    d.set_item("m", entry.m)?;
    d.set_item("alpha", entry.alpha)?;
    d.set_item("ratio", entry.ratio().to_string())?;
    d.set_item("kernel_dim_at_alpha", entry.kernel_dim_at_alpha)?;
    d.set_item("certified", entry.is_certified())?;
    d.set_item("warnings", entry.warnings)?;
    Ok(d)
}

/// alpha_m for m = 1..=m_max as a list of dicts.
#[pyfunction]
#[pyo3(signature = (cfg, m_max, strategy="multimodular-certify", mode="affine"))]
fn alphas<'py>(
    py: Python<'py>,
    cfg: &PyPointConfig,
    m_max: u32,
    strategy: &str,
    mode: &str,
) -> PyResult<Bound<'py, PyList>> {
    let table = alpha_table(&cfg.inner, m_max, parse_strategy(strategy)?, parse_mode(mode)?)
        .map_err(core_err)?;
    let items = table
        .entries
        .iter()
        .map(|e| {
            let d = PyDict::new(py);
            d.set_item("m", e.m)?;
            d.set_item("alpha", e.alpha)?;
            d.set_item("ratio", e.ratio().to_string())?;
            d.set_item("certified", e.is_certified())?;
            Ok(d)
        })
        .collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

/// Waldschmidt-constant bracket with the Chudnovsky-type verdicts.
#[pyfunction]
#[pyo3(signature = (cfg, m_max=3, strategy="multimodular-certify", mode="affine"))]
fn waldschmidt<'py>(
    py: Python<'py>,
    cfg: &PyPointConfig,
    m_max: u32,
    strategy: &str,
    mode: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let r = waldschmidt_report(&cfg.inner, m_max, parse_strategy(strategy)?, parse_mode(mode)?)
        .map_err(core_err)?;
    let d = PyDict::new(py);
    d.set_item("alpha", r.alpha)?;
    let rows = r
        .rows
        .iter()
        .map(|row| {
            let rd = PyDict::new(py);
            rd.set_item("m", row.m)?;
            rd.set_item("alpha_m", row.alpha_m)?;
            rd.set_item("ratio", row.ratio.to_string())?;
            rd.set_item("chudnovsky_slack", row.chudnovsky_slack.to_string())?;
            rd.set_item("chudnovsky_holds", row.chudnovsky_holds)?;
            Ok(rd)
        })
        .collect::<PyResult<Vec<_>>>()?;
    d.set_item("rows", rows)?;
    d.set_item("waldschmidt_upper_bound", r.upper_bound.to_string())?;
    d.set_item("skoda_lower_bound", r.skoda_lower.to_string())?;
    d.set_item("esnault_viehweg_lower_bound", r.ev_lower.to_string())?;
    d.set_item("chudnovsky_target", r.chudnovsky_target.to_string())?;
    d.set_item("warnings", r.warnings)?;
    Ok(d)
}

/// Chudnovsky slack per multiplicity: [(m, alpha_m, slack, holds), ...].
#[pyfunction]
#[pyo3(signature = (cfg, m_max=3, strategy="multimodular-certify", mode="affine"))]
fn chudnovsky<'py>(
    py: Python<'py>,
    cfg: &PyPointConfig,
    m_max: u32,
    strategy: &str,
    mode: &str,
) -> PyResult<Bound<'py, PyList>> {
    let verdicts = chudnovsky_check(&cfg.inner, m_max, parse_strategy(strategy)?, parse_mode(mode)?)
        .map_err(core_err)?;
    let items = verdicts
        .iter()
        .map(|v| {
            let d = PyDict::new(py);
            d.set_item("m", v.m)?;
            d.set_item("alpha_m", v.alpha_m)?;
            d.set_item("slack", v.slack.to_string())?;
            d.set_item("holds", v.holds)?;
            Ok(d)
        })
        .collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

/// Hilbert function of the point ideal in degrees 0..=d_max.
#[pyfunction]
fn hilbert(cfg: &PyPointConfig, d_max: u32) -> PyResult<Vec<usize>> {
    (0..=d_max)
        .map(|d| hilbert_function(&cfg.inner, d).map_err(core_err))
        .collect()
}

/// True when the points impose independent conditions in every degree.
#[pyfunction]
fn generic_position(cfg: &PyPointConfig) -> PyResult<bool> {
    is_generic_position(&cfg.inner).map_err(core_err)
}

/// Seshadri-type lower bound ((alpha+N-1)/(nN))^(1/(N-1)).
#[pyfunction]
#[pyo3(signature = (cfg, strategy="multimodular-certify", mode="affine"))]
fn seshadri<'py>(
    py: Python<'py>,
    cfg: &PyPointConfig,
    strategy: &str,
    mode: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let b = seshadri_lower_bound(&cfg.inner, parse_strategy(strategy)?, parse_mode(mode)?)
        .map_err(core_err)?;
    let d = PyDict::new(py);
    d.set_item("radicand", b.radicand.to_string())?;
    d.set_item("root_order", b.root_order)?;
    d.set_item("decimal", b.decimal)?;
    Ok(d)
}

/// delta = least s with s*alpha > alpha_s, and t0 = (N-1)*delta.
#[pyfunction]
#[pyo3(signature = (cfg, s_max=5, strategy="multimodular-certify", mode="affine"))]
fn delta<'py>(
    py: Python<'py>,
    cfg: &PyPointConfig,
    s_max: u32,
    strategy: &str,
    mode: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let r = delta_t0(&cfg.inner, s_max, parse_strategy(strategy)?, parse_mode(mode)?)
        .map_err(core_err)?;
    let d = PyDict::new(py);
    d.set_item("alpha", r.alpha)?;
    d.set_item("delta", r.delta)?;
    d.set_item("t0", r.t0)?;
    d.set_item("alphas", r.alphas)?;
    Ok(d)
}

/// Degreewise containment check I^(Nm) in M^{m(N-1)} I^m up to d_max.
#[pyfunction]
#[pyo3(signature = (cfg, m=1, d_max=None, strategy="multimodular-certify", mode="affine"))]
fn hh_check<'py>(
    py: Python<'py>,
    cfg: &PyPointConfig,
    m: u32,
    d_max: Option<u32>,
    strategy: &str,
    mode: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let r = hh_points_check(&cfg.inner, m, d_max, parse_strategy(strategy)?, parse_mode(mode)?)
        .map_err(core_err)?;
    let d = PyDict::new(py);
    d.set_item("m", r.m)?;
    d.set_item("d_max", r.d_max)?;
    d.set_item("all_hold", r.all_hold)?;
    let degrees = r
        .degrees
        .iter()
        .map(|v| {
            let vd = PyDict::new(py);
            vd.set_item("degree", v.degree)?;
            vd.set_item("lhs_dim", v.lhs_dim)?;
            vd.set_item("rhs_dim", v.rhs_dim)?;
            vd.set_item("holds", v.holds)?;
            Ok(vd)
        })
        .collect::<PyResult<Vec<_>>>()?;
    d.set_item("degrees", degrees)?;
    d.set_item("note", r.note)?;
    Ok(d)
}

fn ideal_from_py(variables: Vec<String>, generators: Vec<Vec<u32>>) -> PyResult<MonomialIdeal> {
    if variables.is_empty() {
        return Err(PyValueError::new_err("need at least one variable"));
    }
    for (i, g) in generators.iter().enumerate() {
        if g.len() != variables.len() {
            return Err(PyValueError::new_err(format!(
                "generator {} has {} exponents, expected {}",
                i,
                g.len(),
                variables.len()
            )));
        }
    }
    Ok(MonomialIdeal::new(
        variables,
        generators.into_iter().map(Monomial).collect(),
    ))
}

/// m-th symbolic power of a monomial ideal, as minimal generator
/// exponent vectors.
#[pyfunction]
fn monomial_symbolic_power(
    variables: Vec<String>,
    generators: Vec<Vec<u32>>,
    m: u32,
) -> PyResult<Vec<Vec<u32>>> {
    let ideal = ideal_from_py(variables, generators)?;
    let result = symbolic_power(&ideal, m, None).map_err(core_err)?;
    Ok(result.generators().iter().map(|g| g.0.clone()).collect())
}

/// Least generator degree of a monomial ideal.
#[pyfunction]
fn monomial_alpha(variables: Vec<String>, generators: Vec<Vec<u32>>) -> PyResult<u32> {
    ideal_from_py(variables, generators)?
        .alpha()
        .map_err(core_err)
}

/// Verify the stock counterexample: a product of monomial ideals J with
/// (J^(2))^(2) != J^(4).
#[pyfunction]
fn counterexample<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
    let r = verify_counterexample().map_err(core_err)?;
    let d = PyDict::new(py);
    let checks = r
        .checks
        .iter()
        .map(|c| {
            let cd = PyDict::new(py);
            cd.set_item("name", &c.name)?;
            cd.set_item("passed", c.passed)?;
            cd.set_item("witness", &c.witness)?;
            Ok(cd)
        })
        .collect::<PyResult<Vec<_>>>()?;
    d.set_item("checks", checks)?;
    d.set_item("socle_witness", r.socle_witness)?;
    d.set_item("deep_witness", r.deep_witness)?;
    d.set_item("ass_primes_of_square", r.ass_j2)?;
    d.set_item("conclusion_holds", r.conclusion_holds)?;
    Ok(d)
}

#[pymodule]
fn fatpoints(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPointConfig>()?;
    m.add_function(wrap_pyfunction!(alpha, m)?)?;
    m.add_function(wrap_pyfunction!(alphas, m)?)?;
    m.add_function(wrap_pyfunction!(waldschmidt, m)?)?;
    m.add_function(wrap_pyfunction!(chudnovsky, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert, m)?)?;
    m.add_function(wrap_pyfunction!(generic_position, m)?)?;
    m.add_function(wrap_pyfunction!(seshadri, m)?)?;
    m.add_function(wrap_pyfunction!(delta, m)?)?;
    m.add_function(wrap_pyfunction!(hh_check, m)?)?;
    m.add_function(wrap_pyfunction!(monomial_symbolic_power, m)?)?;
    m.add_function(wrap_pyfunction!(monomial_alpha, m)?)?;
    m.add_function(wrap_pyfunction!(counterexample, m)?)?;
    Ok(())
}
