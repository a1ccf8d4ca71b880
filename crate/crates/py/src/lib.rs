//! Python bindings: a thin, dict-returning surface over the core crate.
//!
//! Two classes carry the state (`LieAlgebra`, `ComplexStructure`); solver
//! results come back as plain dicts and lists mirroring the CLI's JSON so
//! they can be poked at interactively or fed to other tooling.  Exact
//! scalars cross the boundary as strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use nla_core::catalog::{
    build_snn, build_wnn, realify_table1, reduce_to_normal_form, GenericExtParams, SnNParams,
    WnNParams,
};
use nla_core::cpxstruct::{j_compatible_series, CoframePresentation, JType};
use nla_core::exactnum::{parse_gauss, Mat};
use nla_core::invariants::{fingerprint_seeded, CASIMIR_DEFAULT_SEED, ND_DEFAULT_HEIGHT};
use nla_core::liealg;
use nla_core::pseudokahler::{complex_symplectic_solve, forced_zero_coords, json_report};
use nla_core::verify::{table2_diff, table2_golden, table2_rows};
use nla_core::{Error, Result};

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_to_py(py: Python<'_>, v: &serde_json::Value) -> PyObject {
    match v {
        serde_json::Value::Null => py.None(),
        serde_json::Value::Bool(b) => b.into_py(py),
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_py(py)
            } else if let Some(u) = n.as_u64() {
                u.into_py(py)
            } else {
                n.as_f64().unwrap().into_py(py)
            }
        }
        serde_json::Value::String(s) => s.into_py(py),
        serde_json::Value::Array(a) => {
            PyList::new_bound(py, a.iter().map(|x| json_to_py(py, x))).into_py(py)
        }
        serde_json::Value::Object(o) => {
            let d = PyDict::new_bound(py);
            for (k, val) in o {
                d.set_item(k, json_to_py(py, val)).unwrap();
            }
            d.into_py(py)
        }
    }
}

#[pyclass(name = "LieAlgebra")]
#[derive(Clone)]
struct PyLieAlgebra {
    inner: liealg::LieAlgebra,
    label: String,
}

#[pymethods]
impl PyLieAlgebra {
    /// Accepts a catalog name (f1..f8, g10^0, h19^-, h26^+) or a structure
    /// tuple like "(0,0,0,2.13)".
    #[new]
    fn new(reference: &str) -> PyResult<Self> {
        let (g, builtin) = liealg::resolve(reference).map_err(py_err)?;
        let label = match builtin {
            Some(b) => b.label().to_string(),
            None => g.render(),
        };
        Ok(PyLieAlgebra { inner: g, label })
    }

    #[getter]
    fn label(&self) -> &str {
        &self.label
    }

    fn dsl(&self) -> String {
        self.inner.render()
    }

    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn step(&self) -> usize {
        self.inner.step()
    }

    fn center_dim(&self) -> usize {
        self.inner.center().dim()
    }

    /// Ascending type, descending type, b1..b4, n_d, and n_I as a dict.
    #[pyo3(signature = (seed=None, height=None))]
    fn fingerprint(&self, py: Python<'_>, seed: Option<u64>, height: Option<i64>) -> PyResult<PyObject> {
        let fp = fingerprint_seeded(
            &self.inner,
            seed.unwrap_or(CASIMIR_DEFAULT_SEED),
            height.unwrap_or(ND_DEFAULT_HEIGHT),
        )
        .map_err(py_err)?;
        Ok(json_to_py(py, &serde_json::to_value(&fp).unwrap()))
    }

    fn __repr__(&self) -> String {
        format!("LieAlgebra({})", self.label)
    }

    fn __eq__(&self, other: &PyLieAlgebra) -> bool {
        self.inner == other.inner
    }
}

/// Dims of the compatible ascending series; the stabilised repeat is
/// appended whenever the series stops short of the whole algebra.
fn series_dims(g: &liealg::LieAlgebra, j: &nla_core::cpxstruct::RealJ) -> (Vec<usize>, JType) {
    let (flag, jtype) = j_compatible_series(g, j);
    let mut dims = flag.dims();
    if !matches!(jtype, JType::Nilpotent) {
        dims.push(dims.last().copied().unwrap_or(0));
    }
    (dims, jtype)
}

#[pyclass(name = "ComplexStructure")]
struct PyComplexStructure {
    label: String,
    underlying: String,
    p: CoframePresentation,
}

#[pymethods]
impl PyComplexStructure {
    /// Accepts "wnn(eps,delta,nu,a,B)", "snn1(..)", "snn2(..)", or "torus".
    #[new]
    fn new(reference: &str) -> PyResult<Self> {
        let t = reference.trim();
        let (label, underlying, p) = if t == "torus" {
            (
                "torus".to_string(),
                "(0,0,0,0,0,0,0,0)".to_string(),
                CoframePresentation::torus(4),
            )
        } else if t.starts_with("wnn") {
            let params = WnNParams::parse(t).map_err(py_err)?;
            let (_, _, b) = realify_table1(&params).map_err(py_err)?;
            (params.label(), b.label().to_string(), build_wnn(&params))
        } else if t.starts_with("snn") {
            let params = SnNParams::parse(t).map_err(py_err)?;
            let p = build_snn(&params);
            let (g, _) = p.realify().map_err(py_err)?;
            (params.label(), g.render(), p)
        } else {
            return Err(PyValueError::new_err(format!(
                "expected wnn(..), snn1(..), snn2(..), or torus, got {t:?}"
            )));
        };
        Ok(PyComplexStructure { label, underlying, p })
    }

    #[getter]
    fn label(&self) -> &str {
        &self.label
    }

    /// Name or structure tuple of the real algebra underneath.
    #[getter]
    fn underlying(&self) -> &str {
        &self.underlying
    }

    #[pyo3(signature = (tex=false))]
    fn equations(&self, tex: bool) -> Vec<String> {
        self.p.equations(tex)
    }

    fn realify(&self) -> PyResult<PyLieAlgebra> {
        let (g, _) = self.p.realify().map_err(py_err)?;
        let label = g.render();
        Ok(PyLieAlgebra { inner: g, label })
    }

    /// Type tag and the dims of the compatible ascending series.
    fn classify(&self, py: Python<'_>) -> PyResult<PyObject> {
        let (g, j) = self.p.realify().map_err(py_err)?;
        let (dims, jtype) = series_dims(&g, &j);
        let d = PyDict::new_bound(py);
        d.set_item("type", jtype.label())?;
        d.set_item("series_dims", dims)?;
        Ok(d.into_py(py))
    }

    /// Full pseudo-Kahler report: existence, kernel dim, witness, signature,
    /// curvature flags, and the complex-symplectic verdict.
    fn pk(&self, py: Python<'_>) -> PyObject {
        json_to_py(py, &json_report(&self.underlying, &self.label, &self.p))
    }

    /// Complex-symplectic verdict with the forced-zero certificate.
    fn sympl(&self, py: Python<'_>) -> PyResult<PyObject> {
        if self.p.generators() != 4 {
            return Err(PyValueError::new_err(
                "complex symplectic check needs complex dimension 4",
            ));
        }
        let names = ["alpha", "beta", "gamma", "tau", "theta", "xi"];
        let (space, witness) = complex_symplectic_solve(&self.p);
        let forced: Vec<&str> = forced_zero_coords(&space).iter().map(|&i| names[i]).collect();
        let d = PyDict::new_bound(py);
        d.set_item("closed_dim", space.dim())?;
        d.set_item("exists", witness.is_some())?;
        d.set_item(
            "witness",
            witness
                .as_ref()
                .map(|w| w.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>()),
        )?;
        d.set_item("forced_zero", forced)?;
        Ok(d.into_py(py))
    }

    fn __repr__(&self) -> String {
        format!("ComplexStructure({})", self.label)
    }
}

fn parse_generic(s: &str) -> Result<GenericExtParams> {
    let t = s.trim();
    let bad = || Error::Parse {
        position: 0,
        expected: "gen(epsilon,delta,nu,A,B) tuple".to_string(),
        found: t.to_string(),
    };
    let body = t
        .strip_prefix("gen")
        .map(str::trim)
        .and_then(|r| r.strip_prefix('('))
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(bad)?;
    let parts: Vec<&str> = body.split(',').collect();
    if parts.len() != 5 {
        return Err(bad());
    }
    let int = |txt: &str| -> Result<i64> {
        txt.trim().parse::<i64>().map_err(|_| Error::Parse {
            position: 0,
            expected: "small integer".to_string(),
            found: txt.to_string(),
        })
    };
    GenericExtParams::new(
        int(parts[0])?,
        int(parts[1])?,
        int(parts[2])?,
        parse_gauss(parts[3])?,
        parse_gauss(parts[4])?,
    )
}

fn normalize(s: &str) -> Result<(WnNParams, Mat)> {
    let t = s.trim();
    if t.starts_with("wnn") {
        let p = WnNParams::parse(t)?;
        return Ok((p, Mat::identity(4)));
    }
    let g = parse_generic(t)?;
    reduce_to_normal_form(&g)
}

/// Recompute the 11-row invariant table as a list of dicts.
#[pyfunction]
fn table2(py: Python<'_>) -> PyResult<PyObject> {
    let rows = table2_rows().map_err(py_err)?;
    Ok(json_to_py(py, &serde_json::to_value(&rows).unwrap()))
}

/// True iff the recomputed invariant table matches the frozen copy.
#[pyfunction]
fn table2_matches() -> PyResult<bool> {
    let rows = table2_rows().map_err(py_err)?;
    Ok(table2_diff(&rows, &table2_golden()).is_empty())
}

/// Reduce "gen(eps,delta,nu,A,B)" (or echo an already-normal "wnn(..)")
/// to its normal form; returns the label and the coframe change matrix.
#[pyfunction]
fn reduce(py: Python<'_>, tuple: &str) -> PyResult<PyObject> {
    let (normal, lambda) = normalize(tuple).map_err(py_err)?;
    let rows: Vec<Vec<String>> = (0..lambda.nrows())
        .map(|i| lambda.row(i).iter().map(|c| c.to_string()).collect())
        .collect();
    let d = PyDict::new_bound(py);
    d.set_item("normal_form", normal.label())?;
    d.set_item("lambda", rows)?;
    Ok(d.into_py(py))
}

/// True iff both tuples reduce to the same normal form.
#[pyfunction]
fn equivalent(left: &str, right: &str) -> PyResult<bool> {
    let (l, _) = normalize(left).map_err(py_err)?;
    let (r, _) = normalize(right).map_err(py_err)?;
    Ok(l.label() == r.label())
}

/// Labels of the builtin algebras.
#[pyfunction]
fn builtins() -> Vec<&'static str> {
    liealg::Builtin::ALL.iter().map(|b| b.label()).collect()
}

#[pymodule]
fn nla_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLieAlgebra>()?;
    m.add_class::<PyComplexStructure>()?;
    m.add_function(wrap_pyfunction!(table2, m)?)?;
    m.add_function(wrap_pyfunction!(table2_matches, m)?)?;
    m.add_function(wrap_pyfunction!(reduce, m)?)?;
    m.add_function(wrap_pyfunction!(equivalent, m)?)?;
    m.add_function(wrap_pyfunction!(builtins, m)?)?;
    Ok(())
}
