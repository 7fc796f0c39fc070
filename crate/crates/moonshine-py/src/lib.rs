//! Python bindings for the `moonshine` engine.
//!
//! - `cusps(symbol)`: cusp number and area invariant, both readings for ambiguous symbols.
//! - `series(name, order)`: exact coefficients as `(offset, [coefficient strings])`.
//! - `series_ints(name, order)`: integer coefficients as Python ints.
//! - `gamma0_cusp_count(n)`, `supersingular_primes(bound)`, `del_pezzo(degree, roots)`.
//! - `verify(suite, data_dir)` and `report(data_dir, format)`: the reconciliation report.
//!
//! Every function is a thin wrapper over a plain-Rust helper of the same name
//! with an `_impl` suffix, so the logic is testable without an interpreter.

use std::path::PathBuf;

use num_bigint::BigInt;
use pyo3::exceptions::{PyOSError, PyValueError};
use pyo3::prelude::*;

use moonshine::cli::report::Report;
use moonshine::cli::suites::{SuiteContext, SUITES};
use moonshine::cli::{build_report, resolve_data_dir, series_by_name};
use moonshine::geometry::{minus_one_curves, root_classes};
use moonshine::modgroup;
use moonshine::norton::{cusp_and_area, parse_norton};
use moonshine::Error;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Integrity(_) | Error::Data(_) | Error::Io(_) => PyOSError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// `(reading, C, D)` for each reading of a symbol.
pub fn cusps_impl(symbol: &str) -> Result<Vec<(String, u64, u64)>, Error> {
    let sym = parse_norton(symbol)?;
    let variants = if sym.is_ambiguous() {
        vec![sym.with_sign(true), sym.with_sign(false)]
    } else {
        vec![sym]
    };
    variants
        .into_iter()
        .map(|s| {
            let (c, d) = cusp_and_area(&s)?;
            Ok((s.to_string(), c, d))
        })
        .collect()
}

/// `(offset, coefficients)` of a named series, all as exact rational strings.
pub fn series_impl(name: &str, order: usize) -> Result<(String, Vec<String>), Error> {
    let s = series_by_name(name, order)?;
    Ok((
        s.offset().to_string(),
        s.coeffs().iter().map(ToString::to_string).collect(),
    ))
}

/// Integer coefficients of a named series; fails on a non-integral coefficient.
pub fn series_ints_impl(name: &str, order: usize) -> Result<Vec<BigInt>, Error> {
    series_by_name(name, order)?
        .coeffs()
        .iter()
        .map(|c| {
            c.to_integer()
                .ok_or_else(|| Error::InvalidArgument(format!("coefficient {c} is not an integer")))
        })
        .collect()
}

/// Sorted classes `(a; b1,…)` of (−1)-curves or roots.
pub fn del_pezzo_impl(degree: u32, roots: bool) -> Result<Vec<String>, Error> {
    let classes = if roots {
        root_classes(degree)?
    } else {
        minus_one_curves(degree)?
    };
    Ok(classes.iter().map(ToString::to_string).collect())
}

fn context(data_dir: Option<PathBuf>) -> Result<SuiteContext, Error> {
    let dir = resolve_data_dir(data_dir);
    if !dir.is_dir() {
        return Err(Error::Integrity(format!(
            "data directory {} not found",
            dir.display()
        )));
    }
    Ok(SuiteContext::new(dir, 16, 40, None))
}

/// Runs one suite (or `all`); returns the report.
pub fn verify_impl(suite: &str, data_dir: Option<PathBuf>) -> Result<Report, Error> {
    let names: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else if let Some(s) = SUITES.iter().find(|s| **s == suite) {
        vec![*s]
    } else {
        return Err(Error::InvalidArgument(format!("unknown suite {suite:?}")));
    };
    build_report(&names, &context(data_dir)?)
}

/// The full report rendered as `md`, `json` or `text`.
pub fn report_impl(data_dir: Option<PathBuf>, format: &str) -> Result<String, Error> {
    let r = build_report(&SUITES, &context(data_dir)?)?;
    match format {
        "md" => Ok(r.to_markdown()),
        "json" => Ok(r.to_json()),
        "text" => Ok(r.to_text()),
        other => Err(Error::InvalidArgument(format!("unknown format {other:?}"))),
    }
}

/// Cusp number and area invariant of a Norton symbol: a list of `(reading, C, D)`.
#[pyfunction]
fn cusps(symbol: &str) -> PyResult<Vec<(String, u64, u64)>> {
    cusps_impl(symbol).map_err(to_py)
}

/// Exact coefficients of a named series: `(offset, [str])`.
#[pyfunction]
#[pyo3(signature = (name, order = 16))]
fn series(name: &str, order: usize) -> PyResult<(String, Vec<String>)> {
    series_impl(name, order).map_err(to_py)
}

/// Integer coefficients of a named series.
#[pyfunction]
#[pyo3(signature = (name, order = 16))]
fn series_ints(name: &str, order: usize) -> PyResult<Vec<BigInt>> {
    series_ints_impl(name, order).map_err(to_py)
}

/// Number of cusps of Γ0(N).
#[pyfunction]
fn gamma0_cusp_count(n: u64) -> PyResult<u64> {
    if n == 0 {
        return Err(PyValueError::new_err("level must be positive"));
    }
    Ok(modgroup::gamma0_cusp_count(n))
}

/// Primes p ≤ bound with Γ0(p)+ of genus zero.
#[pyfunction]
fn supersingular_primes(bound: u64) -> Vec<u64> {
    modgroup::supersingular_primes(bound)
}

/// (−1)-curves (or roots) on the del Pezzo surface of the given degree.
#[pyfunction]
#[pyo3(signature = (degree, roots = false))]
fn del_pezzo(degree: u32, roots: bool) -> PyResult<Vec<String>> {
    del_pezzo_impl(degree, roots).map_err(to_py)
}

/// Runs a suite; returns `(passed, report_json)`.
#[pyfunction]
#[pyo3(signature = (suite = "all", data_dir = None))]
fn verify(suite: &str, data_dir: Option<PathBuf>) -> PyResult<(bool, String)> {
    let r = verify_impl(suite, data_dir).map_err(to_py)?;
    Ok((r.passed(), r.to_json()))
}

/// The full report as `md`, `json` or `text`.
#[pyfunction]
#[pyo3(signature = (data_dir = None, format = "md"))]
fn report(data_dir: Option<PathBuf>, format: &str) -> PyResult<String> {
    report_impl(data_dir, format).map_err(to_py)
}

/// Registers every function on `m`.
pub fn register(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(cusps, m)?)?;
    m.add_function(wrap_pyfunction!(series, m)?)?;
    m.add_function(wrap_pyfunction!(series_ints, m)?)?;
    m.add_function(wrap_pyfunction!(gamma0_cusp_count, m)?)?;
    m.add_function(wrap_pyfunction!(supersingular_primes, m)?)?;
    m.add_function(wrap_pyfunction!(del_pezzo, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(report, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}

/// The `moonshine_py` extension module.
#[pymodule]
fn moonshine_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    register(m)
}
