//! Python bindings. Each `#[pyfunction]` wraps a plain Rust function, so the
//! logic is testable without an interpreter.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use verma_cli::{Command, Format, Job};
use verma_core::verma::scan::scan_weight;
use verma_core::verma::{characters, subsingular, u_prime};
use verma_core::{HighestWeight, Scalar, Space, Verma};

fn format_of(name: &str) -> Result<Format, String> {
    match name {
        "json" => Ok(Format::Json),
        "text" => Ok(Format::Text),
        "latex" => Ok(Format::Latex),
        other => Err(format!("unknown format `{other}`")),
    }
}

/// Runs a command-line job and returns the emitted report.
pub fn run_job(command: &str, params: BTreeMap<String, String>, format: &str) -> Result<String, String> {
    let command: Command = command.parse().map_err(|e: verma_cli::CliError| e.to_string())?;
    let job = Job { command, params };
    let report = verma_cli::run(&job).map_err(|e| e.to_string())?;
    Ok(verma_cli::emit(&report, format_of(format)?))
}

/// `u'` at the reducibility relation for `p`, with `h_W` symbolic (`h_W = 0`
/// and `c` symbolic for `p = 1`).
pub fn u_prime_text(p: u32) -> Result<String, String> {
    let v = Verma::new(scan_weight(p, 1, &Scalar::zero()).map_err(|e| e.to_string())?);
    u_prime(&v, p).map(|x| x.to_string()).map_err(|e| e.to_string())
}

/// The subsingular vector for `(p, r)` at the necessary `h`, or `None` when the
/// system is inconsistent.
pub fn subsingular_text(p: u32, r: u32) -> Result<Option<String>, String> {
    let v = Verma::new(scan_weight(p, r, &Scalar::zero()).map_err(|e| e.to_string())?);
    subsingular(&v, p, r).map(|u| u.map(|x| x.to_string())).map_err(|e| e.to_string())
}

/// Coefficients of the characters up to `q^order`, keyed by module.
pub fn character_coeffs(
    h: &str,
    p: Option<usize>,
    r: Option<usize>,
    order: usize,
) -> Result<BTreeMap<String, Vec<u64>>, String> {
    let h = Scalar::parse(&Space::empty(), h).map_err(|e| e.to_string())?;
    let ch = characters(&h, p, r, order).map_err(|e| e.to_string())?;
    let mut out = BTreeMap::new();
    for (name, s) in [("V", Some(ch.v)), ("J'", ch.jprime), ("L'", ch.lprime), ("J", ch.j), ("L", ch.l)] {
        if let Some(s) = s {
            out.insert(name.to_string(), (0..=s.order()).map(|k| s.coeff(k)).collect());
        }
    }
    Ok(out)
}

/// Verdict of the tensor product decision for rational data.
pub fn tensor_verdict(c: &str, h: &str, h_w: &str, alpha: &str, beta: &str) -> Result<String, String> {
    let sp = Space::empty();
    let parse = |x: &str| Scalar::parse(&sp, x).map_err(|e| e.to_string());
    let hw = HighestWeight::w22(parse(c)?, parse(h)?, parse(h_w)?).map_err(|e| e.to_string())?;
    let s = verma_core::IntermediateSeries::new(parse(alpha)?, parse(beta)?);
    let d = verma_core::tensor::decide_tensor(&hw, &s).map_err(|e| e.to_string())?;
    Ok(format!("{:?}", d.verdict))
}

fn py_err(e: String) -> PyErr {
    PyValueError::new_err(e)
}

#[pyfunction]
#[pyo3(name = "run_job", signature = (command, params, format = "json"))]
fn py_run_job(command: &str, params: BTreeMap<String, String>, format: &str) -> PyResult<String> {
    run_job(command, params, format).map_err(py_err)
}

#[pyfunction]
#[pyo3(name = "u_prime")]
fn py_u_prime(p: u32) -> PyResult<String> {
    u_prime_text(p).map_err(py_err)
}

#[pyfunction]
#[pyo3(name = "subsingular")]
fn py_subsingular(p: u32, r: u32) -> PyResult<Option<String>> {
    subsingular_text(p, r).map_err(py_err)
}

#[pyfunction]
#[pyo3(name = "characters", signature = (h = "0", p = None, r = None, order = 20))]
fn py_characters(h: &str, p: Option<usize>, r: Option<usize>, order: usize) -> PyResult<BTreeMap<String, Vec<u64>>> {
    character_coeffs(h, p, r, order).map_err(py_err)
}

#[pyfunction]
#[pyo3(name = "tensor_verdict")]
fn py_tensor_verdict(c: &str, h: &str, h_w: &str, alpha: &str, beta: &str) -> PyResult<String> {
    tensor_verdict(c, h, h_w, alpha, beta).map_err(py_err)
}

#[pymodule]
fn verma_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(py_run_job, m)?)?;
    m.add_function(wrap_pyfunction!(py_u_prime, m)?)?;
    m.add_function(wrap_pyfunction!(py_subsingular, m)?)?;
    m.add_function(wrap_pyfunction!(py_characters, m)?)?;
    m.add_function(wrap_pyfunction!(py_tensor_verdict, m)?)?;
    Ok(())
}
