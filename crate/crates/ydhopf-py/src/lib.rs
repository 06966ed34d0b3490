//! Python bindings: presets and custom quantum tensor algebras, the full
//! verification suites as plain dicts, quasi-duals, the end-to-end duality
//! verdict, and diagram-expression evaluation.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use ydhopf::dual::quasi_dual_build;
use ydhopf::duality::{default_comodule, duality_data, verify_duality};
use ydhopf::expr::{expr_evaluate, parse_expr, GeneratorEnv};
use ydhopf::fileio::{algebra_to_file, digest, file_to_hopf, read_algebra, write_json};
use ydhopf::hopf::hopf_axiom_assertions;
use ydhopf::qta::{build_preset, quantum_cocommutative_check, quantum_tensor_algebra, QtaParams};
use ydhopf::report::Assertion;
use ydhopf::ydcond::{check_yd_condition, symmetric_pair_check};
use ydhopf::{Character, Field, Group};

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyRuntimeError::new_err(e.to_string())
}

/// Sparse matrix entries as (row, col, value) triples.
type SparseEntries = Vec<(usize, usize, u64)>;

fn assertions_to_py<'py>(py: Python<'py>, asts: &[Assertion]) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new_bound(py);
    let list = PyList::empty_bound(py);
    for a in asts {
        let d = PyDict::new_bound(py);
        d.set_item("name", &a.name)?;
        d.set_item("law", &a.law)?;
        d.set_item("pass", a.pass)?;
        if let Some(w) = &a.witness {
            let wd = PyDict::new_bound(py);
            wd.set_item("row", w.row)?;
            wd.set_item("col", w.col)?;
            wd.set_item("lhs", w.lhs)?;
            wd.set_item("rhs", w.rhs)?;
            d.set_item("witness", wd)?;
        }
        list.append(d)?;
    }
    out.set_item(
        "verdict",
        if asts.iter().all(|a| a.pass) {
            "pass"
        } else {
            "fail"
        },
    )?;
    out.set_item("assertions", list)?;
    Ok(out)
}

/// A finite-dimensional braided Hopf algebra over a prime field.
#[pyclass(name = "Algebra")]
struct PyAlgebra {
    hopf: ydhopf::hopf::BraidedHopf,
    basis: Vec<String>,
}

#[pymethods]
impl PyAlgebra {
    #[getter]
    fn dim(&self) -> usize {
        self.hopf.dim()
    }

    #[getter]
    fn prime(&self) -> u64 {
        self.hopf.ctx().field.modulus()
    }

    #[getter]
    fn group_orders(&self) -> Vec<u32> {
        self.hopf.ctx().group.orders().to_vec()
    }

    #[getter]
    fn basis(&self) -> Vec<String> {
        self.basis.clone()
    }

    #[getter]
    fn degrees(&self) -> Vec<Vec<u32>> {
        self.hopf.carrier.degrees().to_vec()
    }

    fn sha256(&self) -> String {
        digest(&algebra_to_file(&self.hopf, Some(self.basis.clone())))
    }

    /// Every braided Hopf axiom as an exact matrix identity.
    fn check_hopf<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        assertions_to_py(py, &hopf_axiom_assertions(&self.hopf))
    }

    /// The compatibility condition on the carrier.
    fn check_yd<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        assertions_to_py(py, &check_yd_condition(&self.hopf.carrier).map_err(err)?)
    }

    /// True iff the braiding squares to the identity on the carrier.
    fn symmetric(&self) -> PyResult<bool> {
        symmetric_pair_check(&self.hopf.carrier, &self.hopf.carrier).map_err(err)
    }

    /// The quasi-dual algebra (requires a symmetric braiding).
    fn dual(&self) -> PyResult<PyAlgebra> {
        let (hd, _) = quasi_dual_build(&self.hopf).map_err(err)?;
        let basis = (0..hd.dim())
            .map(|i| format!("{}*", self.basis[i]))
            .collect();
        Ok(PyAlgebra { hopf: hd, basis })
    }

    /// The full duality ladder with R = H^d; returns the assertion dict.
    fn verify_duality<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let (hd, pairing) = quasi_dual_build(&self.hopf).map_err(err)?;
        let data = duality_data(&self.hopf, &hd, &pairing).map_err(err)?;
        let r = default_comodule(&data.hd);
        assertions_to_py(py, &verify_duality(&data, &r).map_err(err)?)
    }

    /// Evaluates a diagram expression against this algebra's structure maps,
    /// bound as m, comult, counit, unit, antipode, with the carrier named H.
    /// Returns (domain_dim, codomain_dim, entries) with sparse
    /// (row, col, value) triples.
    fn eval(&self, expr: &str) -> PyResult<(usize, usize, SparseEntries)> {
        let mut env = GeneratorEnv::new();
        env.bind_object("H", self.hopf.carrier.clone());
        env.bind("m", self.hopf.mult.clone());
        env.bind("comult", self.hopf.comult.clone());
        env.bind("counit", self.hopf.counit.clone());
        env.bind("unit", self.hopf.unit.clone());
        env.bind("antipode", self.hopf.antipode.clone());
        let e = parse_expr(expr, &env).map_err(|e| PyValueError::new_err(e.to_string()))?;
        let m = expr_evaluate(&e, &env).map_err(|e| PyValueError::new_err(e.to_string()))?;
        let mut entries = Vec::new();
        for (col, rows) in m.columns().iter().enumerate() {
            for &(row, v) in rows {
                entries.push((row, col, v));
            }
        }
        Ok((m.domain().dim(), m.codomain().dim(), entries))
    }

    /// (character criterion, semantic braiding test) — only meaningful for
    /// algebras built by `preset` or `qta`.
    fn write(&self, path: &str) -> PyResult<()> {
        let file = algebra_to_file(&self.hopf, Some(self.basis.clone()));
        write_json(std::path::Path::new(path), &file).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "Algebra(dim={}, p={}, orders={:?})",
            self.hopf.dim(),
            self.prime(),
            self.group_orders()
        )
    }
}

/// One of the named profiles: bline, two-gen, z4q2.
#[pyfunction]
fn preset(name: &str) -> PyResult<PyAlgebra> {
    let t = build_preset(name).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let basis = t.word_names();
    Ok(PyAlgebra {
        hopf: t.hopf,
        basis,
    })
}

/// Quantum tensor algebra from explicit data. `generators` is a list of
/// (degree exponent vector, character image vector) pairs.
#[pyfunction]
fn qta(
    prime: u64,
    orders: Vec<u32>,
    generators: Vec<(Vec<u32>, Vec<u64>)>,
    trunc: usize,
) -> PyResult<PyAlgebra> {
    let field = Field::new(prime).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let group = Group::new(orders).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let gens = generators
        .into_iter()
        .map(|(deg, chi)| {
            let chi = Character::new(&field, &group, chi)?;
            Ok((deg, chi))
        })
        .collect::<ydhopf::Result<Vec<_>>>()
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    let t = quantum_tensor_algebra(QtaParams {
        field,
        group,
        generators: gens,
        trunc,
    })
    .map_err(err)?;
    let basis = t.word_names();
    Ok(PyAlgebra {
        hopf: t.hopf,
        basis,
    })
}

/// (character criterion, semantic braiding test) for a preset name.
#[pyfunction]
fn cocommutative(name: &str) -> PyResult<(bool, bool)> {
    let t = build_preset(name).map_err(|e| PyValueError::new_err(e.to_string()))?;
    quantum_cocommutative_check(&t).map_err(err)
}

/// Reads an algebra file written by `Algebra.write` or the CLI.
#[pyfunction]
fn read(path: &str) -> PyResult<PyAlgebra> {
    let file = read_algebra(std::path::Path::new(path)).map_err(err)?;
    let basis = file.object.basis.clone();
    let hopf = file_to_hopf(&file).map_err(err)?;
    Ok(PyAlgebra { hopf, basis })
}

#[pymodule]
fn ydhopf_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_function(wrap_pyfunction!(preset, m)?)?;
    m.add_function(wrap_pyfunction!(qta, m)?)?;
    m.add_function(wrap_pyfunction!(cocommutative, m)?)?;
    m.add_function(wrap_pyfunction!(read, m)?)?;
    Ok(())
}
