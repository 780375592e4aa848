//! Python bindings. Polynomials and ideals cross the boundary as strings;
//! ideals come back as their reduced Gröbner basis.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use fractau::algebra::{lucas_binomial as lucas, parse_polynomial, IdealGens};
use fractau::cli::exit_code;
use fractau::frobenius::{poly_bracket_root, FrobLevel};
use fractau::groebner::{buchberger, ideal_key as key_of, ReducedGB};
use fractau::region::{chi as chi_at, rasterize as raster_of, staircase_boundary as boundary, ParamBox};
use fractau::testideal::{
    f_threshold as threshold_of, format_rational, tau_mixed_gb, v_number as v_of, ParamPoint, TauConfig,
};

fn err(e: fractau::Error) -> PyErr {
    let msg = e.to_string();
    if exit_code(&e) == fractau::cli::EXIT_PARSE {
        PyValueError::new_err(msg)
    } else {
        PyRuntimeError::new_err(msg)
    }
}

fn gens_of(gb: &ReducedGB) -> Vec<String> {
    gb.basis().iter().map(|g| g.to_string()).collect()
}

/// A polynomial ring `F_p[vars]`.
#[pyclass(frozen, module = "fractau")]
struct Ring {
    inner: fractau::algebra::Ring,
}

#[pymethods]
impl Ring {
    #[new]
    fn new(p: u64, vars: Vec<String>) -> PyResult<Self> {
        Ok(Ring {
            inner: fractau::algebra::Ring::new(p, &vars).map_err(err)?,
        })
    }

    #[getter]
    fn p(&self) -> u64 {
        self.inner.p()
    }

    #[getter]
    fn vars(&self) -> Vec<String> {
        self.inner.vars().to_vec()
    }

    /// Canonical form of a polynomial.
    fn parse(&self, poly: &str) -> PyResult<String> {
        Ok(parse_polynomial(poly, &self.inner).map_err(err)?.to_string())
    }

    /// Reduced Gröbner basis of the ideal with comma-separated generators.
    fn ideal(&self, gens: &str) -> PyResult<Vec<String>> {
        let i = IdealGens::parse(gens, &self.inner).map_err(err)?;
        Ok(gens_of(&buchberger(&i).map_err(err)?))
    }

    fn ideal_key(&self, gens: &str) -> PyResult<String> {
        let i = IdealGens::parse(gens, &self.inner).map_err(err)?;
        Ok(key_of(&i).map_err(err)?.to_string())
    }

    /// `h^[1/p^e]`.
    #[pyo3(signature = (poly, e = 1))]
    fn bracket_root(&self, poly: &str, e: u32) -> PyResult<Vec<String>> {
        let h = parse_polynomial(poly, &self.inner).map_err(err)?;
        let level = FrobLevel::new(self.inner.p(), e).map_err(err)?;
        Ok(gens_of(&buchberger(&poly_bracket_root(&h, level)).map_err(err)?))
    }

    fn __repr__(&self) -> String {
        format!("Ring({}, {:?})", self.inner.p(), self.inner.vars())
    }
}

/// A tuple of ideals `(a_1, ..., a_n)`, one comma-separated string each.
#[pyclass(frozen, module = "fractau")]
struct Family {
    inner: fractau::testideal::IdealFamily,
}

#[pymethods]
impl Family {
    #[new]
    fn new(ring: &Ring, ideals: Vec<String>) -> PyResult<Self> {
        Ok(Family {
            inner: fractau::testideal::IdealFamily::parse(&ring.inner, &ideals).map_err(err)?,
        })
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    #[getter]
    fn gen_counts(&self) -> Vec<u64> {
        self.inner.gen_counts().to_vec()
    }
}

fn config(e_max: u32, window: u32) -> TauConfig {
    TauConfig {
        e_max,
        confirm_window: window,
        ..TauConfig::default()
    }
}

/// `τ(a_1^{c_1} ··· a_n^{c_n})` for `c` like `"1/3,2/3"`.
#[pyfunction]
#[pyo3(signature = (family, c, e_max = 8, window = 2))]
fn tau(family: &Family, c: &str, e_max: u32, window: u32) -> PyResult<Vec<String>> {
    let c = ParamPoint::parse(c).map_err(err)?;
    let (_, gb) = tau_mixed_gb(&family.inner, &c, &config(e_max, window)).map_err(err)?;
    Ok(gens_of(&gb))
}

/// `1` when `τ(a^c) ⊄ I`, else `0`.
#[pyfunction]
#[pyo3(signature = (family, ideal, c, e_max = 8, window = 2))]
fn chi(family: &Family, ideal: &str, c: &str, e_max: u32, window: u32) -> PyResult<u8> {
    let i = IdealGens::parse(ideal, family.inner.ring()).map_err(err)?;
    let c = ParamPoint::parse(c).map_err(err)?;
    chi_at(&family.inner, &i, &c, &config(e_max, window)).map_err(err)
}

/// A rasterized parameter box.
#[pyclass(frozen, module = "fractau")]
struct Raster {
    #[pyo3(get)]
    dims: Vec<u64>,
    /// Palette index per cell, row-major with the last axis fastest.
    #[pyo3(get)]
    cells: Vec<u32>,
    /// Ideal keys in first-encounter order.
    #[pyo3(get)]
    palette: Vec<String>,
}

#[pyfunction]
#[pyo3(signature = (family, upper, k, e_max = 8, window = 2))]
fn rasterize(family: &Family, upper: &str, k: u32, e_max: u32, window: u32) -> PyResult<Raster> {
    let bx = ParamBox::parse(upper).map_err(err)?;
    let r = raster_of(&family.inner, &bx, k, &config(e_max, window)).map_err(err)?;
    Ok(Raster {
        dims: r.dims().to_vec(),
        cells: r.cells().to_vec(),
        palette: r.palette().iter().map(|k| k.to_string()).collect(),
    })
}

/// `max { m : a^{m r} ⊄ I^[p^e] }`.
#[pyfunction]
fn v_number(family: &Family, r: Vec<u64>, ideal: &str, e: u32) -> PyResult<u64> {
    let i = IdealGens::parse(ideal, family.inner.ring()).map_err(err)?;
    v_of(&family.inner, &r, &i, e).map_err(err)
}

/// `(sequence, lower, upper)` with rationals as `"num/den"` strings.
#[pyfunction]
fn f_threshold(family: &Family, r: Vec<u64>, ideal: &str, e_max: u32) -> PyResult<(Vec<String>, String, String)> {
    let i = IdealGens::parse(ideal, family.inner.ring()).map_err(err)?;
    let t = threshold_of(&family.inner, &r, &i, e_max).map_err(err)?;
    Ok((
        t.terms.iter().map(format_rational).collect(),
        format_rational(&t.lower),
        format_rational(&t.upper),
    ))
}

/// Base-3 digit strings of the boundary points at the given depth.
#[pyfunction]
fn staircase_boundary(depth: u32) -> Vec<(String, String)> {
    boundary(depth)
        .iter()
        .map(|p| {
            let s = p.to_strings();
            (s[0].clone(), s[1].clone())
        })
        .collect()
}

/// `C(m, n) mod p`.
#[pyfunction]
fn lucas_binomial(m: u64, n: u64, p: u64) -> u64 {
    lucas(m, n, p).value()
}

#[pymodule(name = "fractau")]
fn fractau_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Ring>()?;
    m.add_class::<Family>()?;
    m.add_class::<Raster>()?;
    m.add_function(wrap_pyfunction!(tau, m)?)?;
    m.add_function(wrap_pyfunction!(chi, m)?)?;
    m.add_function(wrap_pyfunction!(rasterize, m)?)?;
    m.add_function(wrap_pyfunction!(v_number, m)?)?;
    m.add_function(wrap_pyfunction!(f_threshold, m)?)?;
    m.add_function(wrap_pyfunction!(staircase_boundary, m)?)?;
    m.add_function(wrap_pyfunction!(lucas_binomial, m)?)?;
    Ok(())
}
