//! Python bindings: `import seifert_lens`.

use pyo3::exceptions::{PyOverflowError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use seifert_lens_core as core;
use seifert_lens_core::{ConstructionTrace, Error, Int, ModelWeights};

type Canonical = (Int, Int, Vec<(Int, Int)>);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Overflow(_) => PyOverflowError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

#[pyclass(name = "LensSpace", module = "seifert_lens", frozen, skip_from_py_object)]
#[derive(Clone)]
struct LensSpace(core::LensSpace);

#[pymethods]
impl LensSpace {
    #[new]
    fn new(p: Int, q: Int) -> PyResult<Self> {
        core::LensSpace::new(p, q).map(LensSpace).map_err(to_py)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(LensSpace).map_err(to_py)
    }

    #[getter]
    fn p(&self) -> Int {
        self.0.p()
    }

    #[getter]
    fn q(&self) -> Int {
        self.0.q()
    }

    fn reversed(&self) -> Self {
        LensSpace(self.0.reversed())
    }

    fn equal_oriented(&self, other: &LensSpace) -> bool {
        self.0.equal_oriented(&other.0)
    }

    fn equal_unoriented(&self, other: &LensSpace) -> bool {
        self.0.equal_unoriented(&other.0)
    }

    fn __eq__(&self, other: &LensSpace) -> bool {
        self.0 == other.0
    }

    fn __hash__(&self) -> u64 {
        (self.0.p() as u64).wrapping_mul(1_000_003) ^ self.0.q() as u64
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("LensSpace({}, {})", self.0.p(), self.0.q())
    }
}

#[pyclass(name = "SeifertFibration", module = "seifert_lens", frozen, skip_from_py_object)]
#[derive(Clone)]
struct SeifertFibration(core::SeifertFibration);

#[pymethods]
impl SeifertFibration {
    #[new]
    fn new(genus: Int, pairs: Vec<(Int, Int)>) -> PyResult<Self> {
        let f = core::seifert::fib(genus, &pairs);
        f.validate().map_err(to_py)?;
        Ok(SeifertFibration(f))
    }

    /// Parses and validates.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let f = core::SeifertFibration::parse(text).map_err(to_py)?;
        f.validate().map_err(to_py)?;
        Ok(SeifertFibration(f))
    }

    #[getter]
    fn genus(&self) -> Int {
        self.0.genus
    }

    #[getter]
    fn pairs(&self) -> Vec<(Int, Int)> {
        self.0.pairs.iter().map(|p| (p.alpha, p.beta)).collect()
    }

    /// Canonical form as `(genus, b, [(alpha, beta), ...])`.
    fn normalize(&self) -> PyResult<Canonical> {
        let c = self.0.normalize().map_err(to_py)?;
        Ok((c.genus, c.b, c.pairs.iter().map(|p| (p.alpha, p.beta)).collect()))
    }

    fn canonical(&self) -> PyResult<String> {
        Ok(self.0.normalize().map_err(to_py)?.to_string())
    }

    /// Euler number as `(numerator, denominator)`.
    fn euler_number(&self) -> PyResult<(Int, Int)> {
        let e = self.0.euler_number().map_err(to_py)?;
        Ok((e.num(), e.den()))
    }

    fn reverse_orientation(&self) -> PyResult<Self> {
        self.0.reverse_orientation().map(SeifertFibration).map_err(to_py)
    }

    /// One of "oriented", "reversing", "both", "none".
    fn isomorphism_type(&self, other: &SeifertFibration) -> PyResult<&'static str> {
        Ok(self.0.isomorphism_type(&other.0).map_err(to_py)?.as_str())
    }

    fn recognize(&self) -> PyResult<LensSpace> {
        core::recognize(&self.0).map(LensSpace).map_err(to_py)
    }

    /// Invariant factors of `H_1`; `0` stands for a `Z` summand.
    fn first_homology(&self) -> PyResult<Vec<Int>> {
        Ok(core::first_homology(&self.0).map_err(to_py)?.0)
    }

    fn presentation(&self) -> PyResult<String> {
        Ok(core::presentation(&self.0).map_err(to_py)?.to_string())
    }

    fn base_orbifold(&self) -> PyResult<String> {
        Ok(core::base_orbifold(&self.0).map_err(to_py)?.to_string())
    }

    fn __eq__(&self, other: &SeifertFibration) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SeifertFibration.parse({:?})", self.0.to_string())
    }
}

fn trace_dict<'py>(py: Python<'py>, t: &ConstructionTrace) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    for (k, v) in [
        ("u", t.u),
        ("alpha", t.alpha),
        ("alpha1", t.alpha1),
        ("alpha2", t.alpha2),
        ("alpha1_prime", t.alpha1_prime),
        ("beta1", t.beta1),
        ("beta1_prime", t.beta1_prime),
        ("beta2", t.beta2),
        ("r", t.choice.r),
        ("s", t.choice.s),
    ] {
        d.set_item(k, v)?;
    }
    Ok(d)
}

/// The fibration of `lens` whose multiplicities have coprime parts `a10`, `a20`.
#[pyfunction]
fn construct(lens: &LensSpace, a10: Int, a20: Int) -> PyResult<SeifertFibration> {
    Ok(SeifertFibration(core::construct_fibration(&lens.0, a10, a20).map_err(to_py)?.0))
}

#[pyfunction]
fn construction_trace<'py>(py: Python<'py>, lens: &LensSpace, a10: Int, a20: Int) -> PyResult<Bound<'py, PyDict>> {
    let (_, t) = core::construct_fibration(&lens.0, a10, a20).map_err(to_py)?;
    trace_dict(py, &t)
}

#[pyfunction]
fn model_fibration(lens: &LensSpace, k1: Int, k2: Int) -> PyResult<SeifertFibration> {
    let w = ModelWeights::new(k1, k2).map_err(to_py)?;
    core::model_fibration(&lens.0, w).map(SeifertFibration).map_err(to_py)
}

#[pyfunction]
fn isotropy_order(lens: &LensSpace, k1: Int, k2: Int) -> PyResult<Int> {
    let w = ModelWeights::new(k1, k2).map_err(to_py)?;
    core::isotropy_order(&lens.0, w).map_err(to_py)
}

#[pyfunction]
fn isotropy_order_oracle(lens: &LensSpace, k1: Int, k2: Int) -> PyResult<Int> {
    let w = ModelWeights::new(k1, k2).map_err(to_py)?;
    core::isotropy_order_oracle(&lens.0, w).map_err(to_py)
}

#[pyfunction]
fn s3_fibration(a1: Int, a2: Int) -> PyResult<SeifertFibration> {
    core::s3_fibration(a1, a2).map(SeifertFibration).map_err(to_py)
}

#[pyfunction]
fn s2xs1_fibration(alpha: Int, beta: Int) -> PyResult<SeifertFibration> {
    core::construct_s2xs1(alpha, beta).map(SeifertFibration).map_err(to_py)
}

#[pyfunction]
fn one_singular_list(lens: &LensSpace, bound: Int) -> PyResult<Vec<SeifertFibration>> {
    let list = core::one_singular_list(&lens.0, bound).map_err(to_py)?;
    Ok(list.into_iter().map(SeifertFibration).collect())
}

/// Canonical forms of all fibrations with multiplicities up to `max_mult`.
#[pyfunction]
#[pyo3(name = "enumerate")]
fn enumerate_fibrations(lens: &LensSpace, max_mult: Int) -> PyResult<Vec<String>> {
    let list = core::enumerate_fibrations(&lens.0, max_mult).map_err(to_py)?;
    Ok(list.iter().map(ToString::to_string).collect())
}

/// Classification for the multiplicity pair `{m1, m2}` as a dict with keys
/// `case`, `classes` (canonical texts) and `reversing_pairs` (index pairs).
#[pyfunction]
fn classify<'py>(py: Python<'py>, lens: &LensSpace, m1: Int, m2: Int) -> PyResult<Bound<'py, PyDict>> {
    let r = core::classify_pair(&lens.0, m1, m2).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("lens", r.lens.to_string())?;
    d.set_item("case", r.prediction.case.label())?;
    let classes: Vec<String> = r.classes.iter().map(|c| c.canonical.to_string()).collect();
    d.set_item("classes", classes)?;
    d.set_item("reversing_pairs", r.reversing_pairs)?;
    Ok(d)
}

#[pyfunction]
fn lens_equal_oriented(a: &LensSpace, b: &LensSpace) -> bool {
    core::lens_equal_oriented(&a.0, &b.0)
}

#[pyfunction]
fn lens_equal_unoriented(a: &LensSpace, b: &LensSpace) -> bool {
    core::lens_equal_unoriented(&a.0, &b.0)
}

#[pymodule]
fn seifert_lens(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<LensSpace>()?;
    m.add_class::<SeifertFibration>()?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(construction_trace, m)?)?;
    m.add_function(wrap_pyfunction!(model_fibration, m)?)?;
    m.add_function(wrap_pyfunction!(isotropy_order, m)?)?;
    m.add_function(wrap_pyfunction!(isotropy_order_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(s3_fibration, m)?)?;
    m.add_function(wrap_pyfunction!(s2xs1_fibration, m)?)?;
    m.add_function(wrap_pyfunction!(one_singular_list, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_fibrations, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(lens_equal_oriented, m)?)?;
    m.add_function(wrap_pyfunction!(lens_equal_unoriented, m)?)?;
    Ok(())
}
