//! Python module `quandle`. Points, table entries and isomorphism maps are
//! 1-based on this side, as in the text formats.

use num_bigint::BigUint;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use quandle_core as core;

create_exception!(quandle, QuandleError, PyValueError);
create_exception!(quandle, BoundExceeded, QuandleError);

fn to_py(e: core::Error) -> PyErr {
    if e.is_bound() {
        BoundExceeded::new_err(e.to_string())
    } else {
        QuandleError::new_err(e.to_string())
    }
}

fn point(x: usize, n: usize) -> PyResult<usize> {
    if x == 0 || x > n {
        return Err(QuandleError::new_err(format!("point {x} outside 1..={n}")));
    }
    Ok(x - 1)
}

#[pyclass(
    name = "Permutation",
    module = "quandle",
    frozen,
    eq,
    hash,
    from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPermutation(core::Permutation);

#[pymethods]
impl PyPermutation {
    /// From cycle notation such as `"(1,2)(3,4,5)"` on `degree` points.
    #[new]
    fn new(cycles: &str, degree: usize) -> PyResult<Self> {
        core::Permutation::parse(cycles, degree)
            .map(Self)
            .map_err(to_py)
    }

    /// From the list of images of `1..n`.
    #[staticmethod]
    fn from_images(images: Vec<usize>) -> PyResult<Self> {
        core::Permutation::from_images_1based(&images)
            .map(Self)
            .map_err(to_py)
    }

    #[staticmethod]
    fn identity(degree: usize) -> Self {
        Self(core::Permutation::identity(degree))
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn images(&self) -> Vec<usize> {
        self.0.images_1based()
    }

    fn image(&self, x: usize) -> PyResult<usize> {
        Ok(self.0.image(point(x, self.0.degree())?) + 1)
    }

    fn cycles(&self) -> Vec<Vec<usize>> {
        self.0
            .cycles()
            .into_iter()
            .map(|c| c.into_iter().map(|x| x + 1).collect())
            .collect()
    }

    fn order(&self) -> u64 {
        self.0.order()
    }

    fn inverse(&self) -> Self {
        Self(self.0.inverse())
    }

    /// `g^-1 * self * g`.
    fn conjugate_by(&self, g: &PyPermutation) -> Self {
        Self(self.0.conjugate_by(&g.0))
    }

    /// Left-to-right product: `a * b` applies `a` first.
    fn __mul__(&self, other: &PyPermutation) -> PyResult<Self> {
        self.0.compose(&other.0).map(Self).map_err(to_py)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation('{}', {})", self.0, self.0.degree())
    }
}

#[pyclass(name = "PermGroup", module = "quandle", frozen, from_py_object)]
#[derive(Clone)]
struct PyPermGroup(core::PermGroup);

#[pymethods]
impl PyPermGroup {
    #[new]
    fn new(generators: Vec<PyPermutation>) -> PyResult<Self> {
        core::PermGroup::new(generators.into_iter().map(|g| g.0).collect())
            .map(Self)
            .map_err(to_py)
    }

    #[staticmethod]
    fn symmetric(n: usize) -> Self {
        Self(core::PermGroup::symmetric(n))
    }

    #[staticmethod]
    fn alternating(n: usize) -> Self {
        Self(core::PermGroup::alternating(n))
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn order(&self) -> BigUint {
        self.0.order().clone()
    }

    fn generators(&self) -> Vec<PyPermutation> {
        self.0
            .generators()
            .iter()
            .cloned()
            .map(PyPermutation)
            .collect()
    }

    fn __contains__(&self, g: &PyPermutation) -> PyResult<bool> {
        self.0.contains(&g.0).map_err(to_py)
    }

    fn orbit(&self, x: usize) -> PyResult<Vec<usize>> {
        let orbit = self.0.orbit(point(x, self.0.degree())?).map_err(to_py)?;
        Ok(orbit.into_iter().map(|y| y + 1).collect())
    }

    fn stabilizer(&self, x: usize) -> PyResult<Self> {
        self.0
            .stabilizer(point(x, self.0.degree())?)
            .map(Self)
            .map_err(to_py)
    }

    fn is_transitive(&self) -> bool {
        self.0.is_transitive()
    }

    fn is_primitive(&self) -> bool {
        self.0.is_primitive()
    }

    fn is_quasiprimitive(&self) -> PyResult<bool> {
        self.0.is_quasiprimitive().map_err(to_py)
    }

    /// Finest block system with `a` and `b` in one block, as 1-based classes.
    fn minimal_block_system(&self, a: usize, b: usize) -> PyResult<Vec<Vec<usize>>> {
        let n = self.0.degree();
        let sys = self
            .0
            .minimal_block_system(point(a, n)?, point(b, n)?)
            .map_err(to_py)?;
        Ok(sys
            .classes()
            .iter()
            .map(|c| c.iter().map(|x| x + 1).collect())
            .collect())
    }

    fn center(&self) -> PyResult<Self> {
        self.0.center().map(Self).map_err(to_py)
    }

    fn derived_subgroup(&self) -> Self {
        Self(self.0.derived_subgroup())
    }

    fn same_elements(&self, other: &PyPermGroup) -> bool {
        self.0.same_elements(&other.0)
    }

    fn __repr__(&self) -> String {
        format!(
            "<PermGroup degree={} order={}>",
            self.0.degree(),
            self.0.order()
        )
    }
}

#[pyclass(name = "Quandle", module = "quandle", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyQuandle(core::Quandle);

#[pymethods]
impl PyQuandle {
    /// From the operation table, `rows[x-1][y-1] = x ▷ y`, entries 1-based.
    #[new]
    fn new(rows: Vec<Vec<usize>>) -> PyResult<Self> {
        core::Quandle::from_table_1based(&rows)
            .map(Self)
            .map_err(to_py)
    }

    /// Parses the `quandle <n>` table format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        core::catalog::parse_quandle_file(text)
            .map(Self)
            .map_err(to_py)
    }

    #[staticmethod]
    fn dihedral(n: usize) -> Self {
        Self(core::Quandle::dihedral(n))
    }

    #[staticmethod]
    fn trivial(n: usize) -> Self {
        Self(core::Quandle::trivial(n))
    }

    fn to_text(&self) -> String {
        core::catalog::write_quandle_file(&self.0)
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    fn __len__(&self) -> usize {
        self.0.order()
    }

    fn op(&self, x: usize, y: usize) -> PyResult<usize> {
        let n = self.0.order();
        Ok(self.0.op(point(x, n)?, point(y, n)?) + 1)
    }

    fn rows(&self) -> Vec<Vec<usize>> {
        self.0
            .rows()
            .into_iter()
            .map(|r| r.into_iter().map(|v| v + 1).collect())
            .collect()
    }

    fn inner_group(&self) -> PyPermGroup {
        PyPermGroup(self.0.inner_group())
    }

    fn displacement_group(&self) -> PyPermGroup {
        PyPermGroup(self.0.displacement_group())
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn is_faithful(&self) -> bool {
        self.0.is_faithful()
    }

    fn is_latin(&self) -> bool {
        self.0.is_latin()
    }

    fn is_simple(&self) -> bool {
        self.0.is_simple()
    }

    fn is_primitive(&self) -> bool {
        self.0.is_primitive()
    }

    fn is_quasiprimitive(&self) -> PyResult<bool> {
        self.0.is_quasiprimitive().map_err(to_py)
    }

    /// `"yes"`, `"no"` or `"unknown"` (not simple, or order at most 2).
    fn affine(&self) -> &'static str {
        core::enumerate::classify_affine(&self.0, self.0.is_simple()).label()
    }

    /// An isomorphism onto `other` as the list of images of `1..n`, or `None`.
    fn isomorphism(&self, other: &PyQuandle) -> Option<Vec<usize>> {
        self.0
            .isomorphism(&other.0)
            .map(|m| m.into_iter().map(|y| y + 1).collect())
    }

    fn __repr__(&self) -> String {
        format!("<Quandle order={}>", self.0.order())
    }
}

/// The quandle of the envelope `(group, rho)` based at point `base`.
#[pyfunction]
#[pyo3(signature = (group, rho, base = 1))]
fn pq(group: &PyPermGroup, rho: &PyPermutation, base: usize) -> PyResult<PyQuandle> {
    let env = core::Envelope::new(
        group.0.clone(),
        point(base, group.0.degree())?,
        rho.0.clone(),
    )
    .map_err(to_py)?;
    core::construct::pq(&env).map(PyQuandle).map_err(to_py)
}

/// The envelope `(Inn(q), R_base)` of a connected quandle.
#[pyfunction]
#[pyo3(signature = (q, base = 1))]
fn pe(q: &PyQuandle, base: usize) -> PyResult<(PyPermGroup, PyPermutation)> {
    let env = core::construct::pe(&q.0, point(base, q.0.order())?).map_err(to_py)?;
    Ok((
        PyPermGroup(env.group().clone()),
        PyPermutation(env.rho().clone()),
    ))
}

/// Conjugation quandle on the class of `g`, with the class in label order.
#[pyfunction]
fn conj_quandle(
    group: &PyPermGroup,
    g: &PyPermutation,
) -> PyResult<(PyQuandle, Vec<PyPermutation>)> {
    let (q, class) = core::construct::conj_quandle(&group.0, &g.0).map_err(to_py)?;
    Ok((PyQuandle(q), class.into_iter().map(PyPermutation).collect()))
}

/// Affine quandle `x ▷ y = psi(x - y) + y` over `Z_p^k`.
#[pyfunction]
fn affine_quandle(p: u32, psi: Vec<Vec<u32>>) -> PyResult<PyQuandle> {
    let m = core::Matrix::new(p, psi).map_err(to_py)?;
    core::construct::affine_quandle(&m)
        .map(PyQuandle)
        .map_err(to_py)
}

/// Non-identity elements of the centre of the stabilizer of `base` whose
/// class generates the group.
#[pyfunction]
#[pyo3(signature = (group, base = 1))]
fn xi_set(group: &PyPermGroup, base: usize) -> PyResult<Vec<PyPermutation>> {
    let xi = core::enumerate::xi_set(&group.0, point(base, group.0.degree())?).map_err(to_py)?;
    Ok(xi.into_iter().map(PyPermutation).collect())
}

/// Every quandle of order `n` up to isomorphism, by exhaustive search.
#[pyfunction]
fn brute_force_enumerate(py: Python<'_>, n: usize) -> PyResult<Vec<PyQuandle>> {
    let found = py
        .detach(|| core::brute_force_enumerate(n, core::cli::ORACLE_MAX_ORDER))
        .map_err(to_py)?;
    Ok(found.into_iter().map(PyQuandle).collect())
}

/// Labels and groups of a catalog file or bundled catalog (`@primitive`,
/// `@quasiprimitive`, `@spot`).
#[pyfunction]
fn catalog(spec: &str) -> PyResult<Vec<(String, PyPermGroup)>> {
    let records = core::cli::load_catalog(spec).map_err(to_py)?;
    records
        .into_iter()
        .map(|r| {
            let g = r.group().map_err(to_py)?;
            Ok((r.label, PyPermGroup(g)))
        })
        .collect()
}

#[pyclass(name = "Entry", module = "quandle", frozen, get_all)]
struct PyEntry {
    quandle: PyQuandle,
    source: String,
    rho: PyPermutation,
    inn_order: BigUint,
    dis_order: BigUint,
    simple: bool,
    primitive: bool,
    quasiprimitive: bool,
    affine: &'static str,
}

#[pyclass(name = "EnumerationResult", module = "quandle", frozen)]
struct PyEnumerationResult(core::EnumerationResult);

#[pymethods]
impl PyEnumerationResult {
    #[getter]
    fn degree(&self) -> usize {
        self.0.degree
    }

    #[getter]
    fn raw(&self) -> usize {
        self.0.raw
    }

    #[getter]
    fn filtered(&self) -> usize {
        self.0.filtered()
    }

    #[getter]
    fn catalog_digest(&self) -> &str {
        &self.0.catalog_digest
    }

    fn entries(&self) -> Vec<PyEntry> {
        self.0
            .entries
            .iter()
            .map(|e| PyEntry {
                quandle: PyQuandle(e.quandle.clone()),
                source: e.source.clone(),
                rho: PyPermutation(e.rho.clone()),
                inn_order: e.inn_order.clone(),
                dis_order: e.dis_order.clone(),
                simple: e.simple,
                primitive: e.primitive,
                quasiprimitive: e.quasiprimitive,
                affine: e.affine.label(),
            })
            .collect()
    }

    fn summary_line(&self) -> String {
        self.0.summary_line()
    }

    fn report(&self) -> String {
        self.0.report()
    }
}

/// Quandles of order `degree` from the merged catalogs.
#[pyfunction]
#[pyo3(signature = (degree, catalogs = vec!["@primitive".to_string()], mode = "primitive", non_affine_only = false, jobs = 0, verify_flags = true))]
fn enumerate(
    py: Python<'_>,
    degree: usize,
    catalogs: Vec<String>,
    mode: &str,
    non_affine_only: bool,
    jobs: usize,
    verify_flags: bool,
) -> PyResult<PyEnumerationResult> {
    let mode: core::Mode = mode.parse().map_err(to_py)?;
    let mut records = Vec::new();
    for spec in &catalogs {
        records.extend(core::cli::load_catalog(spec).map_err(to_py)?);
    }
    let opts = core::Options {
        verify_flags,
        non_affine_only,
        jobs,
        ..core::Options::default()
    };
    py.detach(|| core::enumerate::enumerate_degree(degree, &records, mode, &opts))
        .map(PyEnumerationResult)
        .map_err(to_py)
}

#[pymodule]
fn quandle(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("QuandleError", m.py().get_type::<QuandleError>())?;
    m.add("BoundExceeded", m.py().get_type::<BoundExceeded>())?;
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyPermGroup>()?;
    m.add_class::<PyQuandle>()?;
    m.add_class::<PyEntry>()?;
    m.add_class::<PyEnumerationResult>()?;
    m.add_function(wrap_pyfunction!(pq, m)?)?;
    m.add_function(wrap_pyfunction!(pe, m)?)?;
    m.add_function(wrap_pyfunction!(conj_quandle, m)?)?;
    m.add_function(wrap_pyfunction!(affine_quandle, m)?)?;
    m.add_function(wrap_pyfunction!(xi_set, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    Ok(())
}
