//! Python bindings for the `twoclosed` crate.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use ::twoclosed as tc;

create_exception!(twoclosed, GroupError, PyValueError);

fn err(e: impl std::fmt::Display) -> PyErr {
    GroupError::new_err(e.to_string())
}

#[pyclass(
    frozen,
    from_py_object,
    eq,
    hash,
    name = "Permutation",
    module = "twoclosed"
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPermutation(tc::Permutation);

#[pymethods]
impl PyPermutation {
    #[new]
    fn new(images: Vec<usize>) -> PyResult<Self> {
        tc::Permutation::from_images(images).map(Self).map_err(err)
    }

    #[staticmethod]
    fn identity(degree: usize) -> Self {
        Self(tc::Permutation::identity(degree))
    }

    #[staticmethod]
    fn from_cycles(degree: usize, cycles: Vec<Vec<usize>>) -> PyResult<Self> {
        tc::Permutation::from_cycles(degree, &cycles)
            .map(Self)
            .map_err(err)
    }

    #[getter]
    fn images(&self) -> Vec<usize> {
        self.0.images().to_vec()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    /// `self` first, then `other`.
    fn compose(&self, other: &PyPermutation) -> PyResult<Self> {
        self.0.compose(&other.0).map(Self).map_err(err)
    }

    fn inverse(&self) -> Self {
        Self(self.0.inverse())
    }

    fn order(&self) -> usize {
        self.0.order()
    }

    fn __call__(&self, point: usize) -> PyResult<usize> {
        if point < self.0.degree() {
            Ok(self.0.apply(point))
        } else {
            Err(err(format!("point {point} out of range")))
        }
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation({:?})", self.0.images())
    }
}

#[pyclass(frozen, from_py_object, name = "PermGroup", module = "twoclosed")]
#[derive(Clone)]
struct PyPermGroup(tc::PermGroup);

#[pymethods]
impl PyPermGroup {
    #[new]
    fn new(degree: usize, generators: Vec<PyPermutation>) -> PyResult<Self> {
        let gens = generators.into_iter().map(|p| p.0).collect();
        tc::PermGroup::new(degree, gens).map(Self).map_err(err)
    }

    /// Parses the `degree N` / `gen ...` text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        tc::parse_group(text).map(Self).map_err(err)
    }

    fn serialize(&self) -> String {
        tc::serialize_group(&self.0)
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    #[getter]
    fn generators(&self) -> Vec<PyPermutation> {
        self.0
            .generators()
            .iter()
            .cloned()
            .map(PyPermutation)
            .collect()
    }

    fn order(&self) -> PyResult<usize> {
        self.0.order().map_err(err)
    }

    fn elements(&self) -> PyResult<Vec<PyPermutation>> {
        Ok(self
            .0
            .elements()
            .map_err(err)?
            .iter()
            .cloned()
            .map(PyPermutation)
            .collect())
    }

    fn contains(&self, p: &PyPermutation) -> PyResult<bool> {
        self.0.contains(&p.0).map_err(err)
    }

    fn orbits(&self) -> Vec<Vec<usize>> {
        self.0.orbits().classes().to_vec()
    }

    fn is_transitive(&self) -> bool {
        self.0.is_transitive()
    }

    fn is_abelian(&self) -> bool {
        self.0.is_abelian()
    }

    fn p_group_prime(&self) -> PyResult<Option<usize>> {
        self.0.p_group_prime().map_err(err)
    }

    fn cyclic_constituents(&self) -> PyResult<bool> {
        self.0.cyclic_constituents().map_err(err)
    }

    fn pointwise_stabilizer(&self, points: Vec<usize>) -> PyResult<Self> {
        self.0.pointwise_stabilizer(&points).map(Self).map_err(err)
    }

    fn setwise_stabilizer(&self, points: Vec<usize>) -> PyResult<Self> {
        self.0.setwise_stabilizer(&points).map(Self).map_err(err)
    }

    fn restriction(&self, points: Vec<usize>) -> PyResult<Self> {
        self.0.restriction(&points).map(Self).map_err(err)
    }

    fn is_subgroup_of(&self, other: &PyPermGroup) -> PyResult<bool> {
        self.0.is_subgroup_of(&other.0).map_err(err)
    }

    fn induced_on_orbits(&self, sub: &PyPermGroup) -> PyResult<Self> {
        self.0.induced_on_orbits(&sub.0).map(Self).map_err(err)
    }

    fn same_elements(&self, other: &PyPermGroup) -> PyResult<bool> {
        self.0.same_elements(&other.0).map_err(err)
    }

    fn __repr__(&self) -> String {
        let gens: Vec<String> = self.0.generators().iter().map(|g| g.to_string()).collect();
        format!(
            "PermGroup(degree={}, generators=[{}])",
            self.0.degree(),
            gens.join(", ")
        )
    }
}

fn limits(max_degree: usize, node_budget: u64) -> tc::OracleLimits {
    tc::OracleLimits {
        max_degree,
        node_budget,
        ..tc::OracleLimits::default()
    }
}

#[pyfunction]
#[pyo3(signature = (group, max_degree = 14, node_budget = 50_000_000))]
fn two_closure(group: &PyPermGroup, max_degree: usize, node_budget: u64) -> PyResult<PyPermGroup> {
    tc::two_closure(&group.0, limits(max_degree, node_budget))
        .map(PyPermGroup)
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (group, max_degree = 14, node_budget = 50_000_000))]
fn is_2_closed_oracle(group: &PyPermGroup, max_degree: usize, node_budget: u64) -> PyResult<bool> {
    tc::is_2_closed_oracle(&group.0, limits(max_degree, node_budget)).map_err(err)
}

/// The 2-orbit coloring as a list of rows of color ids.
#[pyfunction]
fn orb2(group: &PyPermGroup) -> Vec<Vec<u32>> {
    let c = tc::TwoOrbitColoring::of_group(&group.0);
    (0..c.degree()).map(|a| c.row(a).to_vec()).collect()
}

#[pyfunction]
fn zel(group: &PyPermGroup) -> PyResult<PyPermGroup> {
    tc::zel(&group.0).map(PyPermGroup).map_err(err)
}

#[pyfunction]
fn zel_condition(group: &PyPermGroup) -> PyResult<bool> {
    tc::zel_condition(&group.0).map_err(err)
}

#[pyfunction]
fn sylow_decomposition(group: &PyPermGroup) -> PyResult<Vec<(usize, PyPermGroup)>> {
    Ok(tc::sylow_decomposition(&group.0)
        .map_err(err)?
        .parts
        .into_iter()
        .map(|(p, g)| (p, PyPermGroup(g)))
        .collect())
}

#[pyfunction]
fn has_unessential_witness(group: &PyPermGroup, orbit: Vec<usize>) -> PyResult<Option<Vec<usize>>> {
    tc::has_unessential_witness(&group.0, &orbit).map_err(err)
}

#[pyfunction]
fn remove_orbit(group: &PyPermGroup, orbit: Vec<usize>) -> PyResult<PyPermGroup> {
    tc::remove_orbit(&group.0, &orbit)
        .map(PyPermGroup)
        .map_err(err)
}

fn trace_dict<'py>(py: Python<'py>, trace: &tc::ReductionTrace) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("verdict", trace.verdict)?;
    let steps: Vec<(&str, usize, usize)> = trace
        .steps
        .iter()
        .map(|s| (s.kind.name(), s.degree, s.order))
        .collect();
    d.set_item("steps", steps)?;
    d.set_item("text", trace.to_string())?;
    Ok(d)
}

/// Runs the inductive criterion; returns `{"verdict", "steps", "text"}`.
#[pyfunction]
fn decide<'py>(py: Python<'py>, group: &PyPermGroup) -> PyResult<Bound<'py, PyDict>> {
    let (_, trace) = tc::decide_2_closed(&group.0).map_err(err)?;
    trace_dict(py, &trace)
}

#[pyfunction]
fn decide_with_oracle_check<'py>(
    py: Python<'py>,
    group: &PyPermGroup,
) -> PyResult<Bound<'py, PyDict>> {
    let report =
        tc::decide_with_oracle_check(&group.0, tc::OracleLimits::default()).map_err(err)?;
    let d = trace_dict(py, &report.trace)?;
    d.set_item("oracle", report.oracle)?;
    d.set_item("closure_order", report.closure_order)?;
    d.set_item("mismatch", report.mismatch())?;
    Ok(d)
}

#[pyfunction]
fn example1(p: usize) -> PyResult<PyPermGroup> {
    tc::fixtures::example1(p).map(PyPermGroup).map_err(err)
}

#[pyfunction]
fn example2(p: usize) -> PyResult<PyPermGroup> {
    tc::fixtures::example2(p).map(PyPermGroup).map_err(err)
}

#[pyfunction]
fn random_abelian_cyclic(seed: u64, max_degree: usize) -> PyPermGroup {
    PyPermGroup(tc::fixtures::random_abelian_cyclic(seed, max_degree))
}

#[pymodule]
#[pyo3(name = "twoclosed")]
fn py_twoclosed(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("GroupError", m.py().get_type::<GroupError>())?;
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyPermGroup>()?;
    m.add_function(wrap_pyfunction!(two_closure, m)?)?;
    m.add_function(wrap_pyfunction!(is_2_closed_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(orb2, m)?)?;
    m.add_function(wrap_pyfunction!(zel, m)?)?;
    m.add_function(wrap_pyfunction!(zel_condition, m)?)?;
    m.add_function(wrap_pyfunction!(sylow_decomposition, m)?)?;
    m.add_function(wrap_pyfunction!(has_unessential_witness, m)?)?;
    m.add_function(wrap_pyfunction!(remove_orbit, m)?)?;
    m.add_function(wrap_pyfunction!(decide, m)?)?;
    m.add_function(wrap_pyfunction!(decide_with_oracle_check, m)?)?;
    m.add_function(wrap_pyfunction!(example1, m)?)?;
    m.add_function(wrap_pyfunction!(example2, m)?)?;
    m.add_function(wrap_pyfunction!(random_abelian_cyclic, m)?)?;
    Ok(())
}
