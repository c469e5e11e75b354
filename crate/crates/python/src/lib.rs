//! Python bindings: groupoids, G-sets, weights, crossed G-sets and their
//! rings, plus the structural checks.

use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use burnside::classify::{self, BasisCatalog};
use burnside::crossed::{self, TuplePlan};
use burnside::ring::{self, RingHom};
use burnside::{corpus, json, sample};
use burnside::{CrossedGSet, FiniteGroupoid, GMonoid, GSet, RingPresentation};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_python(py: Python<'_>, v: &serde_json::Value) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(v).map_err(value_error)?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

fn parse(text: &str) -> PyResult<serde_json::Value> {
    json::parse_str(text).map_err(value_error)
}

#[pyclass(name = "Groupoid", module = "crossed_burnside", frozen)]
struct PyGroupoid(Arc<FiniteGroupoid>);

#[pymethods]
impl PyGroupoid {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        json::parse_groupoid(&parse(text)?).map(Self).map_err(value_error)
    }

    /// `trivial`, `C<n>`, `S3`, `D4`, `Q8`, `Pair(<n>)`, ...
    #[staticmethod]
    fn named(name: &str) -> PyResult<Self> {
        corpus::by_name(name).map(Self).ok_or_else(|| value_error(format!("unknown groupoid {name:?}")))
    }

    #[staticmethod]
    fn from_perm_gens(gens: Vec<Vec<usize>>) -> PyResult<Self> {
        FiniteGroupoid::from_perm_gens(&gens).map(|g| Self(Arc::new(g))).map_err(value_error)
    }

    #[getter]
    fn object_count(&self) -> usize {
        self.0.object_count()
    }

    #[getter]
    fn morphism_count(&self) -> usize {
        self.0.morphism_count()
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    /// Objects grouped by connected component.
    fn components(&self) -> Vec<Vec<usize>> {
        let comps = self.0.components();
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); comps.count()];
        for (x, &c) in comps.component_of.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    fn product(&self, other: &PyGroupoid) -> Self {
        Self(Arc::new(FiniteGroupoid::direct_product(&self.0, &other.0)))
    }

    fn disjoint_union(&self, other: &PyGroupoid) -> PyResult<Self> {
        FiniteGroupoid::disjoint_union(&[Arc::clone(&self.0), Arc::clone(&other.0)])
            .map(|(g, _)| Self(g))
            .map_err(value_error)
    }

    fn to_json(&self) -> String {
        json::groupoid_to_json(&self.0).to_string()
    }

    fn __repr__(&self) -> String {
        format!("Groupoid(objects={}, morphisms={})", self.0.object_count(), self.0.morphism_count())
    }
}

#[pyclass(name = "GSet", module = "crossed_burnside", frozen)]
struct PyGSet(GSet);

#[pymethods]
impl PyGSet {
    #[staticmethod]
    fn from_json(groupoid: &PyGroupoid, text: &str) -> PyResult<Self> {
        json::parse_gset(&parse(text)?, &groupoid.0).map(Self).map_err(value_error)
    }

    #[staticmethod]
    fn terminal(groupoid: &PyGroupoid) -> Self {
        Self(GSet::terminal(&groupoid.0))
    }

    #[staticmethod]
    fn representable(groupoid: &PyGroupoid, object: usize) -> PyResult<Self> {
        if object >= groupoid.0.object_count() {
            return Err(value_error(format!("no object {object}")));
        }
        Ok(Self(GSet::representable(&groupoid.0, object)))
    }

    #[getter]
    fn fibers(&self) -> Vec<usize> {
        self.0.fibers().to_vec()
    }

    fn orbits(&self) -> Vec<Vec<(usize, usize)>> {
        self.0.orbits()
    }

    fn product(&self, other: &PyGSet) -> PyResult<Self> {
        self.0.product(&other.0).map(Self).map_err(value_error)
    }

    fn coproduct(&self, other: &PyGSet) -> PyResult<Self> {
        self.0.coproduct(&other.0).map(Self).map_err(value_error)
    }

    fn to_json(&self) -> String {
        json::gset_to_json(&self.0).to_string()
    }
}

/// A G-monoid used as the label object of crossed G-sets.
#[pyclass(name = "Weight", module = "crossed_burnside", frozen)]
struct PyWeight(Arc<GMonoid>);

#[pymethods]
impl PyWeight {
    #[staticmethod]
    fn conjugation(groupoid: &PyGroupoid) -> Self {
        Self(Arc::new(GMonoid::conjugation(&groupoid.0)))
    }

    #[staticmethod]
    fn trivial(groupoid: &PyGroupoid) -> Self {
        Self(Arc::new(GMonoid::trivial(&groupoid.0)))
    }

    #[staticmethod]
    fn from_json(groupoid: &PyGroupoid, text: &str) -> PyResult<Self> {
        json::parse_gmonoid(&parse(text)?, &groupoid.0)
            .map(|m| Self(Arc::new(m)))
            .map_err(value_error)
    }

    fn is_conjugation(&self) -> bool {
        self.0.is_conjugation()
    }
}

#[pyclass(name = "CrossedGSet", module = "crossed_burnside", frozen)]
struct PyCrossed(CrossedGSet);

#[pymethods]
impl PyCrossed {
    #[staticmethod]
    fn from_json(weight: &PyWeight, text: &str) -> PyResult<Self> {
        json::parse_crossed(&parse(text)?, &weight.0).map(Self).map_err(value_error)
    }

    #[staticmethod]
    fn new(carrier: &PyGSet, weight: &PyWeight, labels: Vec<Vec<usize>>) -> PyResult<Self> {
        CrossedGSet::new(carrier.0.clone(), Arc::clone(&weight.0), labels)
            .map(Self)
            .map_err(value_error)
    }

    #[staticmethod]
    fn unit(weight: &PyWeight) -> Self {
        Self(CrossedGSet::unit_object(&weight.0))
    }

    /// `carrier` with every label the monoid unit.
    #[staticmethod]
    fn with_unit_labels(carrier: &PyGSet, weight: &PyWeight) -> PyResult<Self> {
        CrossedGSet::trivial_label_embed(&carrier.0, &weight.0).map(Self).map_err(value_error)
    }

    #[staticmethod]
    #[pyo3(signature = (weight, count, seed = 0))]
    fn samples(weight: &PyWeight, count: usize, seed: u64) -> Vec<Self> {
        sample::sample_crossed_sets(&weight.0, count, seed).into_iter().map(Self).collect()
    }

    #[getter]
    fn fibers(&self) -> Vec<usize> {
        self.0.carrier().fibers().to_vec()
    }

    #[getter]
    fn labels(&self) -> Vec<Vec<usize>> {
        self.0.labels().to_vec()
    }

    fn carrier(&self) -> PyGSet {
        PyGSet(self.0.forget())
    }

    fn tensor(&self, other: &PyCrossed) -> PyResult<Self> {
        self.0.tensor(&other.0).map(Self).map_err(value_error)
    }

    fn coproduct(&self, other: &PyCrossed) -> PyResult<Self> {
        self.0.coproduct(&other.0).map(Self).map_err(value_error)
    }

    /// Components of an isomorphism onto `other`, or `None`.
    fn isomorphism(&self, other: &PyCrossed) -> PyResult<Option<Vec<Vec<usize>>>> {
        classify::are_isomorphic(&self.0, &other.0)
            .map(|m| m.map(|m| m.components))
            .map_err(value_error)
    }

    fn is_isomorphic(&self, other: &PyCrossed) -> PyResult<bool> {
        Ok(self.isomorphism(other)?.is_some())
    }

    fn to_json(&self) -> String {
        json::crossed_to_json(&self.0).to_string()
    }

    fn __repr__(&self) -> String {
        format!("CrossedGSet(fibers={:?}, labels={:?})", self.0.carrier().fibers(), self.0.labels())
    }
}

/// A ring with a finite ℤ-basis given by structure constants.
#[pyclass(name = "Ring", module = "crossed_burnside", frozen)]
struct PyRing {
    ring: Arc<RingPresentation>,
    /// Present for rings whose basis is a catalog of crossed G-sets.
    catalog: Option<BasisCatalog>,
}

#[pymethods]
impl PyRing {
    #[getter]
    fn dim(&self) -> usize {
        self.ring.dim()
    }

    #[getter]
    fn unit(&self) -> Vec<i64> {
        self.ring.unit().to_vec()
    }

    /// Coordinates of `e_i·e_j`.
    fn product_of_basis(&self, i: usize, j: usize) -> PyResult<Vec<i64>> {
        let d = self.ring.dim();
        if i >= d || j >= d {
            return Err(value_error(format!("basis index out of range (dim {d})")));
        }
        Ok(self.ring.row(i, j).to_vec())
    }

    fn mul(&self, a: Vec<i64>, b: Vec<i64>) -> PyResult<Vec<i64>> {
        self.ring.mul(&a, &b).map_err(value_error)
    }

    fn is_commutative(&self) -> bool {
        self.ring.commutativity_failure().is_none()
    }

    /// Basis coordinates of a crossed G-set.
    fn coordinates(&self, c: &PyCrossed) -> PyResult<Vec<u64>> {
        let catalog = self
            .catalog
            .as_ref()
            .ok_or_else(|| value_error("this ring has no crossed G-set basis"))?;
        classify::express_in_basis(c.0.as_slice(), catalog).map_err(value_error)
    }

    fn to_dict(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_python(py, &self.ring.to_json())
    }
}

#[pyfunction]
fn burnside_ring(groupoid: &PyGroupoid) -> PyResult<PyRing> {
    let (ring, _) = ring::burnside_ring(&groupoid.0).map_err(value_error)?;
    Ok(PyRing {
        ring: Arc::new(ring),
        catalog: None,
    })
}

#[pyfunction]
fn hadamard_ring(gset: &PyGSet) -> PyResult<PyRing> {
    let (ring, _) = ring::hadamard_ring(&gset.0).map_err(value_error)?;
    Ok(PyRing {
        ring: Arc::new(ring),
        catalog: None,
    })
}

#[pyfunction]
fn crossed_burnside_ring(weight: &PyWeight) -> PyResult<PyRing> {
    let (ring, catalog) = ring::crossed_burnside_ring(&weight.0).map_err(value_error)?;
    Ok(PyRing {
        ring: Arc::new(ring),
        catalog: Some(catalog),
    })
}

/// Checks the monoidal axioms on `samples` random tuples per axiom drawn from
/// a pool of twelve sampled crossed G-sets.
#[pyfunction]
#[pyo3(signature = (weight, samples = 100, seed = 0))]
fn verify_axioms(py: Python<'_>, weight: &PyWeight, samples: usize, seed: u64) -> PyResult<Py<PyAny>> {
    let pool = sample::sample_crossed_sets(&weight.0, 12, seed);
    let report = crossed::check_monoidal_axioms(&pool, &TuplePlan::Random { count: samples, seed });
    to_python(py, &report.to_json())
}

fn hom_report(py: Python<'_>, hom: Result<RingHom, ring::RingError>) -> PyResult<Py<PyAny>> {
    let hom = hom.map_err(value_error)?;
    to_python(py, &hom.to_json().map_err(value_error)?)
}

#[pyfunction]
fn verify_embedding(py: Python<'_>, weight: &PyWeight) -> PyResult<Py<PyAny>> {
    hom_report(py, ring::embedding_hom(&weight.0))
}

#[pyfunction]
#[pyo3(signature = (weight, object = 0))]
fn verify_reduction(py: Python<'_>, weight: &PyWeight, object: usize) -> PyResult<Py<PyAny>> {
    hom_report(py, ring::connected_reduction_hom(&weight.0, object))
}

#[pyfunction]
fn verify_decomposition(py: Python<'_>, weight: &PyWeight) -> PyResult<Py<PyAny>> {
    hom_report(py, ring::decomposition_hom(&weight.0))
}

#[pymodule]
#[pyo3(name = "crossed_burnside")]
fn init(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGroupoid>()?;
    m.add_class::<PyGSet>()?;
    m.add_class::<PyWeight>()?;
    m.add_class::<PyCrossed>()?;
    m.add_class::<PyRing>()?;
    m.add_function(wrap_pyfunction!(burnside_ring, m)?)?;
    m.add_function(wrap_pyfunction!(hadamard_ring, m)?)?;
    m.add_function(wrap_pyfunction!(crossed_burnside_ring, m)?)?;
    m.add_function(wrap_pyfunction!(verify_axioms, m)?)?;
    m.add_function(wrap_pyfunction!(verify_embedding, m)?)?;
    m.add_function(wrap_pyfunction!(verify_reduction, m)?)?;
    m.add_function(wrap_pyfunction!(verify_decomposition, m)?)?;
    Ok(())
}
