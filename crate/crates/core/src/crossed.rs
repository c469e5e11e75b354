//! Objects over a fixed G-set, crossed G-sets over a G-monoid, and the
//! monoidal structure on crossed G-sets.
//!
//! A [`SliceObject`] is a G-set `X` with a G-map `θ: X → T` into a target
//! G-set `T`, stored as per-object label vectors. A [`CrossedGSet`] is a
//! slice object whose target is the underlying G-set of a G-monoid `S`;
//! the monoid multiplication gives the tensor product
//! `(X, θ) ⊗ (Y, τ) = (X × Y, (x, y) ↦ θ(x)·τ(y))`.
//!
//! Products of carriers are encoded as in [`GSet::product`], so the associator
//! and unitors have identity components on element ids; the coherence checks
//! nonetheless compose and compare maps pointwise.

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::groupoid::{GroupoidError, Morphism, MorphismId, ObjectId};
use crate::gset::{check_components, GMap, GMonoid, GSet, GSetError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrossedError {
    #[error("label map is not natural at morphism {morphism}, element {element}")]
    NotNatural { morphism: MorphismId, element: usize },
    #[error("label map has the wrong shape: {0}")]
    Shape(String),
    #[error("weights differ")]
    WeightMismatch,
    #[error("braiding is only defined when the weight is the conjugation action")]
    WeightNotConjugation,
    #[error("map does not commute with the labels at object {object}, element {element}")]
    LabelMismatch { object: ObjectId, element: usize },
    #[error("map is not an isomorphism")]
    NotIsomorphism,
    #[error(transparent)]
    GSet(#[from] GSetError),
    #[error(transparent)]
    Groupoid(#[from] GroupoidError),
}

impl From<CrossedError> for GSetError {
    fn from(e: CrossedError) -> Self {
        match e {
            CrossedError::GSet(inner) => inner,
            other => GSetError::Shape(other.to_string()),
        }
    }
}

/// An object of the slice category `set^𝒢 / T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceObject {
    carrier: GSet,
    target: GSet,
    labels: Vec<Vec<usize>>,
}

impl SliceObject {
    pub fn new(carrier: GSet, target: GSet, labels: Vec<Vec<usize>>) -> Result<Self, CrossedError> {
        if !carrier.same_base(&target) {
            return Err(GSetError::BaseMismatch.into());
        }
        match check_components(&carrier, &target, &labels) {
            Ok(()) => {}
            Err(GSetError::NotNatural { morphism, element }) => {
                return Err(CrossedError::NotNatural { morphism, element })
            }
            Err(GSetError::Shape(s)) => return Err(CrossedError::Shape(s)),
            Err(e) => return Err(e.into()),
        }
        Ok(Self { carrier, target, labels })
    }

    pub(crate) fn from_parts(carrier: GSet, target: GSet, labels: Vec<Vec<usize>>) -> Self {
        debug_assert!(check_components(&carrier, &target, &labels).is_ok());
        Self { carrier, target, labels }
    }

    /// The identity of `T`, the terminal object of the slice category.
    pub fn identity_of(target: &GSet) -> Self {
        let labels = target.fibers().iter().map(|&n| (0..n).collect()).collect();
        Self::from_parts(target.clone(), target.clone(), labels)
    }

    pub fn carrier(&self) -> &GSet {
        &self.carrier
    }

    pub fn target(&self) -> &GSet {
        &self.target
    }

    pub fn labels(&self) -> &[Vec<usize>] {
        &self.labels
    }

    pub fn label(&self, x: ObjectId, a: usize) -> usize {
        self.labels[x][a]
    }

    pub fn label_map(&self) -> GMap {
        GMap {
            source: self.carrier.clone(),
            target: self.target.clone(),
            components: self.labels.clone(),
        }
    }

    pub fn coproduct(&self, other: &SliceObject) -> Result<SliceObject, CrossedError> {
        if self.target != other.target {
            return Err(CrossedError::WeightMismatch);
        }
        let carrier = self.carrier.coproduct(&other.carrier)?;
        let labels = self
            .labels
            .iter()
            .zip(&other.labels)
            .map(|(a, b)| a.iter().chain(b).copied().collect())
            .collect();
        Ok(Self::from_parts(carrier, self.target.clone(), labels))
    }

    /// Fiber product over the target: `{(a, b) | θ(a) = τ(b)}` with the
    /// induced label. Pairs are ordered lexicographically within each fiber.
    pub fn hadamard(&self, other: &SliceObject) -> Result<SliceObject, CrossedError> {
        if self.target != other.target {
            return Err(CrossedError::WeightMismatch);
        }
        let base = self.carrier.base();
        let n = base.object_count();
        let pairs: Vec<Vec<(usize, usize)>> = (0..n)
            .map(|x| {
                (0..self.carrier.fiber(x))
                    .flat_map(|a| {
                        (0..other.carrier.fiber(x))
                            .filter(move |&b| self.labels[x][a] == other.labels[x][b])
                            .map(move |b| (a, b))
                    })
                    .collect()
            })
            .collect();
        let action = (0..base.morphism_count())
            .map(|g| {
                let Morphism { dom, cod } = base.morphism(g);
                pairs[dom]
                    .iter()
                    .map(|&(a, b)| {
                        let img = (self.carrier.act(g, a), other.carrier.act(g, b));
                        pairs[cod].binary_search(&img).expect("fiber product is closed")
                    })
                    .collect()
            })
            .collect();
        let labels = pairs
            .iter()
            .enumerate()
            .map(|(x, ps)| ps.iter().map(|&(a, _)| self.labels[x][a]).collect())
            .collect();
        let carrier = GSet::from_parts(Arc::clone(base), pairs.iter().map(Vec::len).collect(), action);
        Ok(Self::from_parts(carrier, self.target.clone(), labels))
    }

    /// Restriction of the labels to a union of orbits of the carrier.
    pub fn restrict_to(&self, elements: &[(ObjectId, usize)]) -> (SliceObject, Vec<Vec<usize>>) {
        let (carrier, embedding) = self.carrier.restrict_to(elements);
        let labels = embedding
            .components
            .iter()
            .enumerate()
            .map(|(x, comp)| comp.iter().map(|&a| self.labels[x][a]).collect())
            .collect();
        (
            Self::from_parts(carrier, self.target.clone(), labels),
            embedding.components,
        )
    }

    /// Reindexes the carrier along per-fiber permutations: element `a` of
    /// fiber `x` becomes `perm[x][a]`.
    pub fn relabel(&self, perm: &[Vec<usize>]) -> SliceObject {
        let base = self.carrier.base();
        let inv: Vec<Vec<usize>> = perm
            .iter()
            .map(|p| {
                let mut inv = vec![0; p.len()];
                for (a, &b) in p.iter().enumerate() {
                    inv[b] = a;
                }
                inv
            })
            .collect();
        let action = (0..base.morphism_count())
            .map(|g| {
                let Morphism { dom, cod } = base.morphism(g);
                inv[dom].iter().map(|&a| perm[cod][self.carrier.act(g, a)]).collect()
            })
            .collect();
        let labels = inv
            .iter()
            .enumerate()
            .map(|(x, iv)| iv.iter().map(|&a| self.labels[x][a]).collect())
            .collect();
        let carrier = GSet::from_parts(Arc::clone(base), self.carrier.fibers().to_vec(), action);
        Self::from_parts(carrier, self.target.clone(), labels)
    }

    /// Precomposition of carrier and target with a functor into the base.
    pub fn pullback(&self, functor: &crate::groupoid::GroupoidFunctor) -> Result<SliceObject, CrossedError> {
        let carrier = self.carrier.pullback(functor)?;
        let target = self.target.pullback(functor)?;
        let labels = functor.object_map.iter().map(|&y| self.labels[y].clone()).collect();
        Ok(Self::from_parts(carrier, target, labels))
    }
}

/// Checks that `components` is a morphism `src → tgt` in the slice category.
pub(crate) fn check_slice_map(src: &SliceObject, tgt: &SliceObject, components: &[Vec<usize>]) -> Result<(), CrossedError> {
    if src.target != tgt.target {
        return Err(CrossedError::WeightMismatch);
    }
    check_components(&src.carrier, &tgt.carrier, components)?;
    for (x, comp) in components.iter().enumerate() {
        for (a, &b) in comp.iter().enumerate() {
            if tgt.labels[x][b] != src.labels[x][a] {
                return Err(CrossedError::LabelMismatch { object: x, element: a });
            }
        }
    }
    Ok(())
}

/// A crossed G-set: a G-set with a natural labelling into a G-monoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedGSet {
    slice: SliceObject,
    weight: Arc<GMonoid>,
}

impl CrossedGSet {
    /// Validates label naturality, reporting the first failing square.
    pub fn new(carrier: GSet, weight: Arc<GMonoid>, labels: Vec<Vec<usize>>) -> Result<Self, CrossedError> {
        let slice = SliceObject::new(carrier, weight.underlying().clone(), labels)?;
        Ok(Self { slice, weight })
    }

    pub fn from_slice(slice: SliceObject, weight: Arc<GMonoid>) -> Result<Self, CrossedError> {
        if slice.target != *weight.underlying() {
            return Err(CrossedError::WeightMismatch);
        }
        Ok(Self { slice, weight })
    }

    pub(crate) fn from_parts(carrier: GSet, weight: Arc<GMonoid>, labels: Vec<Vec<usize>>) -> Self {
        let slice = SliceObject::from_parts(carrier, weight.underlying().clone(), labels);
        Self { slice, weight }
    }

    pub fn as_slice(&self) -> &SliceObject {
        &self.slice
    }

    pub fn carrier(&self) -> &GSet {
        &self.slice.carrier
    }

    pub fn labels(&self) -> &[Vec<usize>] {
        &self.slice.labels
    }

    pub fn label(&self, x: ObjectId, a: usize) -> usize {
        self.slice.labels[x][a]
    }

    pub fn weight(&self) -> &Arc<GMonoid> {
        &self.weight
    }

    pub fn base(&self) -> &Arc<crate::groupoid::FiniteGroupoid> {
        self.slice.carrier.base()
    }

    fn same_weight(&self, other: &CrossedGSet) -> bool {
        Arc::ptr_eq(&self.weight, &other.weight) || self.weight == other.weight
    }

    /// Carrier `X × Y`; the label of `(x, y)` at `G` is `θ_G(x)·τ_G(y)`.
    pub fn tensor(&self, other: &CrossedGSet) -> Result<CrossedGSet, CrossedError> {
        if !self.same_weight(other) {
            return Err(CrossedError::WeightMismatch);
        }
        let carrier = self.carrier().product(other.carrier())?;
        let labels = (0..self.base().object_count())
            .map(|x| {
                let (l1, l2) = (&self.slice.labels[x], &other.slice.labels[x]);
                l1.iter()
                    .flat_map(|&s| l2.iter().map(move |&t| self.weight.mul(x, s, t)))
                    .collect()
            })
            .collect();
        Ok(Self::from_parts(carrier, Arc::clone(&self.weight), labels))
    }

    /// Terminal carrier labelled by the monoid units.
    pub fn unit_object(weight: &Arc<GMonoid>) -> CrossedGSet {
        let base = weight.base();
        let labels = (0..base.object_count()).map(|x| vec![weight.unit(x)]).collect();
        Self::from_parts(GSet::terminal(base), Arc::clone(weight), labels)
    }

    pub fn empty(weight: &Arc<GMonoid>) -> CrossedGSet {
        let base = weight.base();
        Self::from_parts(GSet::empty(base), Arc::clone(weight), vec![Vec::new(); base.object_count()])
    }

    /// The carrier with every element labelled by the unit.
    pub fn trivial_label_embed(carrier: &GSet, weight: &Arc<GMonoid>) -> Result<CrossedGSet, CrossedError> {
        if !carrier.same_base(weight.underlying()) {
            return Err(GSetError::BaseMismatch.into());
        }
        let labels = carrier
            .fibers()
            .iter()
            .enumerate()
            .map(|(x, &n)| vec![weight.unit(x); n])
            .collect();
        Ok(Self::from_parts(carrier.clone(), Arc::clone(weight), labels))
    }

    pub fn coproduct(&self, other: &CrossedGSet) -> Result<CrossedGSet, CrossedError> {
        if !self.same_weight(other) {
            return Err(CrossedError::WeightMismatch);
        }
        Ok(Self {
            slice: self.slice.coproduct(&other.slice)?,
            weight: Arc::clone(&self.weight),
        })
    }

    pub fn relabel(&self, perm: &[Vec<usize>]) -> CrossedGSet {
        Self {
            slice: self.slice.relabel(perm),
            weight: Arc::clone(&self.weight),
        }
    }

    /// Forgets the labels.
    pub fn forget(&self) -> GSet {
        self.carrier().clone()
    }
}

/// A label-preserving G-map between crossed G-sets over the same weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedMap {
    pub source: CrossedGSet,
    pub target: CrossedGSet,
    pub components: Vec<Vec<usize>>,
}

impl CrossedMap {
    pub fn new(source: CrossedGSet, target: CrossedGSet, components: Vec<Vec<usize>>) -> Result<Self, CrossedError> {
        let map = Self {
            source,
            target,
            components,
        };
        map.check()?;
        Ok(map)
    }

    /// Naturality and the triangle over the weight, both exhaustively.
    pub fn check(&self) -> Result<(), CrossedError> {
        if !self.source.same_weight(&self.target) {
            return Err(CrossedError::WeightMismatch);
        }
        check_slice_map(&self.source.slice, &self.target.slice, &self.components)
    }

    pub fn identity(c: &CrossedGSet) -> Self {
        let components = c.carrier().fibers().iter().map(|&n| (0..n).collect()).collect();
        Self {
            source: c.clone(),
            target: c.clone(),
            components,
        }
    }

    pub fn is_isomorphism(&self) -> bool {
        self.components.iter().enumerate().all(|(x, comp)| {
            let n = self.target.carrier().fiber(x);
            let mut seen = vec![false; n];
            comp.len() == n && comp.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
        })
    }

    pub fn inverse(&self) -> Result<CrossedMap, CrossedError> {
        if !self.is_isomorphism() {
            return Err(CrossedError::NotIsomorphism);
        }
        let components = self
            .components
            .iter()
            .map(|comp| {
                let mut inv = vec![0; comp.len()];
                for (a, &b) in comp.iter().enumerate() {
                    inv[b] = a;
                }
                inv
            })
            .collect();
        Ok(Self {
            source: self.target.clone(),
            target: self.source.clone(),
            components,
        })
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &CrossedMap) -> CrossedMap {
        let components = self
            .components
            .iter()
            .zip(&next.components)
            .map(|(f, g)| f.iter().map(|&a| g[a]).collect())
            .collect();
        CrossedMap {
            source: self.source.clone(),
            target: next.target.clone(),
            components,
        }
    }

    /// `self ⊗ other: X ⊗ Y → X' ⊗ Y'`.
    pub fn tensor(&self, other: &CrossedMap) -> Result<CrossedMap, CrossedError> {
        let source = self.source.tensor(&other.source)?;
        let target = self.target.tensor(&other.target)?;
        let components = (0..self.components.len())
            .map(|x| {
                let w = other.target.carrier().fiber(x);
                let (f, g) = (&self.components[x], &other.components[x]);
                f.iter().flat_map(|&a| g.iter().map(move |&b| a * w + b)).collect()
            })
            .collect();
        Ok(CrossedMap {
            source,
            target,
            components,
        })
    }
}

/// Associator and unitors. [`StandardCoherence`] is the structure of the
/// tensor product; alternative implementations exist only to exercise the
/// axiom checker.
pub trait Coherence {
    /// `α: (X ⊗ Y) ⊗ Z → X ⊗ (Y ⊗ Z)`, `((x, y), z) ↦ (x, (y, z))`.
    fn associator(&self, x: &CrossedGSet, y: &CrossedGSet, z: &CrossedGSet) -> Result<CrossedMap, CrossedError>;
    /// `l: I ⊗ X → X`, `(1, x) ↦ x`.
    fn left_unitor(&self, x: &CrossedGSet) -> Result<CrossedMap, CrossedError>;
    /// `r: X ⊗ I → X`, `(x, 1) ↦ x`.
    fn right_unitor(&self, x: &CrossedGSet) -> Result<CrossedMap, CrossedError>;
}

#[derive(Clone, Copy, Debug, Default)]
pub struct StandardCoherence;

impl Coherence for StandardCoherence {
    fn associator(&self, x: &CrossedGSet, y: &CrossedGSet, z: &CrossedGSet) -> Result<CrossedMap, CrossedError> {
        let source = x.tensor(y)?.tensor(z)?;
        let target = x.tensor(&y.tensor(z)?)?;
        let components = (0..x.base().object_count())
            .map(|o| {
                let (nx, ny, nz) = (x.carrier().fiber(o), y.carrier().fiber(o), z.carrier().fiber(o));
                let mut comp = vec![0; nx * ny * nz];
                for a in 0..nx {
                    for b in 0..ny {
                        for c in 0..nz {
                            comp[(a * ny + b) * nz + c] = a * (ny * nz) + (b * nz + c);
                        }
                    }
                }
                comp
            })
            .collect();
        Ok(CrossedMap {
            source,
            target,
            components,
        })
    }

    fn left_unitor(&self, x: &CrossedGSet) -> Result<CrossedMap, CrossedError> {
        let unit = CrossedGSet::unit_object(x.weight());
        let source = unit.tensor(x)?;
        // (•, a) has id 0·|X| + a
        let components = x.carrier().fibers().iter().map(|&n| (0..n).collect()).collect();
        Ok(CrossedMap {
            source,
            target: x.clone(),
            components,
        })
    }

    fn right_unitor(&self, x: &CrossedGSet) -> Result<CrossedMap, CrossedError> {
        let unit = CrossedGSet::unit_object(x.weight());
        let source = x.tensor(&unit)?;
        // (a, •) has id a·1 + 0
        let components = x.carrier().fibers().iter().map(|&n| (0..n).collect()).collect();
        Ok(CrossedMap {
            source,
            target: x.clone(),
            components,
        })
    }
}

/// The explicit isomorphism `X ⊗ (Y ⊔ Z) → (X ⊗ Y) ⊔ (X ⊗ Z)`.
pub fn distributor(x: &CrossedGSet, y: &CrossedGSet, z: &CrossedGSet) -> Result<CrossedMap, CrossedError> {
    let source = x.tensor(&y.coproduct(z)?)?;
    let target = x.tensor(y)?.coproduct(&x.tensor(z)?)?;
    let components = (0..x.base().object_count())
        .map(|o| {
            let (nx, ny, nz) = (x.carrier().fiber(o), y.carrier().fiber(o), z.carrier().fiber(o));
            let mut comp = vec![0; nx * (ny + nz)];
            for a in 0..nx {
                for b in 0..ny + nz {
                    comp[a * (ny + nz) + b] = if b < ny { a * ny + b } else { nx * ny + a * nz + (b - ny) };
                }
            }
            comp
        })
        .collect();
    Ok(CrossedMap {
        source,
        target,
        components,
    })
}

/// The braiding `η_{X,Y}: X ⊗ Y → Y ⊗ X`, `(x, y) ↦ (Y(θ_G(x))(y), x)`,
/// which reads the label `θ_G(x) ∈ 𝒢_G` as a loop acting on `Y(G)`.
pub fn braiding(x: &CrossedGSet, y: &CrossedGSet) -> Result<CrossedMap, CrossedError> {
    if !x.weight().is_conjugation() {
        return Err(CrossedError::WeightNotConjugation);
    }
    let base = x.base();
    let source = x.tensor(y)?;
    let target = y.tensor(x)?;
    let components = (0..base.object_count())
        .map(|o| {
            let (nx, ny) = (x.carrier().fiber(o), y.carrier().fiber(o));
            let loops = base.loops(o);
            let mut comp = vec![0; nx * ny];
            for a in 0..nx {
                let g = loops[x.label(o, a)];
                for b in 0..ny {
                    comp[a * ny + b] = y.carrier().act(g, b) * nx + a;
                }
            }
            comp
        })
        .collect();
    Ok(CrossedMap {
        source,
        target,
        components,
    })
}

/// Inverse of [`braiding`]: `(y, x) ↦ (x, Y(θ_G(x)⁻¹)(y))`.
pub fn braiding_inverse(x: &CrossedGSet, y: &CrossedGSet) -> Result<CrossedMap, CrossedError> {
    if !x.weight().is_conjugation() {
        return Err(CrossedError::WeightNotConjugation);
    }
    let base = x.base();
    let source = y.tensor(x)?;
    let target = x.tensor(y)?;
    let components = (0..base.object_count())
        .map(|o| {
            let (nx, ny) = (x.carrier().fiber(o), y.carrier().fiber(o));
            let loops = base.loops(o);
            let mut comp = vec![0; nx * ny];
            for b in 0..ny {
                for a in 0..nx {
                    let gi = base.inverse(loops[x.label(o, a)]);
                    comp[b * nx + a] = a * ny + y.carrier().act(gi, b);
                }
            }
            comp
        })
        .collect();
    Ok(CrossedMap {
        source,
        target,
        components,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Pentagon,
    Triangle,
    Symmetry,
    Hexagon,
    UnitorBraiding,
    Distributivity,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Pentagon => "pentagon",
            Axiom::Triangle => "triangle",
            Axiom::Symmetry => "symmetry",
            Axiom::Hexagon => "hexagon",
            Axiom::UnitorBraiding => "unitor_braiding",
            Axiom::Distributivity => "distributivity",
        }
    }
}

/// A point where two composites disagree. `samples` are indices into the
/// sample list passed to the checker.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub samples: Vec<usize>,
    pub object: ObjectId,
    pub element: usize,
    pub lhs: Option<usize>,
    pub rhs: Option<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomOutcome {
    pub axiom: Axiom,
    pub checked: usize,
    pub witness: Option<Witness>,
}

impl AxiomOutcome {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub outcomes: Vec<AxiomOutcome>,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.outcomes.iter().all(AxiomOutcome::holds)
    }

    pub fn outcome(&self, axiom: Axiom) -> Option<&AxiomOutcome> {
        self.outcomes.iter().find(|o| o.axiom == axiom)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries = self
            .outcomes
            .iter()
            .map(|o| {
                let status = match &o.witness {
                    None => serde_json::json!("ok"),
                    Some(w) => serde_json::json!({ "witness": w }),
                };
                serde_json::json!({ "axiom": o.axiom.name(), "checked": o.checked, "status": status })
            })
            .collect();
        serde_json::Value::Array(entries)
    }
}

/// How many tuples each axiom is checked on.
#[derive(Clone, Debug)]
pub enum TuplePlan {
    /// Every tuple of samples.
    Exhaustive,
    /// `count` tuples per axiom drawn with a seeded generator.
    Random { count: usize, seed: u64 },
}

fn tuples(plan: &TuplePlan, n: usize, arity: usize, salt: u64) -> Vec<Vec<usize>> {
    use rand::{Rng, SeedableRng};
    if n == 0 {
        return Vec::new();
    }
    match plan {
        TuplePlan::Exhaustive => {
            let total = n.pow(arity as u32);
            (0..total)
                .map(|mut k| {
                    let mut t = vec![0; arity];
                    for slot in t.iter_mut().rev() {
                        *slot = k % n;
                        k /= n;
                    }
                    t
                })
                .collect()
        }
        TuplePlan::Random { count, seed } => {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ salt);
            (0..*count)
                .map(|_| (0..arity).map(|_| rng.gen_range(0..n)).collect())
                .collect()
        }
    }
}

/// First pointwise difference between two parallel maps.
fn compare(lhs: &CrossedMap, rhs: &CrossedMap, samples: &[usize], what: &str) -> Option<Witness> {
    for (x, (l, r)) in lhs.components.iter().zip(&rhs.components).enumerate() {
        if l.len() != r.len() {
            return Some(Witness {
                samples: samples.to_vec(),
                object: x,
                element: 0,
                lhs: None,
                rhs: None,
                detail: format!("{what}: fiber sizes differ ({} vs {})", l.len(), r.len()),
            });
        }
        if let Some(a) = (0..l.len()).find(|&a| l[a] != r[a]) {
            return Some(Witness {
                samples: samples.to_vec(),
                object: x,
                element: a,
                lhs: Some(l[a]),
                rhs: Some(r[a]),
                detail: what.to_string(),
            });
        }
    }
    None
}

fn error_witness(samples: &[usize], err: CrossedError) -> Witness {
    Witness {
        samples: samples.to_vec(),
        object: 0,
        element: 0,
        lhs: None,
        rhs: None,
        detail: err.to_string(),
    }
}

fn run_axiom<F>(axiom: Axiom, tuples: Vec<Vec<usize>>, mut check: F) -> AxiomOutcome
where
    F: FnMut(&[usize]) -> Result<Option<Witness>, CrossedError>,
{
    let checked = tuples.len();
    for t in &tuples {
        let found = match check(t) {
            Ok(w) => w,
            Err(e) => Some(error_witness(t, e)),
        };
        if found.is_some() {
            return AxiomOutcome {
                axiom,
                checked,
                witness: found,
            };
        }
    }
    AxiomOutcome {
        axiom,
        checked,
        witness: None,
    }
}

/// Checks the monoidal axioms pointwise on tuples drawn from `samples`,
/// using the standard associator and unitors.
pub fn check_monoidal_axioms(samples: &[CrossedGSet], plan: &TuplePlan) -> AxiomReport {
    check_monoidal_axioms_with(samples, plan, &StandardCoherence)
}

/// As [`check_monoidal_axioms`] with caller-supplied coherence data. The
/// braided axioms are included only when the weight is the conjugation action.
pub fn check_monoidal_axioms_with(samples: &[CrossedGSet], plan: &TuplePlan, coh: &dyn Coherence) -> AxiomReport {
    let n = samples.len();
    let s = |i: usize| &samples[i];
    let mut outcomes = Vec::new();

    outcomes.push(run_axiom(Axiom::Pentagon, tuples(plan, n, 4, 1), |t| {
        let (w, x, y, z) = (s(t[0]), s(t[1]), s(t[2]), s(t[3]));
        let wx = w.tensor(x)?;
        let yz = y.tensor(z)?;
        let lhs = coh.associator(&wx, y, z)?.then(&coh.associator(w, x, &yz)?);
        let id_w = CrossedMap::identity(w);
        let id_z = CrossedMap::identity(z);
        let rhs = coh
            .associator(w, x, y)?
            .tensor(&id_z)?
            .then(&coh.associator(w, &x.tensor(y)?, z)?)
            .then(&id_w.tensor(&coh.associator(x, y, z)?)?);
        Ok(compare(&lhs, &rhs, t, "pentagon"))
    }));

    outcomes.push(run_axiom(Axiom::Triangle, tuples(plan, n, 2, 2), |t| {
        let (x, y) = (s(t[0]), s(t[1]));
        let unit = CrossedGSet::unit_object(x.weight());
        let lhs = coh
            .associator(x, &unit, y)?
            .then(&CrossedMap::identity(x).tensor(&coh.left_unitor(y)?)?);
        let rhs = coh.right_unitor(x)?.tensor(&CrossedMap::identity(y))?;
        Ok(compare(&lhs, &rhs, t, "triangle"))
    }));

    outcomes.push(run_axiom(Axiom::Distributivity, tuples(plan, n, 3, 3), |t| {
        let d = distributor(s(t[0]), s(t[1]), s(t[2]))?;
        d.check()?;
        if !d.is_isomorphism() {
            return Err(CrossedError::NotIsomorphism);
        }
        Ok(None)
    }));

    let braided = samples.first().is_some_and(|c| c.weight().is_conjugation());
    if braided {
        outcomes.push(run_axiom(Axiom::Symmetry, tuples(plan, n, 2, 4), |t| {
            let (x, y) = (s(t[0]), s(t[1]));
            let eta = braiding(x, y)?;
            eta.check()?;
            let back = braiding(y, x)?;
            let lhs = eta.then(&back);
            Ok(compare(&lhs, &CrossedMap::identity(&x.tensor(y)?), t, "symmetry: η_{Y,X}∘η_{X,Y} vs id"))
        }));

        outcomes.push(run_axiom(Axiom::Hexagon, tuples(plan, n, 3, 5), |t| {
            let (x, y, z) = (s(t[0]), s(t[1]), s(t[2]));
            let lhs = coh
                .associator(x, y, z)?
                .then(&braiding(x, &y.tensor(z)?)?)
                .then(&coh.associator(y, z, x)?);
            let rhs = braiding(x, y)?
                .tensor(&CrossedMap::identity(z))?
                .then(&coh.associator(y, x, z)?)
                .then(&CrossedMap::identity(y).tensor(&braiding(x, z)?)?);
            Ok(compare(&lhs, &rhs, t, "hexagon"))
        }));

        outcomes.push(run_axiom(Axiom::UnitorBraiding, tuples(plan, n, 1, 6), |t| {
            let x = s(t[0]);
            let unit = CrossedGSet::unit_object(x.weight());
            let lhs = braiding(&unit, x)?.then(&coh.right_unitor(x)?);
            Ok(compare(&lhs, &coh.left_unitor(x)?, t, "unitor"))
        }));
    }
    AxiomReport { outcomes }
}

/// Restriction of a crossed G-set along the inclusion of the isotropy group
/// at `z`. The weight is restricted the same way; for `𝒢^c` this is `𝒢_z^c`.
pub fn restrict_to_isotropy(c: &CrossedGSet, z: ObjectId) -> Result<CrossedGSet, CrossedError> {
    let base = c.base();
    if !base.is_connected() {
        return Err(GroupoidError::NotConnected.into());
    }
    let (_, inclusion) = base.isotropy_group(z)?;
    let weight = Arc::new(c.weight().pullback(&inclusion)?);
    let slice = c.as_slice().pullback(&inclusion)?;
    CrossedGSet::from_slice(slice, weight)
}

/// Induction from the isotropy group at `z` back to the connected base of
/// `weight`: precompose with the retraction `R` and move labels along the
/// transport morphisms, `y ↦ S(t_w)(τ(y))` at object `w`.
pub fn induce_from_isotropy(c: &CrossedGSet, weight: &Arc<GMonoid>, z: ObjectId) -> Result<CrossedGSet, CrossedError> {
    let base = weight.base();
    let eq = base.inclusion_equivalence(z)?;
    if *c.weight().as_ref() != weight.pullback(&eq.inclusion)? {
        return Err(CrossedError::WeightMismatch);
    }
    let carrier = c.carrier().pullback(&eq.retraction)?;
    let labels = (0..base.object_count())
        .map(|w| {
            let t = eq.unit[w];
            c.labels()[0].iter().map(|&s| weight.act(t, s)).collect()
        })
        .collect();
    Ok(CrossedGSet::from_parts(carrier, Arc::clone(weight), labels))
}

/// The isomorphism `c → induce(restrict(c))`, `x ∈ X(w) ↦ X(t_w)⁻¹(x)`.
pub fn round_trip_iso(c: &CrossedGSet, z: ObjectId) -> Result<CrossedMap, CrossedError> {
    let base = c.base();
    let restricted = restrict_to_isotropy(c, z)?;
    let back = induce_from_isotropy(&restricted, c.weight(), z)?;
    let eq = base.inclusion_equivalence(z)?;
    let components = (0..base.object_count())
        .map(|w| {
            let ti = base.inverse(eq.unit[w]);
            (0..c.carrier().fiber(w)).map(|a| c.carrier().act(ti, a)).collect()
        })
        .collect();
    CrossedMap::new(c.clone(), back, components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::FiniteGroupoid;

    fn c2() -> Arc<FiniteGroupoid> {
        Arc::new(FiniteGroupoid::from_group(&[vec![0, 1], vec![1, 0]]).unwrap())
    }

    fn point(weight: &Arc<GMonoid>, label: usize) -> CrossedGSet {
        CrossedGSet::new(GSet::terminal(weight.base()), Arc::clone(weight), vec![vec![label]]).unwrap()
    }

    #[test]
    fn label_naturality_over_c2() {
        let g = c2();
        let w = Arc::new(GMonoid::conjugation(&g));
        let reg = GSet::representable(&g, 0);
        assert!(CrossedGSet::trivial_label_embed(&reg, &w).is_ok());
        // θ(x) = x: θ(σ·e) = σ but σ·e·σ⁻¹ = e
        assert_eq!(
            CrossedGSet::new(reg.clone(), w.clone(), vec![vec![0, 1]]),
            Err(CrossedError::NotNatural { morphism: 1, element: 0 })
        );
        assert!(CrossedGSet::new(reg, w, vec![vec![1, 1]]).is_ok());
    }

    #[test]
    fn tensor_multiplies_labels() {
        let g = c2();
        let w = Arc::new(GMonoid::conjugation(&g));
        let sigma = point(&w, 1);
        let sq = sigma.tensor(&sigma).unwrap();
        assert_eq!(sq.carrier().fibers(), &[1]);
        assert_eq!(sq.labels(), &[vec![0]]);
        let unit = CrossedGSet::unit_object(&w);
        assert_eq!(sigma.tensor(&unit).unwrap(), sigma);
    }

    #[test]
    fn unit_objects() {
        let g = c2();
        let w = Arc::new(GMonoid::conjugation(&g));
        assert_eq!(CrossedGSet::unit_object(&w).labels(), &[vec![0]]);
        let p3 = Arc::new(FiniteGroupoid::pair(3).unwrap());
        let w3 = Arc::new(GMonoid::conjugation(&p3));
        let u = CrossedGSet::unit_object(&w3);
        assert_eq!(u.carrier().fibers(), &[1, 1, 1]);
        CrossedGSet::new(u.carrier().clone(), w3, u.labels().to_vec()).unwrap();
    }

    #[test]
    fn coproducts() {
        let g = c2();
        let w = Arc::new(GMonoid::conjugation(&g));
        let c = point(&w, 1);
        assert_eq!(c.coproduct(&CrossedGSet::empty(&w)).unwrap(), c);
        let two = c.coproduct(&point(&w, 0)).unwrap();
        assert_eq!(two.labels(), &[vec![1, 0]]);
        let other = Arc::new(GMonoid::trivial(&g));
        assert_eq!(c.coproduct(&point(&other, 0)), Err(CrossedError::WeightMismatch));
    }

    #[test]
    fn unitors_are_isomorphisms() {
        let g = c2();
        let w = Arc::new(GMonoid::conjugation(&g));
        let reg = CrossedGSet::trivial_label_embed(&GSet::representable(&g, 0), &w).unwrap();
        let l = StandardCoherence.left_unitor(&reg).unwrap();
        let r = StandardCoherence.right_unitor(&reg).unwrap();
        for m in [&l, &r] {
            m.check().unwrap();
            assert!(m.is_isomorphism());
        }
        let single = point(&w, 1);
        let a = StandardCoherence.associator(&single, &single, &single).unwrap();
        a.check().unwrap();
        assert_eq!(a.components, vec![vec![0]]);
    }

    #[test]
    fn braiding_on_c2_is_not_an_involution() {
        let g = c2();
        let w = Arc::new(GMonoid::conjugation(&g));
        let x = point(&w, 1);
        let y = CrossedGSet::trivial_label_embed(&GSet::representable(&g, 0), &w).unwrap();
        let eta = braiding(&x, &y).unwrap();
        eta.check().unwrap();
        assert!(eta.is_isomorphism());
        let inv = braiding_inverse(&x, &y).unwrap();
        inv.check().unwrap();
        assert_eq!(eta.then(&inv), CrossedMap::identity(&x.tensor(&y).unwrap()));
        assert_eq!(inv.then(&eta), CrossedMap::identity(&y.tensor(&x).unwrap()));
        // η_{Y,X} ∘ η_{X,Y} (x, y) = (x, σ·y)
        let round = eta.then(&braiding(&y, &x).unwrap());
        assert_eq!(round.components, vec![vec![1, 0]]);
    }

    #[test]
    fn braiding_requires_conjugation_weight() {
        let g = c2();
        let w = Arc::new(GMonoid::trivial(&g));
        let x = point(&w, 0);
        assert_eq!(braiding(&x, &x), Err(CrossedError::WeightNotConjugation));
    }

    #[test]
    fn distributor_is_crossed_iso() {
        let g = c2();
        let w = Arc::new(GMonoid::conjugation(&g));
        let x = point(&w, 1);
        let y = CrossedGSet::trivial_label_embed(&GSet::representable(&g, 0), &w).unwrap();
        let d = distributor(&x, &y, &x).unwrap();
        d.check().unwrap();
        assert!(d.is_isomorphism());
    }

    #[test]
    fn hadamard_of_terminal_target() {
        let g = c2();
        let t = GSet::terminal(&g);
        let reg = GSet::representable(&g, 0);
        let a = SliceObject::new(reg.clone(), t.clone(), vec![vec![0, 0]]).unwrap();
        let prod = a.hadamard(&a).unwrap();
        assert_eq!(prod.carrier().fibers(), &[4]);
    }

    #[test]
    fn transport_round_trip() {
        let p2 = FiniteGroupoid::pair(2).unwrap();
        let base = Arc::new(FiniteGroupoid::direct_product(&FiniteGroupoid::from_group(&[vec![0, 1], vec![1, 0]]).unwrap(), &p2));
        let w = Arc::new(GMonoid::conjugation(&base));
        let reg = CrossedGSet::trivial_label_embed(&GSet::representable(&base, 0), &w).unwrap();
        assert_eq!(reg.carrier().total_size(), 4);
        let r = restrict_to_isotropy(&reg, 0).unwrap();
        assert_eq!(r.carrier().total_size(), 2);
        assert!(r.weight().is_conjugation());
        let iso = round_trip_iso(&reg, 0).unwrap();
        assert!(iso.is_isomorphism());
        let again = restrict_to_isotropy(&induce_from_isotropy(&r, &w, 0).unwrap(), 0).unwrap();
        assert_eq!(again, r);
    }
}
