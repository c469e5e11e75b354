//! Burnside-type rings as explicit integer presentations, ring homomorphisms
//! between them, and the comparison maps between crossed Burnside rings.
//!
//! A presentation stores `c[i][j][k]` with `e_i·e_j = Σ_k c[i][j][k] e_k`
//! in a dense table. All arithmetic is checked; overflow is an error.

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::classify::{self, BasisCatalog, ClassifyError};
use crate::crossed::{self, CrossedError, CrossedGSet, SliceObject};
use crate::groupoid::{FiniteGroupoid, GroupoidError, MorphismId, ObjectId};
use crate::gset::{GMonoid, GSet, GSetError};
use crate::subgroups;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("integer overflow in ring arithmetic")]
    Overflow,
    #[error("elements belong to different rings")]
    RingMismatch,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
    #[error("negative structure constant c[{i}][{j}][{k}]")]
    Negative { i: usize, j: usize, k: usize },
    #[error("associativity fails on basis triple ({i}, {j}, {k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("unit vector is not a two-sided identity on basis element {i}")]
    NotUnital { i: usize },
    #[error("a transitive G-set matched no plain basis entry")]
    UnmatchedOrbit,
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Crossed(#[from] CrossedError),
    #[error(transparent)]
    GSet(#[from] GSetError),
    #[error(transparent)]
    Groupoid(#[from] GroupoidError),
}

/// Description of a basis element for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisLabel {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factor: Option<usize>,
    pub component: ObjectId,
    pub subgroup: Vec<MorphismId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<usize>,
    pub carrier_size: usize,
}

impl From<&classify::BasisEntry> for BasisLabel {
    fn from(e: &classify::BasisEntry) -> Self {
        Self {
            factor: None,
            component: e.component,
            subgroup: e.subgroup.clone(),
            label: Some(e.label),
            carrier_size: e.carrier_size,
        }
    }
}

fn to_i64(v: u64) -> Result<i64, RingError> {
    i64::try_from(v).map_err(|_| RingError::Overflow)
}

fn add(a: i64, b: i64) -> Result<i64, RingError> {
    a.checked_add(b).ok_or(RingError::Overflow)
}

fn mul(a: i64, b: i64) -> Result<i64, RingError> {
    a.checked_mul(b).ok_or(RingError::Overflow)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPresentation {
    dim: usize,
    basis: Vec<BasisLabel>,
    table: Vec<i64>,
    unit: Vec<i64>,
}

impl RingPresentation {
    /// Validates non-negativity, associativity and the unit law.
    pub fn new(basis: Vec<BasisLabel>, table: Vec<i64>, unit: Vec<i64>) -> Result<Self, RingError> {
        let dim = basis.len();
        if table.len() != dim * dim * dim {
            return Err(RingError::DimMismatch {
                expected: dim * dim * dim,
                got: table.len(),
            });
        }
        if unit.len() != dim {
            return Err(RingError::DimMismatch {
                expected: dim,
                got: unit.len(),
            });
        }
        let ring = Self { dim, basis, table, unit };
        ring.check()?;
        Ok(ring)
    }

    pub fn check(&self) -> Result<(), RingError> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    if self.c(i, j, k) < 0 {
                        return Err(RingError::Negative { i, j, k });
                    }
                }
            }
        }
        for i in 0..d {
            let e = self.basis_vector(i);
            if self.mul(&self.unit, &e)? != e || self.mul(&e, &self.unit)? != e {
                return Err(RingError::NotUnital { i });
            }
        }
        // (e_i e_j) e_k against e_i (e_j e_k), walking only nonzero constants
        let nz: Vec<Vec<(usize, i64)>> = self
            .table
            .chunks(d)
            .map(|row| row.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| (k, c)).collect())
            .collect();
        let (mut lhs, mut rhs) = (vec![0i64; d], vec![0i64; d]);
        let accumulate = |acc: &mut [i64], outer: &[(usize, i64)], inner: &dyn Fn(usize) -> usize| -> Result<(), RingError> {
            for &(l, a) in outer {
                for &(m, b) in &nz[inner(l)] {
                    acc[m] = a.checked_mul(b).and_then(|p| acc[m].checked_add(p)).ok_or(RingError::Overflow)?;
                }
            }
            Ok(())
        };
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    lhs.fill(0);
                    rhs.fill(0);
                    accumulate(&mut lhs, &nz[i * d + j], &|l| l * d + k)?;
                    accumulate(&mut rhs, &nz[j * d + k], &|l| i * d + l)?;
                    if lhs != rhs {
                        return Err(RingError::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> &[BasisLabel] {
        &self.basis
    }

    pub fn unit(&self) -> &[i64] {
        &self.unit
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> i64 {
        self.table[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `e_i·e_j`.
    pub fn row(&self, i: usize, j: usize) -> &[i64] {
        let start = (i * self.dim + j) * self.dim;
        &self.table[start..start + self.dim]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Result<Vec<i64>, RingError> {
        self.check_len(a)?;
        self.check_len(b)?;
        a.iter().zip(b).map(|(&x, &y)| add(x, y)).collect()
    }

    pub fn mul(&self, a: &[i64], b: &[i64]) -> Result<Vec<i64>, RingError> {
        self.check_len(a)?;
        self.check_len(b)?;
        let mut out = vec![0i64; self.dim];
        for (i, &x) in a.iter().enumerate().filter(|(_, &x)| x != 0) {
            for (j, &y) in b.iter().enumerate().filter(|(_, &y)| y != 0) {
                let xy = mul(x, y)?;
                for (k, &c) in self.row(i, j).iter().enumerate() {
                    if c != 0 {
                        out[k] = add(out[k], mul(xy, c)?)?;
                    }
                }
            }
        }
        Ok(out)
    }

    fn check_len(&self, v: &[i64]) -> Result<(), RingError> {
        if v.len() != self.dim {
            return Err(RingError::DimMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        Ok(())
    }

    /// First `(i, j, k)` with `c[i][j][k] ≠ c[j][i][k]`.
    pub fn commutativity_failure(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim;
        (0..d)
            .flat_map(|i| (0..d).flat_map(move |j| (0..d).map(move |k| (i, j, k))))
            .find(|&(i, j, k)| self.c(i, j, k) != self.c(j, i, k))
    }

    /// Block-diagonal product of rings; basis labels record their factor.
    pub fn direct_product(factors: &[RingPresentation]) -> Result<RingPresentation, RingError> {
        let dim: usize = factors.iter().map(|f| f.dim).sum();
        let mut table = vec![0i64; dim * dim * dim];
        let mut basis = Vec::with_capacity(dim);
        let mut unit = Vec::with_capacity(dim);
        let mut off = 0;
        for (n, f) in factors.iter().enumerate() {
            for i in 0..f.dim {
                for j in 0..f.dim {
                    for k in 0..f.dim {
                        table[((off + i) * dim + off + j) * dim + off + k] = f.c(i, j, k);
                    }
                }
            }
            basis.extend(f.basis.iter().map(|b| BasisLabel {
                factor: Some(n),
                ..b.clone()
            }));
            unit.extend_from_slice(&f.unit);
            off += f.dim;
        }
        RingPresentation::new(basis, table, unit)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let d = self.dim;
        let table: Vec<Vec<[i64; 2]>> = (0..d * d)
            .map(|ij| {
                let (i, j) = (ij / d, ij % d);
                self.row(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(k, &c)| [k as i64, c])
                    .collect()
            })
            .collect();
        serde_json::json!({ "dim": d, "basis": self.basis, "unit": self.unit, "table": table })
    }
}

/// An element of a presented ring.
#[derive(Clone, Debug)]
pub struct RingElement {
    ring: Arc<RingPresentation>,
    coords: Vec<i64>,
}

impl RingElement {
    pub fn new(ring: &Arc<RingPresentation>, coords: Vec<i64>) -> Result<Self, RingError> {
        ring.check_len(&coords)?;
        Ok(Self {
            ring: Arc::clone(ring),
            coords,
        })
    }

    pub fn zero(ring: &Arc<RingPresentation>) -> Self {
        Self {
            ring: Arc::clone(ring),
            coords: vec![0; ring.dim],
        }
    }

    pub fn one(ring: &Arc<RingPresentation>) -> Self {
        Self {
            ring: Arc::clone(ring),
            coords: ring.unit.clone(),
        }
    }

    pub fn basis(ring: &Arc<RingPresentation>, i: usize) -> Self {
        Self {
            ring: Arc::clone(ring),
            coords: ring.basis_vector(i),
        }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    fn same_ring(&self, other: &RingElement) -> Result<(), RingError> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(RingError::RingMismatch)
        }
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.same_ring(other)?;
        Ok(Self {
            ring: Arc::clone(&self.ring),
            coords: self.ring.add(&self.coords, &other.coords)?,
        })
    }

    pub fn mul(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.same_ring(other)?;
        Ok(Self {
            ring: Arc::clone(&self.ring),
            coords: self.ring.mul(&self.coords, &other.coords)?,
        })
    }

    pub fn ring_eq(&self, other: &RingElement) -> Result<bool, RingError> {
        self.same_ring(other)?;
        Ok(self.coords == other.coords)
    }
}

/// Rank over ℚ by fraction-free elimination.
pub fn rank(matrix: &[Vec<i64>]) -> Result<usize, RingError> {
    let mut m: Vec<Vec<i128>> = matrix.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = m[rank][col]
                    .checked_mul(m[r][c])
                    .zip(m[r][col].checked_mul(m[rank][c]))
                    .and_then(|(a, b)| a.checked_sub(b))
                    .ok_or(RingError::Overflow)?;
                m[r][c] = v / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
    }
    Ok(rank)
}

/// Determinant of a square matrix by fraction-free elimination.
pub fn determinant(matrix: &[Vec<i64>]) -> Result<i128, RingError> {
    let n = matrix.len();
    let mut m: Vec<Vec<i128>> = matrix.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let mut sign = 1;
    let mut prev: i128 = 1;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| m[r][k] != 0) else {
            return Ok(0);
        };
        if p != k {
            m.swap(k, p);
            sign = -sign;
        }
        for r in k + 1..n {
            for c in k + 1..n {
                let v = m[k][k]
                    .checked_mul(m[r][c])
                    .zip(m[r][k].checked_mul(m[k][c]))
                    .and_then(|(a, b)| a.checked_sub(b))
                    .ok_or(RingError::Overflow)?;
                m[r][c] = v / prev;
            }
        }
        prev = m[k][k];
    }
    Ok(if n == 0 { 1 } else { sign * m[n - 1][n - 1] })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HomVerification {
    pub unital: bool,
    pub multiplicative: bool,
    pub injective: bool,
    pub bijective: bool,
    /// Target index of each source basis element when the matrix is a
    /// permutation matrix.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub permutation: Option<Vec<usize>>,
    /// Whether `c_src[i][j][k] = c_tgt[p i][p j][p k]` under that permutation.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constants_match: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

impl HomVerification {
    pub fn is_isomorphism(&self) -> bool {
        self.unital && self.multiplicative && self.bijective
    }
}

/// A ℤ-linear map between presented rings; `matrix` is `dim_target × dim_source`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingHom {
    pub source: Arc<RingPresentation>,
    pub target: Arc<RingPresentation>,
    pub matrix: Vec<Vec<i64>>,
}

impl RingHom {
    /// Builds a map from the images of the source basis vectors.
    pub fn from_columns(source: Arc<RingPresentation>, target: Arc<RingPresentation>, columns: &[Vec<i64>]) -> Result<Self, RingError> {
        if columns.len() != source.dim {
            return Err(RingError::DimMismatch {
                expected: source.dim,
                got: columns.len(),
            });
        }
        for c in columns {
            target.check_len(c)?;
        }
        let matrix = (0..target.dim).map(|r| columns.iter().map(|c| c[r]).collect()).collect();
        Ok(Self { source, target, matrix })
    }

    pub fn apply(&self, v: &[i64]) -> Result<Vec<i64>, RingError> {
        self.source.check_len(v)?;
        self.matrix
            .iter()
            .map(|row| row.iter().zip(v).try_fold(0i64, |acc, (&a, &b)| add(acc, mul(a, b)?)))
            .collect()
    }

    fn column(&self, j: usize) -> Vec<i64> {
        self.matrix.iter().map(|r| r[j]).collect()
    }

    fn as_permutation(&self) -> Option<Vec<usize>> {
        if self.source.dim != self.target.dim {
            return None;
        }
        let mut seen = vec![false; self.target.dim];
        (0..self.source.dim)
            .map(|j| {
                let col = self.column(j);
                let ones: Vec<usize> = (0..col.len()).filter(|&r| col[r] == 1).collect();
                let nonzero = col.iter().filter(|&&v| v != 0).count();
                match ones.as_slice() {
                    [r] if nonzero == 1 && !std::mem::replace(&mut seen[*r], true) => Some(*r),
                    _ => None,
                }
            })
            .collect()
    }

    /// Exhaustive check on all basis pairs.
    pub fn verify(&self) -> Result<HomVerification, RingError> {
        let (s, t) = (&self.source, &self.target);
        let mut report = HomVerification {
            unital: self.apply(&s.unit)? == t.unit,
            multiplicative: true,
            ..Default::default()
        };
        if !report.unital {
            report.failure = Some("unit is not mapped to unit".into());
        }
        let images: Vec<Vec<i64>> = (0..s.dim).map(|j| self.column(j)).collect();
        'outer: for i in 0..s.dim {
            for j in 0..s.dim {
                let lhs = self.apply(s.row(i, j))?;
                let rhs = t.mul(&images[i], &images[j])?;
                if lhs != rhs {
                    report.multiplicative = false;
                    report.failure.get_or_insert(format!("not multiplicative on basis pair ({i}, {j})"));
                    break 'outer;
                }
            }
        }
        report.injective = rank(&self.matrix)? == s.dim;
        report.bijective = s.dim == t.dim && determinant(&self.matrix)?.abs() == 1;
        if let Some(p) = self.as_permutation() {
            let d = s.dim;
            let matches = (0..d)
                .all(|i| (0..d).all(|j| (0..d).all(|k| s.c(i, j, k) == t.c(p[i], p[j], p[k]))));
            report.constants_match = Some(matches);
            report.permutation = Some(p);
        }
        Ok(report)
    }

    pub fn to_json(&self) -> Result<serde_json::Value, RingError> {
        let v = self.verify()?;
        Ok(serde_json::json!({
            "matrix": self.matrix,
            "verified": {
                "unital": v.unital,
                "multiplicative": v.multiplicative,
                "injective": v.injective,
                "bijective": v.bijective,
            },
        }))
    }
}

/// The transitive G-sets `𝒢(r, -)/H`, one per component representative `r`
/// and conjugacy class of subgroups `H ≤ 𝒢_r`. Orbits are identified by
/// finding the class containing the stabilizer of a point over `r`.
#[derive(Clone, Debug)]
pub struct PlainBasis {
    base: Arc<FiniteGroupoid>,
    /// Per entry: component representative and the members of its class.
    classes: Vec<(ObjectId, Vec<Vec<MorphismId>>)>,
    objects: Vec<GSet>,
    labels: Vec<BasisLabel>,
}

impl PlainBasis {
    pub fn new(base: &Arc<FiniteGroupoid>) -> Self {
        let terminal = GSet::terminal(base);
        let mut classes = Vec::new();
        let mut objects = Vec::new();
        let mut labels = Vec::new();
        for r in base.components().representatives() {
            let (group, inclusion) = base.isotropy_group(r).expect("representative exists");
            let to_base = |h: &Vec<usize>| -> Vec<MorphismId> { h.iter().map(|&i| inclusion.morphism_map[i]).collect() };
            for class in subgroups::subgroup_classes(&group) {
                let rep = to_base(&class.representative);
                let carrier = classify::induced(&terminal, r, &rep, 0).carrier().clone();
                labels.push(BasisLabel {
                    factor: None,
                    component: r,
                    subgroup: rep,
                    label: None,
                    carrier_size: carrier.total_size(),
                });
                classes.push((r, class.members.iter().map(to_base).collect()));
                objects.push(carrier);
            }
        }
        Self {
            base: Arc::clone(base),
            classes,
            objects,
            labels,
        }
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn objects(&self) -> &[GSet] {
        &self.objects
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn express(&self, x: &GSet) -> Result<Vec<u64>, RingError> {
        if x.base().as_ref() != self.base.as_ref() {
            return Err(GSetError::BaseMismatch.into());
        }
        let comps = self.base.components();
        let mut coords = vec![0u64; self.len()];
        for orbit in x.orbits() {
            let r = comps.representative_of(orbit[0].0);
            let &(_, a) = orbit.iter().find(|&&(w, _)| w == r).ok_or(RingError::UnmatchedOrbit)?;
            let stab = classify::stabilizer(x, r, a);
            let i = self
                .classes
                .iter()
                .position(|(c, members)| *c == r && members.contains(&stab))
                .ok_or(RingError::UnmatchedOrbit)?;
            coords[i] += 1;
        }
        Ok(coords)
    }
}

fn table_from<F>(dim: usize, mut product: F) -> Result<Vec<i64>, RingError>
where
    F: FnMut(usize, usize) -> Result<Vec<u64>, RingError>,
{
    let mut table = Vec::with_capacity(dim * dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            for v in product(i, j)? {
                table.push(to_i64(v)?);
            }
        }
    }
    Ok(table)
}

fn to_coords(v: Vec<u64>) -> Result<Vec<i64>, RingError> {
    v.into_iter().map(to_i64).collect()
}

/// `B(𝒢)`: transitive G-sets under disjoint union and cartesian product.
pub fn burnside_ring(base: &Arc<FiniteGroupoid>) -> Result<(RingPresentation, PlainBasis), RingError> {
    let basis = PlainBasis::new(base);
    let objs = basis.objects();
    let table = table_from(basis.len(), |i, j| basis.express(&objs[i].product(&objs[j])?))?;
    let unit = to_coords(basis.express(&GSet::terminal(base))?)?;
    let ring = RingPresentation::new(basis.labels.clone(), table, unit)?;
    Ok((ring, basis))
}

/// `B_Had(𝒢, X)`: transitive objects over `X` under the fiber product.
pub fn hadamard_ring(x: &GSet) -> Result<(RingPresentation, BasisCatalog), RingError> {
    let catalog = classify::enumerate_slice_basis(x);
    let objs = catalog.objects();
    let table = table_from(catalog.len(), |i, j| {
        Ok(classify::express_in_basis(&objs[i].hadamard(&objs[j])?, &catalog)?)
    })?;
    let unit = to_coords(classify::express_in_basis(&SliceObject::identity_of(x), &catalog)?)?;
    let basis = catalog.entries().iter().map(BasisLabel::from).collect();
    let ring = RingPresentation::new(basis, table, unit)?;
    Ok((ring, catalog))
}

/// Catalog entries as crossed G-sets.
pub fn crossed_basis(catalog: &BasisCatalog, weight: &Arc<GMonoid>) -> Result<Vec<CrossedGSet>, RingError> {
    catalog
        .objects()
        .iter()
        .map(|o| CrossedGSet::from_slice(o.clone(), Arc::clone(weight)).map_err(Into::into))
        .collect()
}

/// `B^c(𝒢, S)`: transitive crossed G-sets under disjoint union and tensor.
pub fn crossed_burnside_ring(weight: &Arc<GMonoid>) -> Result<(RingPresentation, BasisCatalog), RingError> {
    let catalog = classify::enumerate_basis(weight);
    let objs = crossed_basis(&catalog, weight)?;
    let table = table_from(catalog.len(), |i, j| {
        Ok(classify::express_in_basis(objs[i].tensor(&objs[j])?.as_slice(), &catalog)?)
    })?;
    let unit = to_coords(classify::express_in_basis(CrossedGSet::unit_object(weight).as_slice(), &catalog)?)?;
    let basis = catalog.entries().iter().map(BasisLabel::from).collect();
    let ring = RingPresentation::new(basis, table, unit)?;
    Ok((ring, catalog))
}

/// `B(𝒢) → B^c(𝒢, S)`, sending a G-set to itself with unit labels.
pub fn embedding_hom(weight: &Arc<GMonoid>) -> Result<RingHom, RingError> {
    let (plain, basis) = burnside_ring(weight.base())?;
    let (crossed, catalog) = crossed_burnside_ring(weight)?;
    let columns = basis
        .objects()
        .iter()
        .map(|x| {
            let c = CrossedGSet::trivial_label_embed(x, weight)?;
            to_coords(classify::express_in_basis(c.as_slice(), &catalog)?)
        })
        .collect::<Result<Vec<_>, RingError>>()?;
    RingHom::from_columns(Arc::new(plain), Arc::new(crossed), &columns)
}

/// `B^c(𝒢, S) → B^c(𝒢_z, S|𝒢_z)` by restriction along the isotropy inclusion,
/// for connected `𝒢`.
pub fn connected_reduction_hom(weight: &Arc<GMonoid>, z: ObjectId) -> Result<RingHom, RingError> {
    let base = weight.base();
    if !base.is_connected() {
        return Err(GroupoidError::NotConnected.into());
    }
    let (_, inclusion) = base.isotropy_group(z)?;
    let local = Arc::new(weight.pullback(&inclusion)?);
    let (source, catalog) = crossed_burnside_ring(weight)?;
    let (target, local_catalog) = crossed_burnside_ring(&local)?;
    let columns = crossed_basis(&catalog, weight)?
        .iter()
        .map(|c| {
            let r = crossed::restrict_to_isotropy(c, z)?;
            to_coords(classify::express_in_basis(r.as_slice(), &local_catalog)?)
        })
        .collect::<Result<Vec<_>, RingError>>()?;
    RingHom::from_columns(Arc::new(source), Arc::new(target), &columns)
}

/// `B^c(𝒢, S) → ∏_r B^c(𝒢_r, S|𝒢_r)` over component representatives `r`,
/// restricting along each isotropy inclusion.
pub fn decomposition_hom(weight: &Arc<GMonoid>) -> Result<RingHom, RingError> {
    let base = weight.base();
    let (source, catalog) = crossed_burnside_ring(weight)?;
    let mut factors = Vec::new();
    let mut blocks = Vec::new();
    for r in base.components().representatives() {
        let (_, inclusion) = base.isotropy_group(r)?;
        let local = Arc::new(weight.pullback(&inclusion)?);
        let (ring, cat) = crossed_burnside_ring(&local)?;
        factors.push(ring);
        blocks.push((inclusion, local, cat));
    }
    let target = RingPresentation::direct_product(&factors)?;
    let columns = crossed_basis(&catalog, weight)?
        .iter()
        .map(|c| {
            let mut col = Vec::with_capacity(target.dim());
            for (inclusion, local, cat) in &blocks {
                let restricted = CrossedGSet::from_slice(c.as_slice().pullback(inclusion)?, Arc::clone(local))?;
                col.extend(to_coords(classify::express_in_basis(restricted.as_slice(), cat)?)?);
            }
            Ok(col)
        })
        .collect::<Result<Vec<_>, RingError>>()?;
    RingHom::from_columns(Arc::new(source), Arc::new(target), &columns)
}

/// Basis invariants preserved by any structure-constant-preserving bijection.
fn basis_invariant(r: &RingPresentation, i: usize) -> (i64, Vec<i64>, Vec<i64>) {
    let d = r.dim;
    let mut sq = r.row(i, i).to_vec();
    sq.sort_unstable();
    let mut all: Vec<i64> = (0..d)
        .flat_map(|j| (0..d).flat_map(move |k| [r.c(i, j, k), r.c(j, i, k), r.c(j, k, i)]))
        .collect();
    all.sort_unstable();
    (r.unit[i], sq, all)
}

/// A permutation `p` of basis indices with `c_a[i][j][k] = c_b[p i][p j][p k]`
/// and matching units, found by backtracking over invariant-compatible choices.
pub fn find_basis_isomorphism(a: &RingPresentation, b: &RingPresentation) -> Option<Vec<usize>> {
    if a.dim != b.dim {
        return None;
    }
    let d = a.dim;
    let inv_a: Vec<_> = (0..d).map(|i| basis_invariant(a, i)).collect();
    let inv_b: Vec<_> = (0..d).map(|i| basis_invariant(b, i)).collect();
    let mut p = Vec::with_capacity(d);
    let mut used = vec![false; d];

    fn consistent(a: &RingPresentation, b: &RingPresentation, p: &[usize]) -> bool {
        let n = p.len() - 1;
        (0..=n).all(|u| {
            (0..=n).all(|v| {
                (0..=n).all(|w| (u != n && v != n && w != n) || a.c(u, v, w) == b.c(p[u], p[v], p[w]))
            })
        })
    }

    fn go(
        a: &RingPresentation,
        b: &RingPresentation,
        inv_a: &[(i64, Vec<i64>, Vec<i64>)],
        inv_b: &[(i64, Vec<i64>, Vec<i64>)],
        p: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let i = p.len();
        if i == a.dim {
            return true;
        }
        for cand in 0..b.dim {
            if used[cand] || inv_a[i] != inv_b[cand] {
                continue;
            }
            p.push(cand);
            used[cand] = true;
            if consistent(a, b, p) && go(a, b, inv_a, inv_b, p, used) {
                return true;
            }
            used[cand] = false;
            p.pop();
        }
        false
    }

    go(a, b, &inv_a, &inv_b, &mut p, &mut used).then_some(p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActionIsoReport {
    pub dim_action: usize,
    pub dim_hadamard: usize,
    pub witness: Option<Vec<usize>>,
}

impl ActionIsoReport {
    pub fn succeeded(&self) -> bool {
        self.witness.is_some()
    }
}

/// Compares `B(𝒢⋊X)` with `B_Had(𝒢, X)` by searching for a basis bijection
/// that matches structure constants.
pub fn action_groupoid_iso_check(x: &GSet) -> Result<(ActionIsoReport, RingPresentation, RingPresentation), RingError> {
    let action = x.action_groupoid()?;
    let (plain, _) = burnside_ring(&action.groupoid)?;
    let (had, _) = hadamard_ring(x)?;
    let report = ActionIsoReport {
        dim_action: plain.dim,
        dim_hadamard: had.dim,
        witness: find_basis_isomorphism(&plain, &had),
    };
    Ok((report, plain, had))
}
