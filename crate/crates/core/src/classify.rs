//! Isomorphism testing, transitive decomposition, and enumeration of the
//! transitive basis for objects over a fixed G-set.
//!
//! Everything here works on [`SliceObject`]s, which covers crossed G-sets
//! (target `S̄`), the Hadamard setting (target an arbitrary `X`) and plain
//! G-sets (target the terminal G-set).
//!
//! A transitive object supported on the component of `r` is determined up
//! to isomorphism by the pair `(H, s)` of the stabilizer `H ≤ 𝒢_r` of a point
//! `a` over `r` and its label `s = θ(a)`, where `s` is `H`-fixed; moving `a`
//! within its fiber conjugates the pair. The catalog key of such an object is
//! the least pair in its conjugation orbit.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::crossed::{CrossedError, CrossedGSet, CrossedMap, SliceObject};
use crate::groupoid::{FiniteGroupoid, MorphismId, ObjectId};
use crate::gset::{GMonoid, GSet};
use crate::subgroups;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("objects live over different targets")]
    TargetMismatch,
    #[error("size bound {bound} is too small: transitive carriers reach size {required}")]
    BoundTooSmall { bound: usize, required: usize },
    #[error("transitive piece {piece} matches no catalog entry")]
    UnmatchedPiece { piece: usize },
    #[error(transparent)]
    Crossed(#[from] CrossedError),
}

/// Per-object isomorphism invariants: fiber size, sorted labels, and the
/// number of fixed points of each loop.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint {
    pub fibers: Vec<(usize, Vec<usize>, Vec<usize>)>,
}

impl Fingerprint {
    pub fn of(obj: &SliceObject) -> Self {
        let carrier = obj.carrier();
        let base = carrier.base();
        let fibers = (0..base.object_count())
            .map(|x| {
                let mut labels = obj.labels()[x].clone();
                labels.sort_unstable();
                let marks = base
                    .loops(x)
                    .iter()
                    .map(|&g| (0..carrier.fiber(x)).filter(|&a| carrier.act(g, a) == a).count())
                    .collect();
                (carrier.fiber(x), labels, marks)
            })
            .collect();
        Self { fibers }
    }
}

/// Extends `(x, a) ↦ (x, b)` along every morphism out of `x`. Returns `false`
/// if the extension is not a well-defined injective label-preserving map or
/// hits an element of `b`'s side that is already taken.
fn propagate(
    a_obj: &SliceObject,
    b_obj: &SliceObject,
    x: ObjectId,
    a: usize,
    b: usize,
    map: &mut [Vec<Option<usize>>],
    taken: &mut [Vec<bool>],
) -> bool {
    let base = a_obj.carrier().base();
    let mut written: Vec<(ObjectId, usize)> = Vec::new();
    let mut ok = true;
    for g in base.out_of(x) {
        let w = base.cod(g);
        let (src, dst) = (a_obj.carrier().act(g, a), b_obj.carrier().act(g, b));
        match map[w][src] {
            Some(v) if v == dst => {}
            Some(_) => ok = false,
            None => {
                if taken[w][dst] || a_obj.label(w, src) != b_obj.label(w, dst) {
                    ok = false;
                } else {
                    map[w][src] = Some(dst);
                    taken[w][dst] = true;
                    written.push((w, src));
                }
            }
        }
        if !ok {
            break;
        }
    }
    if !ok {
        for (w, src) in written {
            let dst = map[w][src].take().expect("written above");
            taken[w][dst] = false;
        }
    }
    ok
}

/// A label-preserving natural bijection `a → b`, or `None` if there is none.
///
/// Orbits of `a` are matched one at a time: the least element of each orbit
/// is sent to every compatible free element of `b` in ascending order until
/// the extension along all morphisms succeeds. Matching orbits greedily is
/// complete because isomorphism of orbits is an equivalence relation.
pub fn slice_isomorphism(a: &SliceObject, b: &SliceObject) -> Result<Option<Vec<Vec<usize>>>, ClassifyError> {
    if a.target() != b.target() {
        return Err(ClassifyError::TargetMismatch);
    }
    if Fingerprint::of(a) != Fingerprint::of(b) {
        return Ok(None);
    }
    let fibers = a.carrier().fibers();
    let mut map: Vec<Vec<Option<usize>>> = fibers.iter().map(|&n| vec![None; n]).collect();
    let mut taken: Vec<Vec<bool>> = fibers.iter().map(|&n| vec![false; n]).collect();
    for orbit in a.carrier().orbits() {
        let (x, e) = orbit[0];
        let matched = (0..fibers[x])
            .filter(|&f| a.label(x, e) == b.label(x, f))
            .any(|f| !taken[x][f] && propagate(a, b, x, e, f, &mut map, &mut taken));
        if !matched {
            return Ok(None);
        }
    }
    Ok(Some(
        map.into_iter()
            .map(|fiber| fiber.into_iter().map(|v| v.expect("every orbit matched")).collect())
            .collect(),
    ))
}

/// An isomorphism of crossed G-sets, if one exists.
pub fn are_isomorphic(c1: &CrossedGSet, c2: &CrossedGSet) -> Result<Option<CrossedMap>, ClassifyError> {
    if c1.weight() != c2.weight() {
        return Err(CrossedError::WeightMismatch.into());
    }
    Ok(slice_isomorphism(c1.as_slice(), c2.as_slice())?.map(|components| CrossedMap {
        source: c1.clone(),
        target: c2.clone(),
        components,
    }))
}

/// Sorted stabilizer of `a ∈ X(x)` as loop ids at `x`.
pub fn stabilizer(carrier: &GSet, x: ObjectId, a: usize) -> Vec<MorphismId> {
    carrier
        .base()
        .loops(x)
        .iter()
        .copied()
        .filter(|&g| carrier.act(g, a) == a)
        .collect()
}

/// Least `(gHg⁻¹, T(g)(s))` over loops `g` at `r`.
pub fn canonical_pair(base: &FiniteGroupoid, target: &GSet, r: ObjectId, h: &[MorphismId], s: usize) -> (Vec<MorphismId>, usize) {
    base.loops(r)
        .iter()
        .map(|&g| {
            let gi = base.inverse(g);
            let mut conj: Vec<MorphismId> = h.iter().map(|&k| base.comp(g, base.comp(k, gi))).collect();
            conj.sort_unstable();
            (conj, target.act(g, s))
        })
        .min()
        .expect("a group has at least one element")
}

/// A transitive piece of a slice object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitivePiece {
    pub component_rep: ObjectId,
    pub piece: SliceObject,
    /// Inclusion of the piece into the decomposed object.
    pub embedding: Vec<Vec<usize>>,
    /// Canonical `(H, s)` with `H ≤ 𝒢_rep` and `s` fixed by `H`.
    pub standard_pair: (Vec<MorphismId>, usize),
}

/// One piece per orbit of the carrier, ordered by least element.
pub fn transitive_decomposition(obj: &SliceObject) -> Vec<TransitivePiece> {
    let base = obj.carrier().base();
    let comps = base.components();
    obj.carrier()
        .orbits()
        .iter()
        .map(|orbit| {
            let (piece, embedding) = obj.restrict_to(orbit);
            let r = comps.representative_of(orbit[0].0);
            let standard_pair = (0..piece.carrier().fiber(r))
                .map(|a| (stabilizer(piece.carrier(), r, a), piece.label(r, a)))
                .min()
                .expect("a transitive piece meets every object of its component");
            TransitivePiece {
                component_rep: r,
                piece,
                embedding,
                standard_pair,
            }
        })
        .collect()
}

/// The transitive object induced from `(H, s)` at `r`: over `w` its elements
/// are the cosets `𝒢(r, w)/H`, listed by least member, and `[g]` carries the
/// label `T(g)(s)`.
pub fn induced(target: &GSet, r: ObjectId, h: &[MorphismId], s: usize) -> SliceObject {
    let base = target.base();
    let n = base.object_count();
    let mut coset_of = vec![usize::MAX; base.morphism_count()];
    let mut reps: Vec<Vec<MorphismId>> = vec![Vec::new(); n];
    for (w, reps_w) in reps.iter_mut().enumerate() {
        for &g in base.hom(r, w) {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let idx = reps_w.len();
            reps_w.push(g);
            for &k in h {
                coset_of[base.comp(g, k)] = idx;
            }
        }
    }
    let action = (0..base.morphism_count())
        .map(|k| {
            let dom = base.dom(k);
            reps[dom].iter().map(|&g| coset_of[base.comp(k, g)]).collect()
        })
        .collect();
    let labels = reps
        .iter()
        .map(|rs| rs.iter().map(|&g| target.act(g, s)).collect())
        .collect();
    let carrier = GSet::from_parts(Arc::clone(base), reps.iter().map(Vec::len).collect(), action);
    SliceObject::from_parts(carrier, target.clone(), labels)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisEntry {
    pub component: ObjectId,
    pub subgroup: Vec<MorphismId>,
    pub label: usize,
    pub carrier_size: usize,
}

/// Representatives of the isomorphism classes of transitive objects over a
/// target G-set, in the order (component, subgroup class, label).
#[derive(Clone, Debug)]
pub struct BasisCatalog {
    target: GSet,
    entries: Vec<BasisEntry>,
    objects: Vec<SliceObject>,
    index: BTreeMap<(ObjectId, Vec<MorphismId>, usize), usize>,
}

impl BasisCatalog {
    pub fn target(&self) -> &GSet {
        &self.target
    }

    pub fn base(&self) -> &Arc<FiniteGroupoid> {
        self.target.base()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[BasisEntry] {
        &self.entries
    }

    pub fn objects(&self) -> &[SliceObject] {
        &self.objects
    }

    pub fn object(&self, i: usize) -> &SliceObject {
        &self.objects[i]
    }

    /// Index of the entry isomorphic to a transitive piece. The key lookup is
    /// confirmed with an explicit isomorphism.
    pub fn lookup(&self, piece: &TransitivePiece) -> Option<usize> {
        let (h, s) = &piece.standard_pair;
        let i = *self.index.get(&(piece.component_rep, h.clone(), *s))?;
        match slice_isomorphism(&piece.piece, &self.objects[i]) {
            Ok(Some(_)) => Some(i),
            _ => None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "entries": self.entries })
    }
}

/// Enumerates the transitive basis of objects over `target`.
pub fn enumerate_slice_basis(target: &GSet) -> BasisCatalog {
    let base = target.base();
    let mut entries = Vec::new();
    let mut objects = Vec::new();
    let mut index = BTreeMap::new();
    for r in base.components().representatives() {
        let (group, inclusion) = base.isotropy_group(r).expect("representative exists");
        for class in subgroups::subgroup_classes(&group) {
            let h: Vec<MorphismId> = class.representative.iter().map(|&i| inclusion.morphism_map[i]).collect();
            let mut labels: Vec<usize> = (0..target.fiber(r))
                .filter(|&s| h.iter().all(|&k| target.act(k, s) == s))
                .filter(|&s| canonical_pair(base, target, r, &h, s) == (h.clone(), s))
                .collect();
            labels.sort_unstable();
            for s in labels {
                let obj = induced(target, r, &h, s);
                index.insert((r, h.clone(), s), entries.len());
                entries.push(BasisEntry {
                    component: r,
                    subgroup: h.clone(),
                    label: s,
                    carrier_size: obj.carrier().total_size(),
                });
                objects.push(obj);
            }
        }
    }
    BasisCatalog {
        target: target.clone(),
        entries,
        objects,
        index,
    }
}

/// The transitive basis of crossed G-sets over `weight`.
pub fn enumerate_basis(weight: &GMonoid) -> BasisCatalog {
    enumerate_slice_basis(weight.underlying())
}

/// Multiplicity of each catalog entry among the transitive pieces of `obj`.
pub fn express_in_basis(obj: &SliceObject, catalog: &BasisCatalog) -> Result<Vec<u64>, ClassifyError> {
    if obj.target() != catalog.target() {
        return Err(ClassifyError::TargetMismatch);
    }
    let mut coords = vec![0u64; catalog.len()];
    for (i, piece) in transitive_decomposition(obj).iter().enumerate() {
        let k = catalog.lookup(piece).ok_or(ClassifyError::UnmatchedPiece { piece: i })?;
        coords[k] += 1;
    }
    Ok(coords)
}

/// The coproduct of catalog entries with the given multiplicities.
pub fn reconstruct(coords: &[u64], catalog: &BasisCatalog) -> SliceObject {
    let empty_carrier = GSet::empty(catalog.base());
    let empty_labels = vec![Vec::new(); catalog.base().object_count()];
    let mut acc = SliceObject::from_parts(empty_carrier, catalog.target().clone(), empty_labels);
    for (i, &m) in coords.iter().enumerate() {
        for _ in 0..m {
            acc = acc.coproduct(catalog.object(i)).expect("same target");
        }
    }
    acc
}

/// Fiber-confined partitions of the elements `(w, i)` that are respected by
/// the action, as quotient G-sets.
fn invariant_quotients(rep: &GSet) -> Vec<GSet> {
    let base = rep.base();
    let elems: Vec<(ObjectId, usize)> = (0..base.object_count())
        .flat_map(|w| (0..rep.fiber(w)).map(move |i| (w, i)))
        .collect();
    let mut block_of: Vec<Vec<usize>> = rep.fibers().iter().map(|&n| vec![usize::MAX; n]).collect();
    let mut blocks_in: Vec<usize> = vec![0; base.object_count()];
    let mut out = Vec::new();

    fn invariant(rep: &GSet, block_of: &[Vec<usize>]) -> bool {
        let base = rep.base();
        (0..base.morphism_count()).all(|g| {
            let (dom, cod) = (base.dom(g), base.cod(g));
            let mut image: BTreeMap<usize, usize> = BTreeMap::new();
            (0..rep.fiber(dom)).all(|a| {
                let img = block_of[cod][rep.act(g, a)];
                *image.entry(block_of[dom][a]).or_insert(img) == img
            })
        })
    }

    fn go(
        k: usize,
        elems: &[(ObjectId, usize)],
        rep: &GSet,
        block_of: &mut Vec<Vec<usize>>,
        blocks_in: &mut Vec<usize>,
        out: &mut Vec<GSet>,
    ) {
        if k == elems.len() {
            if invariant(rep, block_of) {
                let base = rep.base();
                let action = (0..base.morphism_count())
                    .map(|g| {
                        let (dom, cod) = (base.dom(g), base.cod(g));
                        let mut img = vec![0; blocks_in[dom]];
                        for a in 0..rep.fiber(dom) {
                            img[block_of[dom][a]] = block_of[cod][rep.act(g, a)];
                        }
                        img
                    })
                    .collect();
                out.push(GSet::from_parts(Arc::clone(base), blocks_in.clone(), action));
            }
            return;
        }
        let (w, i) = elems[k];
        for b in 0..=blocks_in[w] {
            let fresh = b == blocks_in[w];
            block_of[w][i] = b;
            if fresh {
                blocks_in[w] += 1;
            }
            go(k + 1, elems, rep, block_of, blocks_in, out);
            if fresh {
                blocks_in[w] -= 1;
            }
        }
        block_of[w][i] = usize::MAX;
    }

    go(0, &elems, rep, &mut block_of, &mut blocks_in, &mut out);
    out
}

/// Every natural labelling of `carrier` into `target`, by backtracking over
/// elements in `(object, element)` order.
fn natural_labellings(carrier: &GSet, target: &GSet) -> Vec<Vec<Vec<usize>>> {
    let base = carrier.base();
    let elems: Vec<(ObjectId, usize)> = (0..base.object_count())
        .flat_map(|w| (0..carrier.fiber(w)).map(move |i| (w, i)))
        .collect();
    let mut labels: Vec<Vec<Option<usize>>> = carrier.fibers().iter().map(|&n| vec![None; n]).collect();
    let mut out = Vec::new();

    fn go(
        k: usize,
        elems: &[(ObjectId, usize)],
        carrier: &GSet,
        target: &GSet,
        labels: &mut Vec<Vec<Option<usize>>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if k == elems.len() {
            out.push(labels.iter().map(|f| f.iter().map(|v| v.unwrap()).collect()).collect());
            return;
        }
        let (w, a) = elems[k];
        let base = carrier.base();
        for s in 0..target.fiber(w) {
            labels[w][a] = Some(s);
            let consistent = base.out_of(w).all(|g| {
                let (c, img) = (base.cod(g), carrier.act(g, a));
                labels[c][img].is_none_or(|t| t == target.act(g, s))
            });
            if consistent {
                go(k + 1, elems, carrier, target, labels, out);
            }
        }
        labels[w][a] = None;
    }

    go(0, &elems, carrier, target, &mut labels, &mut out);
    out
}

/// Independent enumeration of transitive objects over `target` up to
/// isomorphism: every transitive carrier is a quotient of a representable by
/// a fiber-confined invariant partition, every natural labelling of it is
/// tried, and the survivors are deduplicated with [`slice_isomorphism`].
pub fn brute_force_slice_basis(target: &GSet, size_bound: usize) -> Result<Vec<SliceObject>, ClassifyError> {
    let base = target.base();
    let reps = base.components().representatives();
    let required = reps
        .iter()
        .map(|&r| GSet::representable(base, r).total_size())
        .max()
        .unwrap_or(0);
    if size_bound < required {
        return Err(ClassifyError::BoundTooSmall {
            bound: size_bound,
            required,
        });
    }
    let mut classes: Vec<SliceObject> = Vec::new();
    for r in reps {
        for carrier in invariant_quotients(&GSet::representable(base, r)) {
            if carrier.total_size() > size_bound || !carrier.is_transitive().unwrap_or(false) {
                continue;
            }
            for labels in natural_labellings(&carrier, target) {
                let obj = SliceObject::new(carrier.clone(), target.clone(), labels)?;
                let mut known = false;
                for c in &classes {
                    if slice_isomorphism(c, &obj)?.is_some() {
                        known = true;
                        break;
                    }
                }
                if !known {
                    classes.push(obj);
                }
            }
        }
    }
    Ok(classes)
}

/// [`brute_force_slice_basis`] for crossed G-sets over `weight`.
pub fn brute_force_basis(weight: &Arc<GMonoid>, size_bound: usize) -> Result<Vec<CrossedGSet>, ClassifyError> {
    brute_force_slice_basis(weight.underlying(), size_bound)?
        .into_iter()
        .map(|s| CrossedGSet::from_slice(s, Arc::clone(weight)).map_err(Into::into))
        .collect()
}

/// Pairs each oracle class with the catalog entry it is isomorphic to, using
/// isomorphism search only. `None` unless this is a bijection.
pub fn match_oracle(oracle: &[SliceObject], catalog: &BasisCatalog) -> Result<Option<Vec<usize>>, ClassifyError> {
    if oracle.len() != catalog.len() {
        return Ok(None);
    }
    let mut used = vec![false; catalog.len()];
    let mut matching = Vec::with_capacity(oracle.len());
    for obj in oracle {
        let mut found = None;
        for (i, entry) in catalog.objects().iter().enumerate() {
            if slice_isomorphism(obj, entry)?.is_some() {
                found = Some(i);
                break;
            }
        }
        match found {
            Some(i) if !used[i] => {
                used[i] = true;
                matching.push(i);
            }
            _ => return Ok(None),
        }
    }
    Ok(Some(matching))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2() -> Arc<FiniteGroupoid> {
        Arc::new(FiniteGroupoid::from_group(&[vec![0, 1], vec![1, 0]]).unwrap())
    }

    fn cyclic(n: usize) -> Arc<FiniteGroupoid> {
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Arc::new(FiniteGroupoid::from_group(&table).unwrap())
    }

    fn s3() -> Arc<FiniteGroupoid> {
        Arc::new(FiniteGroupoid::from_perm_gens(&[vec![1, 0, 2], vec![1, 2, 0]]).unwrap())
    }

    #[test]
    fn c2_conjugation_basis() {
        let w = GMonoid::conjugation(&c2());
        let cat = enumerate_basis(&w);
        let pairs: Vec<(usize, usize)> = cat.entries().iter().map(|e| (e.subgroup.len(), e.label)).collect();
        assert_eq!(pairs, vec![(1, 0), (1, 1), (2, 0), (2, 1)]);
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(enumerate_basis(&GMonoid::conjugation(&cyclic(1))).len(), 1);
        assert_eq!(enumerate_basis(&GMonoid::conjugation(&cyclic(3))).len(), 6);
        assert_eq!(enumerate_basis(&GMonoid::conjugation(&s3())).len(), 8);
        assert_eq!(enumerate_basis(&GMonoid::trivial(&s3())).len(), 4);
    }

    #[test]
    fn oracle_agrees_on_small_groups() {
        for g in [cyclic(1), c2(), cyclic(3), s3()] {
            for w in [GMonoid::conjugation(&g), GMonoid::trivial(&g)] {
                let oracle = brute_force_slice_basis(w.underlying(), g.morphism_count()).unwrap();
                let cat = enumerate_basis(&w);
                assert!(match_oracle(&oracle, &cat).unwrap().is_some());
            }
        }
        let w = GMonoid::conjugation(&c2());
        assert_eq!(brute_force_slice_basis(w.underlying(), 2).unwrap().len(), 4);
        assert_eq!(
            brute_force_slice_basis(w.underlying(), 1),
            Err(ClassifyError::BoundTooSmall { bound: 1, required: 2 })
        );
    }

    #[test]
    fn fixed_points_with_different_labels_are_not_isomorphic() {
        let g = c2();
        let w = Arc::new(GMonoid::conjugation(&g));
        let e = CrossedGSet::unit_object(&w);
        let s = CrossedGSet::new(GSet::terminal(&g), w.clone(), vec![vec![1]]).unwrap();
        assert!(are_isomorphic(&e, &s).unwrap().is_none());
        let id = are_isomorphic(&s, &s).unwrap().unwrap();
        assert_eq!(id, CrossedMap::identity(&s));
    }

    #[test]
    fn conjugate_pairs_give_isomorphic_objects() {
        let g = s3();
        let w = GMonoid::conjugation(&g);
        let t = w.underlying();
        let transpositions: Vec<MorphismId> = (1..6).filter(|&k| g.comp(k, k) == 0).collect();
        let (a, b) = (transpositions[0], transpositions[1]);
        let x = induced(t, 0, &[0, a], a);
        let y = induced(t, 0, &[0, b], b);
        let iso = slice_isomorphism(&x, &y).unwrap().unwrap();
        crate::crossed::check_slice_map(&x, &y, &iso).unwrap();
        // (⟨a⟩, a) and (⟨a⟩, e) are not conjugate
        let z = induced(t, 0, &[0, a], 0);
        assert!(slice_isomorphism(&x, &z).unwrap().is_none());
    }

    #[test]
    fn decomposition_and_coordinates() {
        let g = c2();
        let w = Arc::new(GMonoid::conjugation(&g));
        let cat = enumerate_basis(&w);
        let free = CrossedGSet::from_slice(cat.object(0).clone(), w.clone()).unwrap();
        let sq = free.tensor(&free).unwrap();
        assert_eq!(express_in_basis(sq.as_slice(), &cat).unwrap(), vec![2, 0, 0, 0]);
        let pieces = transitive_decomposition(free.as_slice());
        assert_eq!(pieces.len(), 1);
        assert_eq!(pieces[0].standard_pair, (vec![0], 0));
        let empty = CrossedGSet::empty(&w);
        assert!(transitive_decomposition(empty.as_slice()).is_empty());
        let back = reconstruct(&[2, 0, 0, 0], &cat);
        assert!(slice_isomorphism(&back, sq.as_slice()).unwrap().is_some());
    }

    #[test]
    fn unit_over_disconnected_base_has_one_piece_per_component() {
        let (g, _) = FiniteGroupoid::disjoint_union(&[c2(), cyclic(3)]).unwrap();
        let w = Arc::new(GMonoid::conjugation(&g));
        let unit = CrossedGSet::unit_object(&w);
        assert_eq!(transitive_decomposition(unit.as_slice()).len(), 2);
        assert_eq!(enumerate_basis(&w).len(), 10);
    }
}
