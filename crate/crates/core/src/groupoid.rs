//! Finite groupoids as explicit composition tables.
//!
//! Objects and morphisms are dense integer ids. Composition is stored as a
//! flat `m × m` table indexed by `(g, f)` meaning `g ∘ f`, with a sentinel for
//! non-composable pairs. Every constructor in this module returns a value
//! that satisfies the groupoid axioms; [`FiniteGroupoid::validate`] is the
//! entry point for untrusted data.

use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type ObjectId = usize;
pub type MorphismId = usize;

const NONE: usize = usize::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupoidError {
    #[error("a groupoid must have at least one object")]
    EmptyObjectSet,
    #[error("composition is not associative on ({h}, {g}, {f})")]
    NonAssociative {
        h: MorphismId,
        g: MorphismId,
        f: MorphismId,
    },
    #[error("object {object} has no valid identity morphism")]
    MissingIdentity { object: ObjectId },
    #[error("morphism {morphism} has no valid inverse")]
    MissingInverse { morphism: MorphismId },
    #[error("dom/cod mismatch: {detail}")]
    DomCodMismatch { detail: String },
    #[error("composite of {g} after {f} is missing from the table")]
    IncompleteComposition { g: MorphismId, f: MorphismId },
    #[error("unknown object {0}")]
    UnknownObject(ObjectId),
    #[error("unknown morphism {0}")]
    UnknownMorphism(MorphismId),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("groupoid is not connected")]
    NotConnected,
    #[error("disjoint union of an empty list")]
    EmptyUnion,
    #[error("subgroupoid is not wide: identity of object {0} missing")]
    NotWide(ObjectId),
    #[error("morphism set is not a subgroupoid: {0}")]
    NotSubgroupoid(String),
    #[error("functor check failed: {0}")]
    NotAFunctor(String),
    #[error("{0}")]
    NotASubgroup(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Morphism {
    pub dom: ObjectId,
    pub cod: ObjectId,
}

/// Unvalidated groupoid data, as read from a file.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawGroupoid {
    pub objects: usize,
    pub morphisms: Vec<Morphism>,
    /// Triples `(g, f, g∘f)`.
    pub compose: Vec<[MorphismId; 3]>,
    pub identity: Vec<MorphismId>,
    pub inverse: Vec<MorphismId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupoid {
    objects: usize,
    morphisms: Vec<Morphism>,
    table: Vec<usize>,
    identity: Vec<MorphismId>,
    inverse: Vec<MorphismId>,
    // hom[dom * n + cod], ascending
    hom: Vec<Vec<MorphismId>>,
}

impl FiniteGroupoid {
    /// Checks every groupoid axiom exhaustively and returns the validated value.
    pub fn validate(raw: &RawGroupoid) -> Result<Self, GroupoidError> {
        let n = raw.objects;
        if n == 0 {
            return Err(GroupoidError::EmptyObjectSet);
        }
        let m = raw.morphisms.len();
        for (id, mor) in raw.morphisms.iter().enumerate() {
            if mor.dom >= n || mor.cod >= n {
                return Err(GroupoidError::DomCodMismatch {
                    detail: format!("morphism {id} refers to an unknown object"),
                });
            }
        }
        if raw.identity.len() != n {
            return Err(GroupoidError::MissingIdentity {
                object: raw.identity.len().min(n - 1),
            });
        }
        for (x, &e) in raw.identity.iter().enumerate() {
            if e >= m || raw.morphisms[e].dom != x || raw.morphisms[e].cod != x {
                return Err(GroupoidError::MissingIdentity { object: x });
            }
        }
        if raw.inverse.len() != m {
            return Err(GroupoidError::MissingInverse {
                morphism: raw.inverse.len().min(m.saturating_sub(1)),
            });
        }
        for (g, &gi) in raw.inverse.iter().enumerate() {
            if gi >= m
                || raw.morphisms[gi].dom != raw.morphisms[g].cod
                || raw.morphisms[gi].cod != raw.morphisms[g].dom
            {
                return Err(GroupoidError::MissingInverse { morphism: g });
            }
        }

        let mut table = vec![NONE; m * m];
        for &[g, f, gf] in &raw.compose {
            if g >= m || f >= m || gf >= m {
                return Err(GroupoidError::DomCodMismatch {
                    detail: format!("composition entry ({g}, {f}, {gf}) names an unknown morphism"),
                });
            }
            let (mg, mf, mgf) = (raw.morphisms[g], raw.morphisms[f], raw.morphisms[gf]);
            if mg.dom != mf.cod {
                return Err(GroupoidError::DomCodMismatch {
                    detail: format!("composition entry ({g}, {f}) is not a composable pair"),
                });
            }
            if mgf.dom != mf.dom || mgf.cod != mg.cod {
                return Err(GroupoidError::DomCodMismatch {
                    detail: format!(
                        "composite {gf} of ({g}, {f}) has dom/cod ({}, {}), expected ({}, {})",
                        mgf.dom, mgf.cod, mf.dom, mg.cod
                    ),
                });
            }
            let slot = &mut table[g * m + f];
            if *slot != NONE && *slot != gf {
                return Err(GroupoidError::DomCodMismatch {
                    detail: format!("conflicting composites for ({g}, {f}): {} and {gf}", *slot),
                });
            }
            *slot = gf;
        }
        for g in 0..m {
            for f in 0..m {
                let composable = raw.morphisms[g].dom == raw.morphisms[f].cod;
                if composable && table[g * m + f] == NONE {
                    return Err(GroupoidError::IncompleteComposition { g, f });
                }
            }
        }

        let gpd = Self::from_parts(n, raw.morphisms.clone(), table, raw.identity.clone(), raw.inverse.clone());

        for f in 0..m {
            let Morphism { dom, cod } = gpd.morphisms[f];
            if gpd.table[gpd.identity[cod] * m + f] != f {
                return Err(GroupoidError::MissingIdentity { object: cod });
            }
            if gpd.table[f * m + gpd.identity[dom]] != f {
                return Err(GroupoidError::MissingIdentity { object: dom });
            }
        }
        for g in 0..m {
            let gi = gpd.inverse[g];
            let Morphism { dom, cod } = gpd.morphisms[g];
            if gpd.table[gi * m + g] != gpd.identity[dom] || gpd.table[g * m + gi] != gpd.identity[cod] {
                return Err(GroupoidError::MissingInverse { morphism: g });
            }
        }
        for f in 0..m {
            for g in gpd.out_of(gpd.morphisms[f].cod) {
                let gf = gpd.table[g * m + f];
                for h in gpd.out_of(gpd.morphisms[g].cod) {
                    let lhs = gpd.table[gpd.table[h * m + g] * m + f];
                    let rhs = gpd.table[h * m + gf];
                    if lhs != rhs {
                        return Err(GroupoidError::NonAssociative { h, g, f });
                    }
                }
            }
        }
        Ok(gpd)
    }

    /// Assembles a groupoid from trusted parts, computing the hom-set cache.
    pub(crate) fn from_parts(
        objects: usize,
        morphisms: Vec<Morphism>,
        table: Vec<usize>,
        identity: Vec<MorphismId>,
        inverse: Vec<MorphismId>,
    ) -> Self {
        let mut hom = vec![Vec::new(); objects * objects];
        for (id, mor) in morphisms.iter().enumerate() {
            hom[mor.dom * objects + mor.cod].push(id);
        }
        Self {
            objects,
            morphisms,
            table,
            identity,
            inverse,
            hom,
        }
    }

    /// Exports the groupoid back to its raw table form.
    pub fn to_raw(&self) -> RawGroupoid {
        let m = self.morphism_count();
        let mut compose = Vec::new();
        for g in 0..m {
            for f in 0..m {
                let gf = self.table[g * m + f];
                if gf != NONE {
                    compose.push([g, f, gf]);
                }
            }
        }
        RawGroupoid {
            objects: self.objects,
            morphisms: self.morphisms.clone(),
            compose,
            identity: self.identity.clone(),
            inverse: self.inverse.clone(),
        }
    }

    /// Builds the one-object groupoid of a group given by its multiplication
    /// table, `table[a][b] = a·b`. Composition `g ∘ f` is the product `g·f`.
    pub fn from_group(table: &[Vec<usize>]) -> Result<Self, GroupoidError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupoidError::NotAGroup("empty table".into()));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(GroupoidError::NotAGroup(format!("row {a} has length {}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(GroupoidError::NotAGroup(format!("entry {bad} out of range in row {a}")));
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| GroupoidError::NotAGroup("no identity element".into()))?;
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| table[a][b] == e && table[b][a] == e)
                .ok_or_else(|| GroupoidError::NotAGroup(format!("element {a} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupoidError::NotAGroup(format!(
                            "not associative on ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let flat = table.iter().flatten().copied().collect();
        Ok(Self::from_parts(
            1,
            vec![Morphism { dom: 0, cod: 0 }; n],
            flat,
            vec![e],
            inverse,
        ))
    }

    /// Builds a group from permutation generators by orbit closure.
    ///
    /// Element 0 is the identity; the remaining elements are numbered in
    /// breadth-first discovery order.
    pub fn from_perm_gens(gens: &[Vec<usize>]) -> Result<Self, GroupoidError> {
        Ok(Self::perm_group(gens)?.0)
    }

    /// As [`FiniteGroupoid::from_perm_gens`], also returning the permutation
    /// of each element.
    pub fn perm_group(gens: &[Vec<usize>]) -> Result<(Self, Vec<Vec<usize>>), GroupoidError> {
        let degree = gens.first().map_or(0, Vec::len);
        for (i, g) in gens.iter().enumerate() {
            if g.len() != degree {
                return Err(GroupoidError::NotAGroup(format!("generator {i} has a different degree")));
            }
            let mut seen = vec![false; degree];
            for &p in g {
                if p >= degree || std::mem::replace(&mut seen[p], true) {
                    return Err(GroupoidError::NotAGroup(format!("generator {i} is not a permutation")));
                }
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index = std::collections::HashMap::new();
        index.insert(identity, 0usize);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let next: Vec<usize> = elements[i].iter().map(|&p| g[p]).collect();
                if !index.contains_key(&next) {
                    index.insert(next.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }
        // a·b acts as "b first, then a"
        let table: Vec<Vec<usize>> = elements
            .iter()
            .map(|a| {
                elements
                    .iter()
                    .map(|b| index[&b.iter().map(|&p| a[p]).collect::<Vec<_>>()])
                    .collect()
            })
            .collect();
        Ok((Self::from_group(&table)?, elements))
    }

    /// The groupoid of pairs on `n` objects. Morphism `(x, y): x → y` has id `x·n + y`.
    pub fn pair(n: usize) -> Result<Self, GroupoidError> {
        if n == 0 {
            return Err(GroupoidError::EmptyObjectSet);
        }
        let m = n * n;
        let morphisms = (0..m).map(|id| Morphism { dom: id / n, cod: id % n }).collect();
        let mut table = vec![NONE; m * m];
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    table[(y * n + z) * m + (x * n + y)] = x * n + z;
                }
            }
        }
        let identity = (0..n).map(|x| x * n + x).collect();
        let inverse = (0..m).map(|id| (id % n) * n + id / n).collect();
        Ok(Self::from_parts(n, morphisms, table, identity, inverse))
    }

    /// Coproduct of groupoids with injections. Ids of later parts are shifted
    /// past those of earlier parts.
    pub fn disjoint_union(parts: &[Arc<FiniteGroupoid>]) -> Result<(Arc<Self>, Vec<GroupoidFunctor>), GroupoidError> {
        if parts.is_empty() {
            return Err(GroupoidError::EmptyUnion);
        }
        let n: usize = parts.iter().map(|p| p.objects).sum();
        let m: usize = parts.iter().map(|p| p.morphism_count()).sum();
        let mut morphisms = Vec::with_capacity(m);
        let mut table = vec![NONE; m * m];
        let mut identity = Vec::with_capacity(n);
        let mut inverse = Vec::with_capacity(m);
        let (mut obj_off, mut mor_off) = (0, 0);
        let mut offsets = Vec::new();
        for p in parts {
            let pm = p.morphism_count();
            morphisms.extend(p.morphisms.iter().map(|mor| Morphism {
                dom: mor.dom + obj_off,
                cod: mor.cod + obj_off,
            }));
            for g in 0..pm {
                for f in 0..pm {
                    let gf = p.table[g * pm + f];
                    if gf != NONE {
                        table[(g + mor_off) * m + f + mor_off] = gf + mor_off;
                    }
                }
            }
            identity.extend(p.identity.iter().map(|&e| e + mor_off));
            inverse.extend(p.inverse.iter().map(|&g| g + mor_off));
            offsets.push((obj_off, mor_off));
            obj_off += p.objects;
            mor_off += pm;
        }
        let union = Arc::new(Self::from_parts(n, morphisms, table, identity, inverse));
        let injections = parts
            .iter()
            .zip(offsets)
            .map(|(p, (oo, mo))| GroupoidFunctor {
                source: Arc::clone(p),
                target: Arc::clone(&union),
                object_map: (0..p.objects).map(|x| x + oo).collect(),
                morphism_map: (0..p.morphism_count()).map(|g| g + mo).collect(),
            })
            .collect();
        Ok((union, injections))
    }

    /// Direct product. Object `(i, j)` has id `i·n_h + j`, morphism `(a, b)` has id `a·m_h + b`.
    pub fn direct_product(g: &FiniteGroupoid, h: &FiniteGroupoid) -> Self {
        let (gn, hn) = (g.objects, h.objects);
        let (gm, hm) = (g.morphism_count(), h.morphism_count());
        let m = gm * hm;
        let morphisms = (0..m)
            .map(|id| {
                let (a, b) = (g.morphisms[id / hm], h.morphisms[id % hm]);
                Morphism {
                    dom: a.dom * hn + b.dom,
                    cod: a.cod * hn + b.cod,
                }
            })
            .collect();
        let mut table = vec![NONE; m * m];
        for p in 0..m {
            for q in 0..m {
                let ga = g.table[(p / hm) * gm + q / hm];
                let hb = h.table[(p % hm) * hm + q % hm];
                if ga != NONE && hb != NONE {
                    table[p * m + q] = ga * hm + hb;
                }
            }
        }
        let identity = (0..gn * hn)
            .map(|o| g.identity[o / hn] * hm + h.identity[o % hn])
            .collect();
        let inverse = (0..m)
            .map(|id| g.inverse[id / hm] * hm + h.inverse[id % hm])
            .collect();
        Self::from_parts(gn * hn, morphisms, table, identity, inverse)
    }

    pub fn object_count(&self) -> usize {
        self.objects
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn morphism(&self, g: MorphismId) -> Morphism {
        self.morphisms[g]
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn dom(&self, g: MorphismId) -> ObjectId {
        self.morphisms[g].dom
    }

    pub fn cod(&self, g: MorphismId) -> ObjectId {
        self.morphisms[g].cod
    }

    pub fn identity(&self, x: ObjectId) -> MorphismId {
        self.identity[x]
    }

    pub fn inverse(&self, g: MorphismId) -> MorphismId {
        self.inverse[g]
    }

    /// `g ∘ f`, or `None` when `dom g ≠ cod f`.
    pub fn compose(&self, g: MorphismId, f: MorphismId) -> Option<MorphismId> {
        let v = self.table[g * self.morphism_count() + f];
        (v != NONE).then_some(v)
    }

    /// `g ∘ f` for a pair already known to be composable.
    pub fn comp(&self, g: MorphismId, f: MorphismId) -> MorphismId {
        let v = self.table[g * self.morphism_count() + f];
        debug_assert!(v != NONE, "composed non-composable pair ({g}, {f})");
        v
    }

    /// The hom-set `𝒢(x, y)` in ascending id order.
    pub fn hom(&self, x: ObjectId, y: ObjectId) -> &[MorphismId] {
        &self.hom[x * self.objects + y]
    }

    /// All morphisms with domain `x`, ascending.
    pub fn out_of(&self, x: ObjectId) -> impl Iterator<Item = MorphismId> + '_ {
        self.morphisms
            .iter()
            .enumerate()
            .filter(move |(_, m)| m.dom == x)
            .map(|(id, _)| id)
    }

    /// Loops at `x`, i.e. the elements of the isotropy group, ascending.
    pub fn loops(&self, x: ObjectId) -> &[MorphismId] {
        self.hom(x, x)
    }

    pub fn is_group(&self) -> bool {
        self.objects == 1
    }

    pub fn components(&self) -> Components {
        let n = self.objects;
        let mut component_of = vec![NONE; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if component_of[x] != NONE {
                continue;
            }
            let class: Vec<ObjectId> = (0..n).filter(|&y| !self.hom(x, y).is_empty()).collect();
            for &y in &class {
                component_of[y] = classes.len();
            }
            classes.push(class);
        }
        Components { component_of, classes }
    }

    pub fn is_connected(&self) -> bool {
        (0..self.objects).all(|y| !self.hom(0, y).is_empty())
    }

    /// The isotropy group at `x` as a one-object groupoid, with its inclusion.
    /// Element `i` of the result is the `i`-th loop at `x` in ascending id order.
    pub fn isotropy_group(self: &Arc<Self>, x: ObjectId) -> Result<(Arc<Self>, GroupoidFunctor), GroupoidError> {
        if x >= self.objects {
            return Err(GroupoidError::UnknownObject(x));
        }
        let loops = self.loops(x).to_vec();
        let k = loops.len();
        let pos = |g: MorphismId| loops.binary_search(&g).expect("loop closed under composition");
        let mut table = Vec::with_capacity(k * k);
        for &a in &loops {
            for &b in &loops {
                table.push(pos(self.comp(a, b)));
            }
        }
        let group = Arc::new(Self::from_parts(
            1,
            vec![Morphism { dom: 0, cod: 0 }; k],
            table,
            vec![pos(self.identity[x])],
            loops.iter().map(|&g| pos(self.inverse[g])).collect(),
        ));
        let inclusion = GroupoidFunctor {
            source: Arc::clone(&group),
            target: Arc::clone(self),
            object_map: vec![x],
            morphism_map: loops,
        };
        Ok((group, inclusion))
    }

    /// Transport morphism `t_y: z → y`: the identity when `y = z`, otherwise the
    /// least morphism id in `𝒢(z, y)`.
    pub fn transport(&self, z: ObjectId, y: ObjectId) -> Option<MorphismId> {
        if y == z {
            Some(self.identity[z])
        } else {
            self.hom(z, y).first().copied()
        }
    }

    /// Isomorphism `𝒢 → 𝒢_x × Pair(𝒢₀)` for a connected groupoid, sending
    /// `g: y → w` to `(t_w⁻¹ g t_y, (y, w))`.
    pub fn connected_structure_iso(self: &Arc<Self>, x: ObjectId) -> Result<GroupoidFunctor, GroupoidError> {
        if x >= self.objects {
            return Err(GroupoidError::UnknownObject(x));
        }
        if !self.is_connected() {
            return Err(GroupoidError::NotConnected);
        }
        let n = self.objects;
        let (iso_group, inclusion) = self.isotropy_group(x)?;
        let target = Arc::new(Self::direct_product(&iso_group, &Self::pair(n)?));
        let t: Vec<MorphismId> = (0..n).map(|y| self.transport(x, y).expect("connected")).collect();
        let pair_m = n * n;
        let morphism_map = (0..self.morphism_count())
            .map(|g| {
                let Morphism { dom, cod } = self.morphisms[g];
                let core = self.comp(self.inverse[t[cod]], self.comp(g, t[dom]));
                let a = inclusion.morphism_map.binary_search(&core).expect("core is a loop at x");
                a * pair_m + dom * n + cod
            })
            .collect();
        Ok(GroupoidFunctor {
            source: Arc::clone(self),
            target,
            object_map: (0..n).collect(),
            morphism_map,
        })
    }

    /// The equivalence between a connected groupoid and its isotropy group at `z`.
    pub fn inclusion_equivalence(self: &Arc<Self>, z: ObjectId) -> Result<Equivalence, GroupoidError> {
        if z >= self.objects {
            return Err(GroupoidError::UnknownObject(z));
        }
        if !self.is_connected() {
            return Err(GroupoidError::NotConnected);
        }
        let (group, inclusion) = self.isotropy_group(z)?;
        let transports: Vec<MorphismId> =
            (0..self.objects).map(|y| self.transport(z, y).expect("connected")).collect();
        let loops = &inclusion.morphism_map;
        let morphism_map = (0..self.morphism_count())
            .map(|g| {
                let Morphism { dom, cod } = self.morphisms[g];
                let core = self.comp(self.inverse[transports[cod]], self.comp(g, transports[dom]));
                loops.binary_search(&core).expect("core is a loop at z")
            })
            .collect();
        let retraction = GroupoidFunctor {
            source: Arc::clone(self),
            target: Arc::clone(&group),
            object_map: vec![0; self.objects],
            morphism_map,
        };
        Ok(Equivalence {
            base_object: z,
            counit: vec![group.identity(0)],
            unit: transports,
            inclusion,
            retraction,
        })
    }

    /// `true` iff `ᵍ𝒩_{dom g} = 𝒩_{cod g}` for every morphism `g`.
    pub fn is_normal_subgroupoid(&self, sub: &SubgroupoidSpec) -> Result<bool, GroupoidError> {
        sub.check(self)?;
        let local: Vec<BTreeSet<MorphismId>> = (0..self.objects)
            .map(|x| self.loops(x).iter().copied().filter(|g| sub.morphisms.contains(g)).collect())
            .collect();
        for g in 0..self.morphism_count() {
            let Morphism { dom, cod } = self.morphisms[g];
            let conj: BTreeSet<MorphismId> = local[dom]
                .iter()
                .map(|&n| self.comp(g, self.comp(n, self.inverse[g])))
                .collect();
            if conj != local[cod] {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Partition of the objects into connected components. Components are ordered
/// by their least object, which is also the representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Components {
    pub component_of: Vec<usize>,
    pub classes: Vec<Vec<ObjectId>>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn representatives(&self) -> Vec<ObjectId> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    pub fn representative_of(&self, x: ObjectId) -> ObjectId {
        self.classes[self.component_of[x]][0]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidFunctor {
    pub source: Arc<FiniteGroupoid>,
    pub target: Arc<FiniteGroupoid>,
    pub object_map: Vec<ObjectId>,
    pub morphism_map: Vec<MorphismId>,
}

impl GroupoidFunctor {
    pub fn identity(g: &Arc<FiniteGroupoid>) -> Self {
        Self {
            source: Arc::clone(g),
            target: Arc::clone(g),
            object_map: (0..g.object_count()).collect(),
            morphism_map: (0..g.morphism_count()).collect(),
        }
    }

    /// Exhaustively checks preservation of dom, cod, identities and composition.
    pub fn validate(&self) -> Result<(), GroupoidError> {
        let (s, t) = (&self.source, &self.target);
        if self.object_map.len() != s.object_count() || self.morphism_map.len() != s.morphism_count() {
            return Err(GroupoidError::NotAFunctor("map lengths do not match the source".into()));
        }
        if let Some(&bad) = self.object_map.iter().find(|&&y| y >= t.object_count()) {
            return Err(GroupoidError::NotAFunctor(format!("object image {bad} out of range")));
        }
        if let Some(&bad) = self.morphism_map.iter().find(|&&g| g >= t.morphism_count()) {
            return Err(GroupoidError::NotAFunctor(format!("morphism image {bad} out of range")));
        }
        for (g, &fg) in self.morphism_map.iter().enumerate() {
            let (src, img) = (s.morphism(g), t.morphism(fg));
            if img.dom != self.object_map[src.dom] || img.cod != self.object_map[src.cod] {
                return Err(GroupoidError::NotAFunctor(format!("morphism {g} breaks dom/cod")));
            }
        }
        for x in 0..s.object_count() {
            if self.morphism_map[s.identity(x)] != t.identity(self.object_map[x]) {
                return Err(GroupoidError::NotAFunctor(format!("identity at object {x} not preserved")));
            }
        }
        for f in 0..s.morphism_count() {
            for g in s.out_of(s.cod(f)) {
                let lhs = self.morphism_map[s.comp(g, f)];
                let rhs = t.comp(self.morphism_map[g], self.morphism_map[f]);
                if lhs != rhs {
                    return Err(GroupoidError::NotAFunctor(format!("composite ({g}, {f}) not preserved")));
                }
            }
        }
        Ok(())
    }

    pub fn is_bijective(&self) -> bool {
        fn bij(map: &[usize], n: usize) -> bool {
            let mut seen = vec![false; n];
            map.len() == n && map.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
        }
        bij(&self.object_map, self.target.object_count())
            && bij(&self.morphism_map, self.target.morphism_count())
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &GroupoidFunctor) -> GroupoidFunctor {
        GroupoidFunctor {
            source: Arc::clone(&first.source),
            target: Arc::clone(&self.target),
            object_map: first.object_map.iter().map(|&x| self.object_map[x]).collect(),
            morphism_map: first.morphism_map.iter().map(|&g| self.morphism_map[g]).collect(),
        }
    }
}

/// Equivalence data `U: 𝒢_z → 𝒢`, `R: 𝒢 → 𝒢_z` with natural isomorphisms
/// `unit: U∘R ⇒ id_𝒢` and `counit: R∘U ⇒ id_{𝒢_z}`, stored componentwise.
#[derive(Clone, Debug)]
pub struct Equivalence {
    pub base_object: ObjectId,
    pub inclusion: GroupoidFunctor,
    pub retraction: GroupoidFunctor,
    /// `unit[y]: z → y` in 𝒢 (the transport morphism).
    pub unit: Vec<MorphismId>,
    /// Single component in `𝒢_z`.
    pub counit: Vec<MorphismId>,
}

impl Equivalence {
    /// Checks both functors and every naturality square of the unit and counit.
    pub fn check(&self) -> Result<(), GroupoidError> {
        self.inclusion.validate()?;
        self.retraction.validate()?;
        let g = &self.retraction.source;
        let z = self.base_object;
        let u_after_r = self.inclusion.after(&self.retraction);
        for y in 0..g.object_count() {
            let c = self.unit[y];
            if g.dom(c) != u_after_r.object_map[y] || g.cod(c) != y {
                return Err(GroupoidError::NotAFunctor(format!("unit component at {y} has wrong type")));
            }
        }
        for f in 0..g.morphism_count() {
            let Morphism { dom, cod } = g.morphism(f);
            // unit_cod ∘ UR(f) = f ∘ unit_dom
            if g.comp(self.unit[cod], u_after_r.morphism_map[f]) != g.comp(f, self.unit[dom]) {
                return Err(GroupoidError::NotAFunctor(format!("unit not natural at morphism {f}")));
            }
        }
        let group = &self.retraction.target;
        let r_after_u = self.retraction.after(&self.inclusion);
        for h in 0..group.morphism_count() {
            if group.comp(self.counit[0], r_after_u.morphism_map[h]) != group.comp(h, self.counit[0]) {
                return Err(GroupoidError::NotAFunctor(format!("counit not natural at morphism {h}")));
            }
        }
        if self.inclusion.object_map != vec![z] {
            return Err(GroupoidError::NotAFunctor("inclusion does not land at the base object".into()));
        }
        Ok(())
    }
}

/// A set of morphisms claimed to form a subgroupoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupoidSpec {
    pub morphisms: BTreeSet<MorphismId>,
}

impl SubgroupoidSpec {
    pub fn new(morphisms: impl IntoIterator<Item = MorphismId>) -> Self {
        Self {
            morphisms: morphisms.into_iter().collect(),
        }
    }

    /// The wide subgroupoid consisting only of identities.
    pub fn identities(g: &FiniteGroupoid) -> Self {
        Self::new((0..g.object_count()).map(|x| g.identity(x)))
    }

    /// Checks that the set is a wide subgroupoid of `g`.
    pub fn check(&self, g: &FiniteGroupoid) -> Result<(), GroupoidError> {
        if let Some(&bad) = self.morphisms.iter().find(|&&f| f >= g.morphism_count()) {
            return Err(GroupoidError::UnknownMorphism(bad));
        }
        for x in 0..g.object_count() {
            if !self.morphisms.contains(&g.identity(x)) {
                return Err(GroupoidError::NotWide(x));
            }
        }
        for &f in &self.morphisms {
            if !self.morphisms.contains(&g.inverse(f)) {
                return Err(GroupoidError::NotSubgroupoid(format!("inverse of {f} missing")));
            }
            for &h in &self.morphisms {
                if let Some(hf) = g.compose(h, f) {
                    if !self.morphisms.contains(&hf) {
                        return Err(GroupoidError::NotSubgroupoid(format!("composite ({h}, {f}) missing")));
                    }
                }
            }
        }
        Ok(())
    }
}
