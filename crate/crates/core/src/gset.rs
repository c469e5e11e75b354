//! Functors from a finite groupoid into finite sets and finite monoids.
//!
//! A [`GSet`] stores one fiber size per object and, per morphism, the image
//! list of its action map. Fiber elements are dense ids `0..fiber(x)`.
//! Fibers may be empty.

use std::collections::VecDeque;
use std::sync::Arc;

use thiserror::Error;

use crate::groupoid::{FiniteGroupoid, GroupoidError, GroupoidFunctor, Morphism, MorphismId, ObjectId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GSetError {
    #[error("base groupoids differ")]
    BaseMismatch,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("action of morphism {morphism} is not a bijection between its fibers")]
    NotBijection { morphism: MorphismId },
    #[error("identity at object {object} does not act trivially")]
    IdentityNotTrivial { object: ObjectId },
    #[error("action is not functorial on ({g}, {f}) at element {element}")]
    NotFunctorial {
        g: MorphismId,
        f: MorphismId,
        element: usize,
    },
    #[error("monoid at object {object} is invalid: {detail}")]
    InvalidMonoid { object: ObjectId, detail: String },
    #[error("action of morphism {morphism} is not a monoid homomorphism")]
    NotHomomorphism { morphism: MorphismId },
    #[error("map is not natural at morphism {morphism}, element {element}")]
    NotNatural { morphism: MorphismId, element: usize },
    #[error("every fiber is empty")]
    AllFibersEmpty,
    #[error("{0}")]
    NotASubgroup(String),
    #[error(transparent)]
    Groupoid(#[from] GroupoidError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GSet {
    base: Arc<FiniteGroupoid>,
    fibers: Vec<usize>,
    action: Vec<Vec<usize>>,
}

fn check_action(base: &FiniteGroupoid, fibers: &[usize], action: &[Vec<usize>]) -> Result<(), GSetError> {
    if fibers.len() != base.object_count() {
        return Err(GSetError::Shape(format!(
            "{} fiber sizes for {} objects",
            fibers.len(),
            base.object_count()
        )));
    }
    if action.len() != base.morphism_count() {
        return Err(GSetError::Shape(format!(
            "{} action maps for {} morphisms",
            action.len(),
            base.morphism_count()
        )));
    }
    for (g, map) in action.iter().enumerate() {
        let Morphism { dom, cod } = base.morphism(g);
        if map.len() != fibers[dom] {
            return Err(GSetError::Shape(format!("action of morphism {g} has the wrong length")));
        }
        if fibers[dom] != fibers[cod] {
            return Err(GSetError::NotBijection { morphism: g });
        }
        let mut seen = vec![false; fibers[cod]];
        for &v in map {
            if v >= fibers[cod] || std::mem::replace(&mut seen[v], true) {
                return Err(GSetError::NotBijection { morphism: g });
            }
        }
    }
    for x in 0..base.object_count() {
        let map = &action[base.identity(x)];
        if map.iter().enumerate().any(|(i, &v)| i != v) {
            return Err(GSetError::IdentityNotTrivial { object: x });
        }
    }
    for f in 0..base.morphism_count() {
        for g in base.out_of(base.cod(f)) {
            let gf = base.comp(g, f);
            for a in 0..fibers[base.dom(f)] {
                if action[gf][a] != action[g][action[f][a]] {
                    return Err(GSetError::NotFunctorial { g, f, element: a });
                }
            }
        }
    }
    Ok(())
}

impl GSet {
    pub fn new(base: Arc<FiniteGroupoid>, fibers: Vec<usize>, action: Vec<Vec<usize>>) -> Result<Self, GSetError> {
        check_action(&base, &fibers, &action)?;
        Ok(Self { base, fibers, action })
    }

    pub(crate) fn from_parts(base: Arc<FiniteGroupoid>, fibers: Vec<usize>, action: Vec<Vec<usize>>) -> Self {
        debug_assert!(check_action(&base, &fibers, &action).is_ok());
        Self { base, fibers, action }
    }

    /// Singleton fiber at every object.
    pub fn terminal(base: &Arc<FiniteGroupoid>) -> Self {
        Self::from_parts(
            Arc::clone(base),
            vec![1; base.object_count()],
            vec![vec![0]; base.morphism_count()],
        )
    }

    pub fn empty(base: &Arc<FiniteGroupoid>) -> Self {
        Self::from_parts(
            Arc::clone(base),
            vec![0; base.object_count()],
            vec![Vec::new(); base.morphism_count()],
        )
    }

    /// The representable `𝒢(x, -)`: fiber at `y` is `𝒢(x, y)` (in ascending
    /// id order) and morphisms act by post-composition.
    pub fn representable(base: &Arc<FiniteGroupoid>, x: ObjectId) -> Self {
        let n = base.object_count();
        let fibers = (0..n).map(|y| base.hom(x, y).len()).collect();
        let action = (0..base.morphism_count())
            .map(|g| {
                let Morphism { dom, cod } = base.morphism(g);
                base.hom(x, dom)
                    .iter()
                    .map(|&m| {
                        let gm = base.comp(g, m);
                        base.hom(x, cod).binary_search(&gm).expect("composite lands in hom-set")
                    })
                    .collect()
            })
            .collect();
        Self::from_parts(Arc::clone(base), fibers, action)
    }

    pub fn base(&self) -> &Arc<FiniteGroupoid> {
        &self.base
    }

    pub fn fibers(&self) -> &[usize] {
        &self.fibers
    }

    pub fn fiber(&self, x: ObjectId) -> usize {
        self.fibers[x]
    }

    pub fn total_size(&self) -> usize {
        self.fibers.iter().sum()
    }

    pub fn action_map(&self, g: MorphismId) -> &[usize] {
        &self.action[g]
    }

    pub fn act(&self, g: MorphismId, a: usize) -> usize {
        self.action[g][a]
    }

    pub fn same_base(&self, other: &GSet) -> bool {
        Arc::ptr_eq(&self.base, &other.base) || self.base == other.base
    }

    /// Fiberwise cartesian product with diagonal action; `(a, b)` has id `a·|Y(x)| + b`.
    pub fn product(&self, other: &GSet) -> Result<GSet, GSetError> {
        if !self.same_base(other) {
            return Err(GSetError::BaseMismatch);
        }
        let fibers = self.fibers.iter().zip(&other.fibers).map(|(a, b)| a * b).collect();
        let action = (0..self.base.morphism_count())
            .map(|g| {
                let w = other.fibers[self.base.cod(g)];
                let (ma, mb) = (&self.action[g], &other.action[g]);
                ma.iter()
                    .flat_map(|&a| mb.iter().map(move |&b| a * w + b))
                    .collect()
            })
            .collect();
        Ok(GSet::from_parts(Arc::clone(&self.base), fibers, action))
    }

    /// Fiberwise disjoint union; elements of `other` are shifted past those of `self`.
    pub fn coproduct(&self, other: &GSet) -> Result<GSet, GSetError> {
        if !self.same_base(other) {
            return Err(GSetError::BaseMismatch);
        }
        let fibers = self.fibers.iter().zip(&other.fibers).map(|(a, b)| a + b).collect();
        let action = (0..self.base.morphism_count())
            .map(|g| {
                let off = self.fibers[self.base.cod(g)];
                self.action[g]
                    .iter()
                    .copied()
                    .chain(other.action[g].iter().map(|&b| b + off))
                    .collect()
            })
            .collect();
        Ok(GSet::from_parts(Arc::clone(&self.base), fibers, action))
    }

    /// Orbits as sorted lists of `(object, element)`, ordered by least member.
    pub fn orbits(&self) -> Vec<Vec<(ObjectId, usize)>> {
        let n = self.base.object_count();
        let offsets: Vec<usize> = self
            .fibers
            .iter()
            .scan(0, |acc, &f| {
                let o = *acc;
                *acc += f;
                Some(o)
            })
            .collect();
        let mut seen = vec![false; self.total_size()];
        let mut out = Vec::new();
        for x in 0..n {
            for a in 0..self.fibers[x] {
                if seen[offsets[x] + a] {
                    continue;
                }
                seen[offsets[x] + a] = true;
                let mut orbit = vec![(x, a)];
                let mut queue = VecDeque::from([(x, a)]);
                while let Some((y, b)) = queue.pop_front() {
                    for g in self.base.out_of(y) {
                        let w = self.base.cod(g);
                        let c = self.action[g][b];
                        if !std::mem::replace(&mut seen[offsets[w] + c], true) {
                            orbit.push((w, c));
                            queue.push_back((w, c));
                        }
                    }
                }
                orbit.sort_unstable();
                out.push(orbit);
            }
        }
        out
    }

    /// `true` iff the action groupoid is connected.
    pub fn is_transitive(&self) -> Result<bool, GSetError> {
        if self.total_size() == 0 {
            return Err(GSetError::AllFibersEmpty);
        }
        Ok(self.orbits().len() == 1)
    }

    /// The sub-G-set on a union of orbits, renumbered in ascending element
    /// order per object, together with its embedding.
    pub fn restrict_to(&self, elements: &[(ObjectId, usize)]) -> (GSet, GMap) {
        let n = self.base.object_count();
        let mut chosen: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(x, a) in elements {
            chosen[x].push(a);
        }
        for c in &mut chosen {
            c.sort_unstable();
        }
        let fibers: Vec<usize> = chosen.iter().map(Vec::len).collect();
        let action = (0..self.base.morphism_count())
            .map(|g| {
                let Morphism { dom, cod } = self.base.morphism(g);
                chosen[dom]
                    .iter()
                    .map(|&a| {
                        chosen[cod]
                            .binary_search(&self.action[g][a])
                            .expect("element set is closed under the action")
                    })
                    .collect()
            })
            .collect();
        let piece = GSet::from_parts(Arc::clone(&self.base), fibers, action);
        let embedding = GMap {
            source: piece.clone(),
            target: self.clone(),
            components: chosen,
        };
        (piece, embedding)
    }

    /// Splits into transitive pieces, each with its embedding into `self`.
    pub fn orbit_decomposition(&self) -> Vec<(GSet, GMap)> {
        self.orbits().iter().map(|o| self.restrict_to(o)).collect()
    }

    /// Number of points of `X(x)` fixed by every element of `subgroup`
    /// (given as loop ids at `x`).
    pub fn marks(&self, x: ObjectId, subgroup: &[MorphismId]) -> Result<usize, GSetError> {
        if x >= self.base.object_count() {
            return Err(GroupoidError::UnknownObject(x).into());
        }
        let loops = self.base.loops(x);
        if subgroup.iter().any(|h| loops.binary_search(h).is_err()) {
            return Err(GSetError::NotASubgroup(format!("subgroup contains a non-loop at object {x}")));
        }
        let (group, inclusion) = self.base.isotropy_group(x)?;
        let local: Vec<usize> = subgroup
            .iter()
            .map(|h| inclusion.morphism_map.binary_search(h).unwrap())
            .collect();
        if !crate::subgroups::is_subgroup(&group, &local) {
            return Err(GSetError::NotASubgroup(format!("{subgroup:?} is not a subgroup at object {x}")));
        }
        Ok((0..self.fibers[x])
            .filter(|&a| subgroup.iter().all(|&h| self.action[h][a] == a))
            .count())
    }

    /// The action groupoid `𝒢⋊X` and its projection to `𝒢`.
    pub fn action_groupoid(&self) -> Result<ActionGroupoid, GSetError> {
        ActionGroupoid::new(self)
    }

    /// Precomposition with a functor `F: 𝒦 → 𝒢`, giving the 𝒦-set `X∘F`.
    pub fn pullback(&self, functor: &GroupoidFunctor) -> Result<GSet, GSetError> {
        if functor.target.as_ref() != self.base.as_ref() {
            return Err(GSetError::BaseMismatch);
        }
        let fibers = functor.object_map.iter().map(|&y| self.fibers[y]).collect();
        let action = functor.morphism_map.iter().map(|&g| self.action[g].clone()).collect();
        Ok(GSet::from_parts(Arc::clone(&functor.source), fibers, action))
    }
}

/// A finite monoid as a multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidTable {
    size: usize,
    mul: Vec<usize>,
    unit: usize,
}

impl MonoidTable {
    pub fn new(table: &[Vec<usize>], unit: usize) -> Result<Self, String> {
        let size = table.len();
        if unit >= size {
            return Err(format!("unit {unit} out of range"));
        }
        if table.iter().any(|row| row.len() != size || row.iter().any(|&v| v >= size)) {
            return Err("table is not square or has out-of-range entries".into());
        }
        let mul: Vec<usize> = table.iter().flatten().copied().collect();
        let m = Self { size, mul, unit };
        for a in 0..size {
            if m.mul(unit, a) != a || m.mul(a, unit) != a {
                return Err(format!("{unit} is not a two-sided unit"));
            }
            for b in 0..size {
                for c in 0..size {
                    if m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c)) {
                        return Err(format!("not associative on ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(m)
    }

    pub(crate) fn from_parts(size: usize, mul: Vec<usize>, unit: usize) -> Self {
        Self { size, mul, unit }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.size).map(<[usize]>::to_vec).collect()
    }
}

/// A functor from the groupoid into finite monoids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GMonoid {
    underlying: GSet,
    monoids: Vec<MonoidTable>,
}

impl GMonoid {
    pub fn new(base: Arc<FiniteGroupoid>, monoids: Vec<MonoidTable>, action: Vec<Vec<usize>>) -> Result<Self, GSetError> {
        let fibers = monoids.iter().map(MonoidTable::size).collect();
        let underlying = GSet::new(base, fibers, action)?;
        for g in 0..underlying.base.morphism_count() {
            let Morphism { dom, cod } = underlying.base.morphism(g);
            let (src, tgt) = (&monoids[dom], &monoids[cod]);
            let map = underlying.action_map(g);
            if map[src.unit] != tgt.unit {
                return Err(GSetError::NotHomomorphism { morphism: g });
            }
            for a in 0..src.size {
                for b in 0..src.size {
                    if map[src.mul(a, b)] != tgt.mul(map[a], map[b]) {
                        return Err(GSetError::NotHomomorphism { morphism: g });
                    }
                }
            }
        }
        Ok(Self { underlying, monoids })
    }

    /// The one-element monoid at every object.
    pub fn trivial(base: &Arc<FiniteGroupoid>) -> Self {
        Self {
            underlying: GSet::terminal(base),
            monoids: vec![MonoidTable::from_parts(1, vec![0], 0); base.object_count()],
        }
    }

    /// The conjugation action `𝒢^c`: fiber at `x` is the isotropy group
    /// (element `i` is the `i`-th loop at `x`), and `g: x → y` acts by
    /// `a ↦ g a g⁻¹`.
    pub fn conjugation(base: &Arc<FiniteGroupoid>) -> Self {
        let n = base.object_count();
        let pos = |x: ObjectId, g: MorphismId| base.loops(x).binary_search(&g).expect("loop");
        let monoids = (0..n)
            .map(|x| {
                let loops = base.loops(x);
                let mul = loops
                    .iter()
                    .flat_map(|&a| loops.iter().map(move |&b| pos(x, base.comp(a, b))))
                    .collect();
                MonoidTable::from_parts(loops.len(), mul, pos(x, base.identity(x)))
            })
            .collect::<Vec<_>>();
        let action = (0..base.morphism_count())
            .map(|g| {
                let Morphism { dom, cod } = base.morphism(g);
                let gi = base.inverse(g);
                base.loops(dom)
                    .iter()
                    .map(|&a| pos(cod, base.comp(g, base.comp(a, gi))))
                    .collect()
            })
            .collect();
        let fibers = monoids.iter().map(MonoidTable::size).collect();
        Self {
            underlying: GSet::from_parts(Arc::clone(base), fibers, action),
            monoids,
        }
    }

    /// `true` iff this is exactly `𝒢^c` for its base.
    pub fn is_conjugation(&self) -> bool {
        *self == Self::conjugation(self.base())
    }

    pub fn base(&self) -> &Arc<FiniteGroupoid> {
        self.underlying.base()
    }

    /// The underlying G-set `S̄`.
    pub fn underlying(&self) -> &GSet {
        &self.underlying
    }

    pub fn monoid(&self, x: ObjectId) -> &MonoidTable {
        &self.monoids[x]
    }

    pub fn mul(&self, x: ObjectId, a: usize, b: usize) -> usize {
        self.monoids[x].mul(a, b)
    }

    pub fn unit(&self, x: ObjectId) -> usize {
        self.monoids[x].unit
    }

    pub fn act(&self, g: MorphismId, a: usize) -> usize {
        self.underlying.act(g, a)
    }

    /// Precomposition with a functor into the base.
    pub fn pullback(&self, functor: &GroupoidFunctor) -> Result<GMonoid, GSetError> {
        let underlying = self.underlying.pullback(functor)?;
        let monoids = functor.object_map.iter().map(|&y| self.monoids[y].clone()).collect();
        Ok(Self { underlying, monoids })
    }
}

/// A natural transformation between G-sets over the same base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GMap {
    pub source: GSet,
    pub target: GSet,
    pub components: Vec<Vec<usize>>,
}

impl GMap {
    pub fn new(source: GSet, target: GSet, components: Vec<Vec<usize>>) -> Result<Self, GSetError> {
        let map = Self {
            source,
            target,
            components,
        };
        map.check()?;
        Ok(map)
    }

    pub fn check(&self) -> Result<(), GSetError> {
        let (s, t) = (&self.source, &self.target);
        if !s.same_base(t) {
            return Err(GSetError::BaseMismatch);
        }
        check_components(s, t, &self.components)
    }

    pub fn is_bijective(&self) -> bool {
        self.components.iter().enumerate().all(|(x, comp)| {
            let mut seen = vec![false; self.target.fiber(x)];
            comp.len() == self.target.fiber(x) && comp.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
        })
    }
}

/// Shape and naturality check for componentwise maps `X → Y`.
pub(crate) fn check_components(src: &GSet, tgt: &GSet, components: &[Vec<usize>]) -> Result<(), GSetError> {
    let base = src.base();
    if components.len() != base.object_count() {
        return Err(GSetError::Shape("one component per object required".into()));
    }
    for (x, comp) in components.iter().enumerate() {
        if comp.len() != src.fiber(x) || comp.iter().any(|&v| v >= tgt.fiber(x)) {
            return Err(GSetError::Shape(format!("component at object {x} has the wrong shape")));
        }
    }
    for g in 0..base.morphism_count() {
        let Morphism { dom, cod } = base.morphism(g);
        for a in 0..src.fiber(dom) {
            if components[cod][src.act(g, a)] != tgt.act(g, components[dom][a]) {
                return Err(GSetError::NotNatural { morphism: g, element: a });
            }
        }
    }
    Ok(())
}

/// `𝒢⋊X`. Object `i` is the tagged pair `tags[i] = (G, x)`, assigned in
/// lexicographic order. Morphisms out of each object are listed in ascending
/// order of the underlying morphism of `𝒢`.
#[derive(Clone, Debug)]
pub struct ActionGroupoid {
    pub groupoid: Arc<FiniteGroupoid>,
    pub projection: GroupoidFunctor,
    pub tags: Vec<(ObjectId, usize)>,
}

impl ActionGroupoid {
    fn new(x: &GSet) -> Result<Self, GSetError> {
        let base = x.base();
        if x.total_size() == 0 {
            return Err(GroupoidError::EmptyObjectSet.into());
        }
        let tags: Vec<(ObjectId, usize)> = (0..base.object_count())
            .flat_map(|o| (0..x.fiber(o)).map(move |a| (o, a)))
            .collect();
        let tag_id = |o: ObjectId, a: usize| tags.binary_search(&(o, a)).unwrap();
        // morphism = (g, source element)
        let mut mors: Vec<(MorphismId, usize)> = Vec::new();
        for &(o, a) in &tags {
            for g in base.out_of(o) {
                mors.push((g, a));
            }
        }
        let m = mors.len();
        let mut index = std::collections::HashMap::with_capacity(m);
        for (id, &(g, a)) in mors.iter().enumerate() {
            index.insert((g, a), id);
        }
        let morphisms: Vec<Morphism> = mors
            .iter()
            .map(|&(g, a)| Morphism {
                dom: tag_id(base.dom(g), a),
                cod: tag_id(base.cod(g), x.act(g, a)),
            })
            .collect();
        let mut table = vec![usize::MAX; m * m];
        for (f_id, &(f, a)) in mors.iter().enumerate() {
            let b = x.act(f, a);
            for g in base.out_of(base.cod(f)) {
                let g_id = index[&(g, b)];
                table[g_id * m + f_id] = index[&(base.comp(g, f), a)];
            }
        }
        let identity = tags.iter().map(|&(o, a)| index[&(base.identity(o), a)]).collect();
        let inverse = mors
            .iter()
            .map(|&(g, a)| index[&(base.inverse(g), x.act(g, a))])
            .collect();
        let groupoid = Arc::new(FiniteGroupoid::from_parts(tags.len(), morphisms, table, identity, inverse));
        let projection = GroupoidFunctor {
            source: Arc::clone(&groupoid),
            target: Arc::clone(base),
            object_map: tags.iter().map(|&(o, _)| o).collect(),
            morphism_map: mors.iter().map(|&(g, _)| g).collect(),
        };
        Ok(Self {
            groupoid,
            projection,
            tags,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2() -> Arc<FiniteGroupoid> {
        Arc::new(FiniteGroupoid::from_group(&[vec![0, 1], vec![1, 0]]).unwrap())
    }

    fn s3() -> Arc<FiniteGroupoid> {
        Arc::new(FiniteGroupoid::from_perm_gens(&[vec![1, 0, 2], vec![1, 2, 0]]).unwrap())
    }

    fn regular(g: &Arc<FiniteGroupoid>) -> GSet {
        GSet::representable(g, 0)
    }

    fn natural_s3() -> GSet {
        // elements are generated as permutations of {0,1,2}; recover them by the action on a point set
        let g = s3();
        let perms = s3_perms();
        GSet::new(g, vec![3], perms).unwrap()
    }

    fn s3_perms() -> Vec<Vec<usize>> {
        // replay the closure order used by from_perm_gens
        let gens = [vec![1, 0, 2], vec![1, 2, 0]];
        let mut elems = vec![vec![0, 1, 2]];
        let mut i = 0;
        while i < elems.len() {
            for g in &gens {
                let next: Vec<usize> = elems[i].iter().map(|&p| g[p]).collect();
                if !elems.contains(&next) {
                    elems.push(next);
                }
            }
            i += 1;
        }
        elems
    }

    #[test]
    fn corrupted_actions_are_rejected() {
        let g = c2();
        assert!(GSet::new(g.clone(), vec![2], vec![vec![0, 1], vec![1, 0]]).is_ok());
        assert_eq!(
            GSet::new(g.clone(), vec![2], vec![vec![1, 0], vec![1, 0]]),
            Err(GSetError::IdentityNotTrivial { object: 0 })
        );
        assert_eq!(
            GSet::new(g.clone(), vec![2], vec![vec![0, 1], vec![0, 0]]),
            Err(GSetError::NotBijection { morphism: 1 })
        );
        let c3 = Arc::new(FiniteGroupoid::from_perm_gens(&[vec![1, 2, 0]]).unwrap());
        // order-3 elements acting as a transposition cannot be functorial
        let bad = GSet::new(c3, vec![2], vec![vec![0, 1], vec![1, 0], vec![1, 0]]);
        assert!(matches!(bad, Err(GSetError::NotFunctorial { .. })));
    }

    #[test]
    fn conjugation_monoids() {
        let cc2 = GMonoid::conjugation(&c2());
        assert_eq!(cc2.underlying().fibers(), &[2]);
        assert_eq!(cc2.underlying().action_map(1), &[0, 1]);
        assert!(cc2.is_conjugation());

        let p2 = Arc::new(FiniteGroupoid::pair(2).unwrap());
        let cp2 = GMonoid::conjugation(&p2);
        assert_eq!(cp2.underlying().fibers(), &[1, 1]);
        assert_eq!(cp2, GMonoid::trivial(&p2));

        let s = s3();
        let cs3 = GMonoid::conjugation(&s);
        assert_eq!(cs3.underlying().fiber(0), 6);
        let transpositions: Vec<usize> = (0..6).filter(|&a| a != cs3.unit(0) && cs3.mul(0, a, a) == cs3.unit(0)).collect();
        assert_eq!(transpositions.len(), 3);
        let orbit: std::collections::BTreeSet<usize> = (0..6).map(|g| cs3.act(g, transpositions[0])).collect();
        assert_eq!(orbit.into_iter().collect::<Vec<_>>(), transpositions);
        // revalidate through the checked constructor
        let monoids = (0..1).map(|x| cs3.monoid(x).clone()).collect();
        let actions = (0..6).map(|g| cs3.underlying().action_map(g).to_vec()).collect();
        GMonoid::new(s.clone(), monoids, actions).unwrap();
    }

    #[test]
    fn monoid_validation_rejects_non_homomorphism() {
        let g = c2();
        let cc2 = GMonoid::conjugation(&g);
        // swapping e and σ is a bijection but not a homomorphism
        let res = GMonoid::new(g.clone(), vec![cc2.monoid(0).clone()], vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(res, Err(GSetError::NotHomomorphism { morphism: 1 }));
        assert!(MonoidTable::new(&[vec![0, 1], vec![1, 0]], 1).is_err());
    }

    #[test]
    fn action_groupoids() {
        let g = c2();
        let reg = GSet::new(g.clone(), vec![2], vec![vec![0, 1], vec![1, 0]]).unwrap();
        let ag = reg.action_groupoid().unwrap();
        assert_eq!((ag.groupoid.object_count(), ag.groupoid.morphism_count()), (2, 4));
        assert!(ag.groupoid.is_connected());
        assert_eq!(ag.groupoid.loops(0).len(), 1);
        ag.projection.validate().unwrap();
        FiniteGroupoid::validate(&ag.groupoid.to_raw()).unwrap();

        let fixed = GSet::terminal(&g).action_groupoid().unwrap();
        assert_eq!((fixed.groupoid.object_count(), fixed.groupoid.morphism_count()), (1, 2));

        let nat = natural_s3().action_groupoid().unwrap();
        assert!(nat.groupoid.is_connected());
        assert_eq!(nat.groupoid.loops(0).len(), 2);
        FiniteGroupoid::validate(&nat.groupoid.to_raw()).unwrap();
        assert!(GSet::empty(&g).action_groupoid().is_err());
    }

    #[test]
    fn transitivity() {
        let g = c2();
        assert!(regular(&g).is_transitive().unwrap());
        let two_fixed = GSet::new(g.clone(), vec![2], vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert!(!two_fixed.is_transitive().unwrap());
        assert_eq!(GSet::empty(&g).is_transitive(), Err(GSetError::AllFibersEmpty));

        let c3 = Arc::new(FiniteGroupoid::from_perm_gens(&[vec![1, 2, 0]]).unwrap());
        let (u, _) = FiniteGroupoid::disjoint_union(&[g, c3]).unwrap();
        let one_side = GSet::new(u.clone(), vec![1, 0], vec![vec![0], vec![0], vec![], vec![], vec![]]).unwrap();
        assert!(one_side.is_transitive().unwrap());
    }

    #[test]
    fn orbit_decompositions() {
        let g = c2();
        let x = regular(&g).coproduct(&GSet::terminal(&g)).unwrap();
        let pieces = x.orbit_decomposition();
        let sizes: Vec<usize> = pieces.iter().map(|(p, _)| p.total_size()).collect();
        assert_eq!(sizes, vec![2, 1]);
        for (_, emb) in &pieces {
            emb.check().unwrap();
        }

        let p2 = Arc::new(FiniteGroupoid::pair(2).unwrap());
        assert_eq!(GSet::terminal(&p2).orbit_decomposition().len(), 1);

        let y = natural_s3().coproduct(&GSet::terminal(&s3())).unwrap();
        assert_eq!(y.orbit_decomposition().len(), 2);
    }

    #[test]
    fn products_and_coproducts() {
        let g = c2();
        let reg = regular(&g);
        let sq = reg.product(&reg).unwrap();
        assert_eq!(sq.fibers(), &[4]);
        assert_eq!(sq.orbits().len(), 2);
        let t = GSet::terminal(&g);
        assert_eq!(reg.product(&t).unwrap(), reg);
        assert_eq!(reg.coproduct(&GSet::empty(&g)).unwrap(), reg);
        assert_eq!(reg.product(&GSet::terminal(&s3())), Err(GSetError::BaseMismatch));
    }

    #[test]
    fn marks_counts() {
        let g = c2();
        let reg = regular(&g);
        assert_eq!(reg.marks(0, &[0]).unwrap(), 2);
        assert_eq!(reg.marks(0, &[0, 1]).unwrap(), 0);
        assert_eq!(GSet::terminal(&g).marks(0, &[0, 1]).unwrap(), 1);
        let s = s3();
        let nat = natural_s3();
        let t = (1..6).find(|&h| s.comp(h, h) == s.identity(0)).unwrap();
        let mut sub = vec![s.identity(0), t];
        sub.sort();
        assert_eq!(nat.marks(0, &sub).unwrap(), 1);
        assert!(matches!(nat.marks(0, &[t]), Err(GSetError::NotASubgroup(_))));
    }

    #[test]
    fn gmap_naturality() {
        let g = c2();
        let reg = regular(&g);
        let t = GSet::terminal(&g);
        assert!(GMap::new(reg.clone(), t.clone(), vec![vec![0, 0]]).is_ok());
        assert!(GMap::new(reg.clone(), reg.clone(), vec![vec![1, 0]]).is_ok());
        let fixed2 = GSet::new(g.clone(), vec![2], vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(
            GMap::new(reg, fixed2, vec![vec![0, 1]]),
            Err(GSetError::NotNatural { morphism: 1, element: 0 })
        );
    }
}
