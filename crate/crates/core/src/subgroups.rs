//! Subgroups of small finite groups, given as one-object groupoids.
//!
//! Subgroups are sorted vectors of element ids. Enumeration closes the
//! trivial subgroup under "join with one more element" until nothing new
//! appears, which reaches every subgroup since each is finitely generated.
//! Intended for groups of order at most a few dozen.

use std::collections::BTreeSet;

use crate::groupoid::{FiniteGroupoid, MorphismId};

pub type Subgroup = Vec<MorphismId>;

/// Smallest subgroup containing `gens`.
pub fn closure(group: &FiniteGroupoid, gens: &[MorphismId]) -> Subgroup {
    let mut elems: BTreeSet<MorphismId> = BTreeSet::from([group.identity(0)]);
    let mut frontier: Vec<MorphismId> = vec![group.identity(0)];
    while let Some(a) = frontier.pop() {
        for &g in gens {
            let next = group.comp(g, a);
            if elems.insert(next) {
                frontier.push(next);
            }
        }
    }
    elems.into_iter().collect()
}

pub fn is_subgroup(group: &FiniteGroupoid, set: &[MorphismId]) -> bool {
    let members: BTreeSet<MorphismId> = set.iter().copied().collect();
    members.contains(&group.identity(0))
        && members.iter().all(|&a| {
            members.contains(&group.inverse(a)) && members.iter().all(|&b| members.contains(&group.comp(a, b)))
        })
}

/// Every subgroup, ordered by (order, element list).
pub fn all_subgroups(group: &FiniteGroupoid) -> Vec<Subgroup> {
    let n = group.morphism_count();
    let mut found: BTreeSet<Subgroup> = BTreeSet::from([vec![group.identity(0)]]);
    let mut frontier: Vec<Subgroup> = found.iter().cloned().collect();
    while let Some(h) = frontier.pop() {
        for g in 0..n {
            if h.binary_search(&g).is_ok() {
                continue;
            }
            let mut gens = h.clone();
            gens.push(g);
            let joined = closure(group, &gens);
            if found.insert(joined.clone()) {
                frontier.push(joined);
            }
        }
    }
    let mut out: Vec<Subgroup> = found.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// `g H g⁻¹`, sorted.
pub fn conjugate(group: &FiniteGroupoid, h: &[MorphismId], g: MorphismId) -> Subgroup {
    let gi = group.inverse(g);
    let mut out: Subgroup = h.iter().map(|&a| group.comp(g, group.comp(a, gi))).collect();
    out.sort_unstable();
    out
}

pub fn normalizer(group: &FiniteGroupoid, h: &[MorphismId]) -> Vec<MorphismId> {
    (0..group.morphism_count())
        .filter(|&g| conjugate(group, h, g) == h)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupClass {
    /// Lexicographically least member of the class.
    pub representative: Subgroup,
    pub members: Vec<Subgroup>,
}

impl SubgroupClass {
    pub fn order(&self) -> usize {
        self.representative.len()
    }
}

/// Conjugacy classes of subgroups, ordered by (order, representative).
pub fn subgroup_classes(group: &FiniteGroupoid) -> Vec<SubgroupClass> {
    let mut seen: BTreeSet<Subgroup> = BTreeSet::new();
    let mut classes = Vec::new();
    for h in all_subgroups(group) {
        if seen.contains(&h) {
            continue;
        }
        let members: BTreeSet<Subgroup> = (0..group.morphism_count())
            .map(|g| conjugate(group, &h, g))
            .collect();
        seen.extend(members.iter().cloned());
        let members: Vec<Subgroup> = members.into_iter().collect();
        classes.push(SubgroupClass {
            representative: members[0].clone(),
            members,
        });
    }
    classes.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.representative.cmp(&b.representative))
    });
    classes
}
