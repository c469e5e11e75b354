//! Small named groupoids and G-sets used throughout the tests and the CLI.

use std::sync::Arc;

use crate::groupoid::FiniteGroupoid;
use crate::gset::GSet;

pub fn trivial() -> Arc<FiniteGroupoid> {
    cyclic(1)
}

pub fn cyclic(n: usize) -> Arc<FiniteGroupoid> {
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    Arc::new(FiniteGroupoid::from_group(&table).expect("cyclic table"))
}

pub fn c2() -> Arc<FiniteGroupoid> {
    cyclic(2)
}

pub fn c3() -> Arc<FiniteGroupoid> {
    cyclic(3)
}

fn perm(gens: &[Vec<usize>]) -> Arc<FiniteGroupoid> {
    Arc::new(FiniteGroupoid::from_perm_gens(gens).expect("valid permutations"))
}

const S3_GENS: [[usize; 3]; 2] = [[1, 0, 2], [1, 2, 0]];

pub fn s3() -> Arc<FiniteGroupoid> {
    perm(&S3_GENS.map(|g| g.to_vec()))
}

/// Symmetries of the square, acting on its corners.
pub fn d4() -> Arc<FiniteGroupoid> {
    perm(&[vec![1, 2, 3, 0], vec![0, 3, 2, 1]])
}

/// Quaternion group from unit quaternion multiplication; element `2u + s`
/// is `(-1)^s·u` with `u ∈ {1, i, j, k}`.
pub fn q8() -> Arc<FiniteGroupoid> {
    // (unit, sign) of u·v for u, v ∈ {1, i, j, k}
    const UNITS: [[(usize, usize); 4]; 4] = [
        [(0, 0), (1, 0), (2, 0), (3, 0)],
        [(1, 0), (0, 1), (3, 0), (2, 1)],
        [(2, 0), (3, 1), (0, 1), (1, 0)],
        [(3, 0), (2, 0), (1, 1), (0, 1)],
    ];
    let table: Vec<Vec<usize>> = (0..8)
        .map(|a: usize| {
            (0..8)
                .map(|b: usize| {
                    let (u, s) = UNITS[a / 2][b / 2];
                    2 * u + (s + a % 2 + b % 2) % 2
                })
                .collect()
        })
        .collect();
    Arc::new(FiniteGroupoid::from_group(&table).expect("quaternion table"))
}

pub fn pair(n: usize) -> Arc<FiniteGroupoid> {
    Arc::new(FiniteGroupoid::pair(n).expect("n > 0"))
}

pub fn product(g: &FiniteGroupoid, h: &FiniteGroupoid) -> Arc<FiniteGroupoid> {
    Arc::new(FiniteGroupoid::direct_product(g, h))
}

pub fn union(parts: &[Arc<FiniteGroupoid>]) -> Arc<FiniteGroupoid> {
    FiniteGroupoid::disjoint_union(parts).expect("non-empty").0
}

/// Every group of order at most 8, up to isomorphism, with a short name.
pub fn small_groups() -> Vec<(&'static str, Arc<FiniteGroupoid>)> {
    let (c2, c4) = (cyclic(2), cyclic(4));
    vec![
        ("trivial", trivial()),
        ("C2", c2.clone()),
        ("C3", cyclic(3)),
        ("C4", c4.clone()),
        ("C2xC2", product(&c2, &c2)),
        ("C5", cyclic(5)),
        ("C6", cyclic(6)),
        ("S3", s3()),
        ("C7", cyclic(7)),
        ("C8", cyclic(8)),
        ("C4xC2", product(&c4, &c2)),
        ("C2xC2xC2", product(&product(&c2, &c2), &c2)),
        ("D4", d4()),
        ("Q8", q8()),
    ]
}

/// The groupoids every validation suite runs on.
pub fn standard() -> Vec<(&'static str, Arc<FiniteGroupoid>)> {
    let mut out = vec![
        ("trivial", trivial()),
        ("C2", c2()),
        ("C3", c3()),
        ("S3", s3()),
        ("D4", d4()),
        ("Q8", q8()),
    ];
    out.extend([("Pair(1)", pair(1)), ("Pair(2)", pair(2)), ("Pair(3)", pair(3)), ("Pair(4)", pair(4))]);
    let c2_pair2 = product(&c2(), &pair(2));
    out.push(("C2xPair(2)", c2_pair2.clone()));
    out.push(("C2+S3", union(&[c2(), s3()])));
    out.push(("(C2xPair(2))+C3", union(&[c2_pair2, c3()])));
    out
}

/// Looks up a groupoid by the names used in [`standard`] and [`small_groups`],
/// plus `C<n>` and `Pair(<n>)`.
pub fn by_name(name: &str) -> Option<Arc<FiniteGroupoid>> {
    if let Some((_, g)) = standard().into_iter().chain(small_groups()).find(|(n, _)| *n == name) {
        return Some(g);
    }
    if let Some(n) = name.strip_prefix('C').and_then(|s| s.parse::<usize>().ok()) {
        return (n > 0).then(|| cyclic(n));
    }
    let n = name.strip_prefix("Pair(")?.strip_suffix(')')?.parse::<usize>().ok()?;
    (n > 0).then(|| pair(n))
}

/// `S3` together with its action on `{0, 1, 2}`.
pub fn s3_natural() -> (Arc<FiniteGroupoid>, GSet) {
    let (g, elems) = FiniteGroupoid::perm_group(&S3_GENS.map(|g| g.to_vec())).expect("valid permutations");
    let g = Arc::new(g);
    let set = GSet::new(Arc::clone(&g), vec![3], elems).expect("permutation action");
    (g, set)
}
