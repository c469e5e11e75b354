//! Ring and basis values checked against independent computations.

use std::collections::BTreeSet;
use std::sync::Arc;

use crossed_burnside::classify::{self, brute_force_slice_basis};
use crossed_burnside::corpus;
use crossed_burnside::crossed::{self, CrossedGSet, SliceObject};
use crossed_burnside::ring::{self, RingElement};
use crossed_burnside::{FiniteGroupoid, GMonoid, GSet, MorphismId, ObjectId};

/// All subgroups of the loops at `r` contained in `within`, by brute force
/// over subsets closed under composition.
fn subgroups_within(g: &FiniteGroupoid, r: ObjectId, within: &[MorphismId]) -> Vec<Vec<MorphismId>> {
    let n = within.len();
    assert!(n <= 12);
    (0u32..1 << n)
        .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| within[i]).collect::<Vec<_>>())
        .filter(|s| s.contains(&g.identity(r)) && s.iter().all(|&a| s.iter().all(|&b| s.contains(&g.comp(a, b)))))
        .collect()
}

fn conj_classes_of_subgroups(g: &FiniteGroupoid, r: ObjectId, within: &[MorphismId]) -> usize {
    let subs = subgroups_within(g, r, within);
    let mut seen: BTreeSet<Vec<MorphismId>> = BTreeSet::new();
    let mut classes = 0;
    for h in &subs {
        if seen.contains(h) {
            continue;
        }
        classes += 1;
        for &x in within {
            let xi = g.inverse(x);
            let mut c: Vec<MorphismId> = h.iter().map(|&k| g.comp(x, g.comp(k, xi))).collect();
            c.sort_unstable();
            seen.insert(c);
        }
    }
    classes
}

/// `Σ_{[s]} #{subgroup classes of C(s)}` over conjugacy classes of `s`, for a
/// one-object group: the number of pairs `(H, s)` with `H ≤ C(s)` up to
/// simultaneous conjugation.
fn crossed_rank(g: &FiniteGroupoid) -> usize {
    let elems: Vec<MorphismId> = g.loops(0).to_vec();
    let mut seen = BTreeSet::new();
    let mut total = 0;
    for &s in &elems {
        if seen.contains(&s) {
            continue;
        }
        for &x in &elems {
            seen.insert(g.comp(x, g.comp(s, g.inverse(x))));
        }
        let centralizer: Vec<MorphismId> = elems.iter().copied().filter(|&x| g.comp(x, s) == g.comp(s, x)).collect();
        total += conj_classes_of_subgroups(g, 0, &centralizer);
    }
    total
}

#[test]
fn crossed_ranks_match_centralizer_count() {
    for (name, g) in corpus::small_groups() {
        let (r, _) = ring::crossed_burnside_ring(&Arc::new(GMonoid::conjugation(&g))).unwrap();
        assert_eq!(r.dim(), crossed_rank(&g), "{name}");
        let (b, _) = ring::burnside_ring(&g).unwrap();
        assert_eq!(b.dim(), conj_classes_of_subgroups(&g, 0, g.loops(0)), "{name}");
    }
}

#[test]
fn stated_dimensions() {
    let dim = |g: &Arc<FiniteGroupoid>| ring::crossed_burnside_ring(&Arc::new(GMonoid::conjugation(g))).unwrap().0.dim();
    assert_eq!(dim(&corpus::trivial()), 1);
    assert_eq!(dim(&corpus::c2()), 4);
    assert_eq!(dim(&corpus::c3()), 6);
    assert_eq!(dim(&corpus::s3()), 8);
    assert_eq!(dim(&corpus::union(&[corpus::c2(), corpus::c3()])), 10);
    assert_eq!(dim(&corpus::union(&[corpus::c2(), corpus::s3()])), 12);
    assert_eq!(dim(&corpus::union(&[corpus::product(&corpus::c2(), &corpus::pair(2)), corpus::c3()])), 10);
    assert_eq!(dim(&corpus::product(&corpus::c2(), &corpus::pair(3))), 4);
    for n in 1..=4 {
        assert_eq!(dim(&corpus::pair(n)), 1);
    }
    assert_eq!(ring::burnside_ring(&corpus::s3()).unwrap().0.dim(), 4);
}

/// Fixed points of `K ≤ 𝒢_r` over `r`, split by label: additive in the
/// object, and turning the tensor product into convolution over `S(r)`.
fn crossed_marks(obj: &SliceObject, r: ObjectId, k: &[MorphismId]) -> Vec<i64> {
    let mut v = vec![0i64; obj.target().fiber(r)];
    for a in 0..obj.carrier().fiber(r) {
        if k.iter().all(|&h| obj.carrier().act(h, a) == a) {
            v[obj.label(r, a)] += 1;
        }
    }
    v
}

fn convolve(weight: &GMonoid, r: ObjectId, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len()];
    for (s, &x) in a.iter().enumerate() {
        for (t, &y) in b.iter().enumerate() {
            out[weight.mul(r, s, t)] += x * y;
        }
    }
    out
}

fn check_against_marks(weight: &Arc<GMonoid>) {
    let (ring, catalog) = ring::crossed_burnside_ring(weight).unwrap();
    let base = weight.base();
    for r in base.components().representatives() {
        for k in subgroups_within(base, r, base.loops(r)) {
            let marks: Vec<Vec<i64>> = catalog.objects().iter().map(|o| crossed_marks(o, r, &k)).collect();
            for i in 0..ring.dim() {
                for j in 0..ring.dim() {
                    let expected = convolve(weight, r, &marks[i], &marks[j]);
                    let mut got = vec![0i64; expected.len()];
                    for (c, m) in ring.row(i, j).iter().zip(&marks) {
                        for (g, &v) in got.iter_mut().zip(m) {
                            *g += c * v;
                        }
                    }
                    assert_eq!(got, expected, "e{i}·e{j} at object {r}, K = {k:?}");
                }
            }
        }
    }
    let unit = CrossedGSet::unit_object(weight);
    assert_eq!(
        ring.unit(),
        classify::express_in_basis(unit.as_slice(), &catalog)
            .unwrap()
            .iter()
            .map(|&c| c as i64)
            .collect::<Vec<_>>()
    );
}

#[test]
fn structure_constants_agree_with_marks() {
    for (_, g) in corpus::standard() {
        check_against_marks(&Arc::new(GMonoid::conjugation(&g)));
        check_against_marks(&Arc::new(GMonoid::trivial(&g)));
    }
}

#[test]
fn plain_burnside_ring_agrees_with_table_of_marks() {
    for (name, g) in corpus::standard() {
        let (r, basis) = ring::burnside_ring(&g).unwrap();
        for rep in g.components().representatives() {
            for k in subgroups_within(&g, rep, g.loops(rep)) {
                let marks: Vec<i64> = basis.objects().iter().map(|x| x.marks(rep, &k).unwrap() as i64).collect();
                for i in 0..r.dim() {
                    for j in 0..r.dim() {
                        let got: i64 = r.row(i, j).iter().zip(&marks).map(|(c, m)| c * m).sum();
                        assert_eq!(got, marks[i] * marks[j], "{name}: e{i}·e{j}, K = {k:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn c2_tables() {
    let (b, _) = ring::burnside_ring(&corpus::c2()).unwrap();
    let b = Arc::new(b);
    let free = RingElement::basis(&b, 0);
    let point = RingElement::basis(&b, 1);
    assert_eq!(free.mul(&free).unwrap().coords(), &[2, 0]);
    assert_eq!(free.mul(&point).unwrap().coords(), &[1, 0]);
    let sum = free.add(&point).unwrap();
    assert_eq!(sum.mul(&sum).unwrap().coords(), &[4, 1]);

    let w = Arc::new(GMonoid::conjugation(&corpus::c2()));
    let (c, catalog) = ring::crossed_burnside_ring(&w).unwrap();
    let order: Vec<(usize, usize)> = catalog.entries().iter().map(|e| (e.subgroup.len(), e.label)).collect();
    assert_eq!(order, vec![(1, 0), (1, 1), (2, 0), (2, 1)]);
    assert_eq!(c.row(0, 0), &[2, 0, 0, 0]);
    assert_eq!(c.row(3, 3), &[0, 0, 1, 0]);
}

#[test]
fn ring_element_mismatch_is_an_error() {
    let (a, _) = ring::burnside_ring(&corpus::c2()).unwrap();
    let (b, _) = ring::burnside_ring(&corpus::c3()).unwrap();
    let (a, b) = (Arc::new(a), Arc::new(b));
    let x = RingElement::one(&a);
    let y = RingElement::one(&b);
    assert_eq!(x.add(&y).unwrap_err(), ring::RingError::RingMismatch);
    assert!(RingElement::new(&a, vec![1]).is_err());
}

#[test]
fn hadamard_dimensions() {
    let c2 = corpus::c2();
    let (r, _) = ring::hadamard_ring(&GSet::representable(&c2, 0)).unwrap();
    assert_eq!(r.dim(), 1);
    let (_, natural) = corpus::s3_natural();
    let (r, _) = ring::hadamard_ring(&natural).unwrap();
    assert_eq!(r.dim(), 2);
    for (_, g) in corpus::standard() {
        let (over_point, _) = ring::hadamard_ring(&GSet::terminal(&g)).unwrap();
        let (plain, _) = ring::burnside_ring(&g).unwrap();
        assert_eq!(over_point.dim(), plain.dim());
        assert!(ring::find_basis_isomorphism(&plain, &over_point).is_some());
    }
}

#[test]
fn oracle_examples() {
    let w = GMonoid::conjugation(&corpus::c3());
    assert_eq!(brute_force_slice_basis(w.underlying(), 3).unwrap().len(), 6);
    let t = GMonoid::trivial(&corpus::trivial());
    assert_eq!(brute_force_slice_basis(t.underlying(), 1).unwrap().len(), 1);
    // the oracle covers groupoids with several objects too
    let g = corpus::union(&[corpus::product(&corpus::c2(), &corpus::pair(2)), corpus::c3()]);
    let w = GMonoid::conjugation(&g);
    let oracle = brute_force_slice_basis(w.underlying(), 4).unwrap();
    let catalog = classify::enumerate_basis(&w);
    assert_eq!(oracle.len(), 10);
    assert!(classify::match_oracle(&oracle, &catalog).unwrap().is_some());
}

#[test]
fn one_point_carriers_over_s3_need_central_labels() {
    let g = corpus::s3();
    let w = Arc::new(GMonoid::conjugation(&g));
    let point = GSet::terminal(&g);
    for s in 1..6 {
        assert!(CrossedGSet::new(point.clone(), Arc::clone(&w), vec![vec![s]]).is_err());
    }
    assert!(CrossedGSet::new(point, w, vec![vec![0]]).is_ok());
}

#[test]
fn s3_tensor_multiplies_labels() {
    let g = corpus::s3();
    let w = Arc::new(GMonoid::conjugation(&g));
    let t = w.underlying();
    let transpositions: Vec<MorphismId> = (1..6).filter(|&k| g.comp(k, k) == 0).collect();
    let (a, b) = (transpositions[0], transpositions[1]);
    let x = CrossedGSet::from_slice(classify::induced(t, 0, &[0, a], a), Arc::clone(&w)).unwrap();
    let y = CrossedGSet::from_slice(classify::induced(t, 0, &[0, b], b), Arc::clone(&w)).unwrap();
    let xy = x.tensor(&y).unwrap();
    for (i, j) in (0..3).flat_map(|i| (0..3).map(move |j| (i, j))) {
        let expected = g.comp(x.label(0, i), y.label(0, j));
        assert_eq!(xy.label(0, i * 3 + j), expected);
    }
    // the pair with both base points carries the label a·b
    assert!((0..9).any(|e| xy.label(0, e) == g.comp(a, b)));
}

#[test]
fn braiding_on_s3_acts_by_the_label() {
    let g = corpus::s3();
    let w = Arc::new(GMonoid::conjugation(&g));
    let t = w.underlying();
    let a = (1..6).find(|&k| g.comp(k, k) == 0).unwrap();
    let x = CrossedGSet::from_slice(classify::induced(t, 0, &[0, a], a), Arc::clone(&w)).unwrap();
    let y = CrossedGSet::trivial_label_embed(&GSet::representable(&g, 0), &w).unwrap();
    let eta = crossed::braiding(&x, &y).unwrap();
    eta.check().unwrap();
    for i in 0..3 {
        let loop_id = g.loops(0)[x.label(0, i)];
        for j in 0..6 {
            assert_eq!(eta.components[0][i * 6 + j], y.carrier().act(loop_id, j) * 3 + i);
        }
    }
    let inv = crossed::braiding_inverse(&x, &y).unwrap();
    assert_eq!(eta.then(&inv), crossed_burnside::CrossedMap::identity(&x.tensor(&y).unwrap()));
}
