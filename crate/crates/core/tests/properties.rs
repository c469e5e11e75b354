use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crossed_burnside::classify::{self, BasisCatalog, Fingerprint};
use crossed_burnside::corpus;
use crossed_burnside::crossed::{
    self, Axiom, Coherence, CrossedError, CrossedGSet, CrossedMap, StandardCoherence, TuplePlan,
};
use crossed_burnside::ring::{self, RingElement, RingPresentation};
use crossed_burnside::sample::{sample_crossed_sets, Sampler};
use crossed_burnside::{FiniteGroupoid, GMonoid, GSet};

struct Entry {
    name: String,
    weight: Arc<GMonoid>,
    ring: Arc<RingPresentation>,
    catalog: BasisCatalog,
}

fn rings() -> &'static [Entry] {
    static CACHE: OnceLock<Vec<Entry>> = OnceLock::new();
    CACHE.get_or_init(|| {
        corpus::standard()
            .into_iter()
            .map(|(name, g)| {
                let weight = Arc::new(GMonoid::conjugation(&g));
                let (ring, catalog) = ring::crossed_burnside_ring(&weight).unwrap();
                Entry {
                    name: name.to_string(),
                    weight,
                    ring: Arc::new(ring),
                    catalog,
                }
            })
            .collect()
    })
}

fn sample(weight: &Arc<GMonoid>, seed: u64) -> CrossedGSet {
    Sampler::new(weight, seed).next_crossed()
}

fn shuffle(c: &CrossedGSet, seed: u64) -> CrossedGSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let perm: Vec<Vec<usize>> = c
        .carrier()
        .fibers()
        .iter()
        .map(|&n| {
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut rng);
            p
        })
        .collect();
    c.relabel(&perm)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for at in 0..n {
            let mut q = p.clone();
            q.insert(at, n - 1);
            out.push(q);
        }
    }
    out
}

/// Tries every fiberwise bijection.
fn isomorphic_by_search(a: &CrossedGSet, b: &CrossedGSet) -> bool {
    if a.carrier().fibers() != b.carrier().fibers() {
        return false;
    }
    let per_fiber: Vec<Vec<Vec<usize>>> = a.carrier().fibers().iter().map(|&n| permutations(n)).collect();
    let mut choice = vec![0usize; per_fiber.len()];
    loop {
        let components = choice.iter().zip(&per_fiber).map(|(&i, ps)| ps[i].clone()).collect();
        if CrossedMap::new(a.clone(), b.clone(), components).is_ok() {
            return true;
        }
        let mut k = 0;
        loop {
            if k == choice.len() {
                return false;
            }
            choice[k] += 1;
            if choice[k] < per_fiber[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

fn search_size(c: &CrossedGSet) -> usize {
    c.carrier().fibers().iter().map(|&n| (1..=n).product::<usize>()).product()
}

fn corpus_index() -> impl Strategy<Value = usize> {
    0..corpus::standard().len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn isomorphism_agrees_with_exhaustive_search(gi in corpus_index(), s1 in any::<u64>(), s2 in any::<u64>(), p in any::<u64>(), same in any::<bool>()) {
        let e = &rings()[gi];
        let a = sample(&e.weight, s1);
        let b = if same { shuffle(&a, p) } else { sample(&e.weight, s2) };
        prop_assume!(search_size(&a) <= 20_000);
        let found = classify::are_isomorphic(&a, &b).unwrap();
        prop_assert_eq!(found.is_some(), isomorphic_by_search(&a, &b), "{}", e.name);
        if let Some(f) = found {
            f.check().unwrap();
            prop_assert!(f.is_isomorphism());
        }
    }

    #[test]
    fn isomorphism_is_reflexive_and_symmetric(gi in corpus_index(), s1 in any::<u64>(), s2 in any::<u64>(), p in any::<u64>()) {
        let e = &rings()[gi];
        let a = sample(&e.weight, s1);
        let b = sample(&e.weight, s2);
        prop_assert!(classify::are_isomorphic(&a, &a).unwrap().is_some());
        let moved = shuffle(&a, p);
        let f = classify::are_isomorphic(&a, &moved).unwrap().expect("relabelling is an isomorphism");
        let g = f.inverse().unwrap();
        prop_assert_eq!(f.then(&g), CrossedMap::identity(&a));
        prop_assert_eq!(
            classify::are_isomorphic(&a, &b).unwrap().is_some(),
            classify::are_isomorphic(&b, &a).unwrap().is_some()
        );
    }

    #[test]
    fn fingerprint_and_coordinates_survive_relabelling(gi in corpus_index(), s in any::<u64>(), p in any::<u64>()) {
        let e = &rings()[gi];
        let a = sample(&e.weight, s);
        let moved = shuffle(&a, p);
        prop_assert_eq!(Fingerprint::of(a.as_slice()), Fingerprint::of(moved.as_slice()));
        prop_assert_eq!(
            classify::express_in_basis(a.as_slice(), &e.catalog).unwrap(),
            classify::express_in_basis(moved.as_slice(), &e.catalog).unwrap()
        );
    }

    #[test]
    fn coordinates_are_additive_and_reconstruct(gi in corpus_index(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let e = &rings()[gi];
        let a = sample(&e.weight, s1);
        let b = sample(&e.weight, s2);
        let ca = classify::express_in_basis(a.as_slice(), &e.catalog).unwrap();
        let cb = classify::express_in_basis(b.as_slice(), &e.catalog).unwrap();
        let sum = classify::express_in_basis(a.coproduct(&b).unwrap().as_slice(), &e.catalog).unwrap();
        prop_assert_eq!(sum, ca.iter().zip(&cb).map(|(x, y)| x + y).collect::<Vec<_>>());
        let rebuilt = CrossedGSet::from_slice(classify::reconstruct(&ca, &e.catalog), Arc::clone(&e.weight)).unwrap();
        prop_assert!(classify::are_isomorphic(&a, &rebuilt).unwrap().is_some());
    }

    #[test]
    fn coordinates_are_multiplicative(gi in corpus_index(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let e = &rings()[gi];
        let a = sample(&e.weight, s1);
        let b = sample(&e.weight, s2);
        let coords = |c: &CrossedGSet| {
            let v = classify::express_in_basis(c.as_slice(), &e.catalog).unwrap();
            RingElement::new(&e.ring, v.into_iter().map(|x| x as i64).collect()).unwrap()
        };
        let product = coords(&a).mul(&coords(&b)).unwrap();
        let direct = coords(&a.tensor(&b).unwrap());
        prop_assert_eq!(direct.coords(), product.coords());
    }

    #[test]
    fn ring_arithmetic_laws(gi in corpus_index(), xs in proptest::collection::vec(-3i64..4, 29 * 3)) {
        let e = &rings()[gi];
        let d = e.ring.dim();
        let el = |k: usize| RingElement::new(&e.ring, xs[k * 29..k * 29 + d].to_vec()).unwrap();
        let (x, y, z) = (el(0), el(1), el(2));
        let c = |r: RingElement| r.coords().to_vec();
        prop_assert_eq!(c(x.mul(&y).unwrap().mul(&z).unwrap()), c(x.mul(&y.mul(&z).unwrap()).unwrap()));
        prop_assert_eq!(c(x.mul(&y.add(&z).unwrap()).unwrap()), c(x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap()));
        prop_assert_eq!(c(x.mul(&y).unwrap()), c(y.mul(&x).unwrap()));
        prop_assert_eq!(c(x.mul(&RingElement::one(&e.ring)).unwrap()), c(x));
    }

    #[test]
    fn unit_labels_commute_with_products(gi in corpus_index(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let e = &rings()[gi];
        let x = sample(&e.weight, s1).forget();
        let y = sample(&e.weight, s2).forget();
        let fx = CrossedGSet::trivial_label_embed(&x, &e.weight).unwrap();
        let fy = CrossedGSet::trivial_label_embed(&y, &e.weight).unwrap();
        prop_assert_eq!(fx.forget(), x.clone());
        let fxy = CrossedGSet::trivial_label_embed(&x.product(&y).unwrap(), &e.weight).unwrap();
        prop_assert_eq!(fxy, fx.tensor(&fy).unwrap());
    }

    #[test]
    fn braiding_twice_acts_by_labels(gi in corpus_index(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let e = &rings()[gi];
        let base = e.weight.base();
        let x = sample(&e.weight, s1);
        let y = sample(&e.weight, s2);
        let there = crossed::braiding(&x, &y).unwrap();
        there.check().unwrap();
        let twice = there.then(&crossed::braiding(&y, &x).unwrap());
        for w in 0..base.object_count() {
            let lw = |s: usize| base.loops(w)[s];
            let ny = y.carrier().fiber(w);
            for i in 0..x.carrier().fiber(w) {
                for j in 0..ny {
                    let moved_y = y.carrier().act(lw(x.label(w, i)), j);
                    let moved_x = x.carrier().act(lw(y.label(w, moved_y)), i);
                    prop_assert_eq!(twice.components[w][i * ny + j], moved_x * ny + moved_y);
                }
            }
        }
    }

    #[test]
    fn transport_respects_tensor(gi in corpus_index(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let e = &rings()[gi];
        prop_assume!(e.weight.base().is_connected());
        let x = sample(&e.weight, s1);
        let y = sample(&e.weight, s2);
        let z = e.weight.base().object_count() - 1;
        let lhs = crossed::restrict_to_isotropy(&x.tensor(&y).unwrap(), z).unwrap();
        let rhs = crossed::restrict_to_isotropy(&x, z).unwrap().tensor(&crossed::restrict_to_isotropy(&y, z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let back = crossed::round_trip_iso(&x, z).unwrap();
        back.check().unwrap();
        prop_assert!(back.is_isomorphism());
    }
}

#[test]
fn standard_coherence_holds_and_symmetry_tracks_isotropy() {
    for e in rings() {
        let pool = sample_crossed_sets(&e.weight, 6, 11);
        let report = crossed::check_monoidal_axioms(&pool, &TuplePlan::Random { count: 40, seed: 3 });
        for axiom in [Axiom::Pentagon, Axiom::Triangle, Axiom::Distributivity, Axiom::Hexagon, Axiom::UnitorBraiding] {
            assert!(report.outcome(axiom).unwrap().holds(), "{} {:?}", e.name, axiom);
        }
        let base = e.weight.base();
        let trivial_isotropy = (0..base.object_count()).all(|x| base.loops(x).len() == 1);
        if trivial_isotropy {
            assert!(report.outcome(Axiom::Symmetry).unwrap().holds(), "{}", e.name);
        }
    }
}

#[test]
fn symmetry_fails_on_c2() {
    let w = Arc::new(GMonoid::conjugation(&corpus::c2()));
    let t = w.underlying();
    let free_sigma = CrossedGSet::from_slice(classify::induced(t, 0, &[0], 1), Arc::clone(&w)).unwrap();
    let regular = CrossedGSet::trivial_label_embed(&GSet::representable(w.base(), 0), &w).unwrap();
    let unlabelled = crossed::check_monoidal_axioms(std::slice::from_ref(&regular), &TuplePlan::Exhaustive);
    assert!(unlabelled.outcome(Axiom::Symmetry).unwrap().holds());
    let report = crossed::check_monoidal_axioms(&[free_sigma, regular], &TuplePlan::Exhaustive);
    let witness = report.outcome(Axiom::Symmetry).unwrap().witness.clone().expect("a counterexample");
    assert!(witness.samples.contains(&0));
    assert!(report.outcome(Axiom::Hexagon).unwrap().holds());
}

/// The standard associator followed by the twist `a ↦ label(a)·a`: a crossed
/// isomorphism, but not a coherent one.
struct Twisted;

fn twist(c: &CrossedGSet) -> CrossedMap {
    let base = c.base();
    let components = (0..base.object_count())
        .map(|w| (0..c.carrier().fiber(w)).map(|a| c.carrier().act(base.loops(w)[c.label(w, a)], a)).collect())
        .collect();
    CrossedMap::new(c.clone(), c.clone(), components).unwrap()
}

impl Coherence for Twisted {
    fn associator(&self, x: &CrossedGSet, y: &CrossedGSet, z: &CrossedGSet) -> Result<CrossedMap, CrossedError> {
        let a = StandardCoherence.associator(x, y, z)?;
        let t = twist(&a.target);
        Ok(a.then(&t))
    }

    fn left_unitor(&self, x: &CrossedGSet) -> Result<CrossedMap, CrossedError> {
        StandardCoherence.left_unitor(x)
    }

    fn right_unitor(&self, x: &CrossedGSet) -> Result<CrossedMap, CrossedError> {
        StandardCoherence.right_unitor(x)
    }
}

#[test]
fn corrupted_associator_is_caught() {
    let g: Arc<FiniteGroupoid> = corpus::s3();
    let w = Arc::new(GMonoid::conjugation(&g));
    let pool = sample_crossed_sets(&w, 8, 5);
    let report = crossed::check_monoidal_axioms_with(&pool, &TuplePlan::Random { count: 100, seed: 0 }, &Twisted);
    let pentagon = report.outcome(Axiom::Pentagon).unwrap();
    let witness = pentagon.witness.as_ref().expect("the twisted associator breaks the pentagon");
    assert_eq!(witness.samples.len(), 4);
    assert!(witness.lhs.is_some() && witness.lhs != witness.rhs);
    assert!(!report.outcome(Axiom::Triangle).unwrap().holds());
}
