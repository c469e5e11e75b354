//! Seeded random crossed G-sets for property checks.
//!
//! Samples are built orbit by orbit: pick a component, a subgroup `H` of the
//! isotropy group at its representative small enough that the orbit fits,
//! and an `H`-fixed label; induce; then shuffle each fiber.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify;
use crate::crossed::CrossedGSet;
use crate::groupoid::{MorphismId, ObjectId};
use crate::gset::GMonoid;
use crate::subgroups;

pub const MAX_FIBER: usize = 5;
const MAX_ORBITS: usize = 3;

pub struct Sampler {
    weight: Arc<GMonoid>,
    /// Per component representative, its subgroups as base loop ids.
    subgroups: Vec<(ObjectId, Vec<Vec<MorphismId>>)>,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(weight: &Arc<GMonoid>, seed: u64) -> Self {
        let base = weight.base();
        let subgroups = base
            .components()
            .representatives()
            .into_iter()
            .map(|r| {
                let (group, inclusion) = base.isotropy_group(r).expect("representative exists");
                let subs = subgroups::all_subgroups(&group)
                    .into_iter()
                    .map(|h| h.iter().map(|&i| inclusion.morphism_map[i]).collect())
                    .collect();
                (r, subs)
            })
            .collect();
        Self {
            weight: Arc::clone(weight),
            subgroups,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// One crossed G-set with at most [`MAX_FIBER`] elements per fiber.
    pub fn next_crossed(&mut self) -> CrossedGSet {
        let base = Arc::clone(self.weight.base());
        let target = self.weight.underlying().clone();
        let mut acc = CrossedGSet::empty(&self.weight);
        let orbits = self.rng.gen_range(1..=MAX_ORBITS);
        for _ in 0..orbits {
            let (r, subs) = &self.subgroups[self.rng.gen_range(0..self.subgroups.len())];
            let order = base.loops(*r).len();
            let room = (0..base.object_count())
                .filter(|&w| !base.hom(*r, w).is_empty())
                .map(|w| MAX_FIBER - acc.carrier().fiber(w))
                .min()
                .unwrap_or(0);
            let fitting: Vec<&Vec<MorphismId>> = subs.iter().filter(|h| order / h.len() <= room).collect();
            let Some(h) = fitting.choose(&mut self.rng) else {
                continue;
            };
            let fixed: Vec<usize> = (0..target.fiber(*r))
                .filter(|&s| h.iter().all(|&k| target.act(k, s) == s))
                .collect();
            let s = *fixed.choose(&mut self.rng).expect("the unit is fixed");
            let piece = classify::induced(&target, *r, h, s);
            let piece = CrossedGSet::from_slice(piece, Arc::clone(&self.weight)).expect("same weight");
            acc = acc.coproduct(&piece).expect("same weight");
        }
        let perm: Vec<Vec<usize>> = acc
            .carrier()
            .fibers()
            .iter()
            .map(|&n| {
                let mut p: Vec<usize> = (0..n).collect();
                p.shuffle(&mut self.rng);
                p
            })
            .collect();
        acc.relabel(&perm)
    }
}

/// `count` crossed G-sets from a generator seeded with `seed`.
pub fn sample_crossed_sets(weight: &Arc<GMonoid>, count: usize, seed: u64) -> Vec<CrossedGSet> {
    let mut s = Sampler::new(weight, seed);
    (0..count).map(|_| s.next_crossed()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn samples_are_valid_and_reproducible() {
        for (_, g) in corpus::standard() {
            let w = Arc::new(GMonoid::conjugation(&g));
            let a = sample_crossed_sets(&w, 10, 7);
            for c in &a {
                CrossedGSet::new(c.carrier().clone(), Arc::clone(&w), c.labels().to_vec()).unwrap();
                assert!(c.carrier().fibers().iter().all(|&n| n <= MAX_FIBER));
            }
            assert_eq!(a, sample_crossed_sets(&w, 10, 7));
        }
    }
}
