//! Seeded sampling of growth trajectories.
//!
//! Each step draws a 64-bit integer `k` and picks the first target whose
//! cumulative probability `c` satisfies `k / 2^64 < c`. The comparison is
//! exact: `k < ⌈c · 2^64⌉`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

use super::growth::growth_kernel;
use crate::partition::Partition;
use crate::rat::Rat;

#[derive(Debug)]
pub struct Sampler {
    theta: Rat,
    seed: u64,
    thresholds: HashMap<Partition, Vec<(Partition, u128)>>,
}

fn scaled_ceiling(c: &Rat) -> u128 {
    let scaled = c * Rat::from_integer(BigInt::from(1u128 << 64));
    let (q, r) = scaled.numer().div_rem(scaled.denom());
    let ceil = if r.is_zero() { q } else { q + 1 };
    ceil.to_u128().expect("cumulative probability in [0, 1]")
}

impl Sampler {
    pub fn new(theta: Rat, seed: u64) -> Self {
        Sampler {
            theta,
            seed,
            thresholds: HashMap::new(),
        }
    }

    fn step(&mut self, lambda: &Partition, draw: u64) -> Partition {
        let theta = &self.theta;
        let table = self.thresholds.entry(lambda.clone()).or_insert_with(|| {
            let mut cum = Rat::zero();
            growth_kernel(lambda, theta)
                .targets()
                .map(|(nu, p)| {
                    cum += p;
                    (nu.clone(), scaled_ceiling(&cum))
                })
                .collect()
        });
        let k = u128::from(draw);
        table
            .iter()
            .find(|(_, t)| k < *t)
            .map(|(nu, _)| nu.clone())
            .expect("last threshold is 2^64")
    }

    /// Path `∅ ↗ … ↗ λ_n` for trajectory `index`. Every trajectory reads
    /// its own ChaCha stream, so results do not depend on sampling order.
    pub fn trajectory(&mut self, n: usize, index: u64) -> Vec<Partition> {
        let mut rng = ChaCha20Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        let mut path = Vec::with_capacity(n + 1);
        let mut current = Partition::empty();
        for _ in 0..n {
            let next = self.step(&current, rng.next_u64());
            path.push(std::mem::replace(&mut current, next));
        }
        path.push(current);
        path
    }

    /// Counts of final diagrams over trajectories `0..count`.
    pub fn frequencies(&mut self, n: usize, count: u64) -> BTreeMap<Partition, u64> {
        let mut freq = BTreeMap::new();
        for i in 0..count {
            let last = self.trajectory(n, i).pop().expect("nonempty path");
            *freq.entry(last).or_insert(0) += 1;
        }
        freq
    }
}

pub fn sample_trajectory(n: usize, theta: &Rat, seed: u64) -> Vec<Partition> {
    Sampler::new(theta.clone(), seed).trajectory(n, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::rat::{rat, ratio};

    #[test]
    fn trivial_paths() {
        assert_eq!(sample_trajectory(0, &rat(1), 3), vec![part![]]);
        for seed in 0..20 {
            assert_eq!(sample_trajectory(1, &rat(2), seed), vec![part![], part![1]]);
        }
    }

    #[test]
    fn paths_are_monotone_and_deterministic() {
        let mut a = Sampler::new(ratio(1, 2), 11);
        let mut b = Sampler::new(ratio(1, 2), 11);
        for i in 0..50 {
            let p = a.trajectory(7, i);
            assert_eq!(p, b.trajectory(7, i));
            assert_eq!(p.len(), 8);
            for w in p.windows(2) {
                assert!(w[0].addable_boxes().contains(&w[1]));
            }
        }
        // Order independence of substreams.
        let late = Sampler::new(ratio(1, 2), 11).trajectory(7, 49);
        assert_eq!(late, a.trajectory(7, 49));
    }

    #[test]
    fn thresholds_are_exact() {
        assert_eq!(scaled_ceiling(&rat(1)), 1u128 << 64);
        assert_eq!(scaled_ceiling(&ratio(1, 2)), 1u128 << 63);
        assert_eq!(scaled_ceiling(&ratio(1, 3)), (1u128 << 64) / 3 + 1);
    }
}
