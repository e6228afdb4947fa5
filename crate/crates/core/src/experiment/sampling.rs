//! Deterministic subset sampling.
//!
//! Trial seeds are derived by mixing, not by drawing from a shared stream, so any trial can
//! be reproduced on its own: `trial_seed = mix64(master_seed, trial_index)`. Each trial seed
//! drives a ChaCha8 generator, and subsets come from a partial Fisher–Yates shuffle of the
//! index range.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ring::{Elem, Ring};
use crate::setalg::RSet;

/// The SplitMix64 output function.
pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// `splitmix64(seed ^ splitmix64(index))`.
pub fn mix64(seed: u64, index: u64) -> u64 {
    splitmix64(seed ^ splitmix64(index))
}

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `size` distinct values from `[0, universe)` in draw order, by a partial Fisher–Yates
/// shuffle whose swaps are kept in a sparse map.
pub fn sample_indices(universe: u64, size: u64, seed: u64) -> Result<Vec<u64>> {
    if size == 0 || size > universe {
        return Err(Error::InvalidArgument(format!("sample size {size} outside 1..={universe}")));
    }
    let mut rng = rng_for(seed);
    let mut swapped: HashMap<u64, u64> = HashMap::new();
    let mut out = Vec::with_capacity(size as usize);
    for i in 0..size {
        let j = rng.gen_range(i..universe);
        let at_j = *swapped.get(&j).unwrap_or(&j);
        let at_i = *swapped.get(&i).unwrap_or(&i);
        swapped.insert(j, at_i);
        out.push(at_j);
    }
    Ok(out)
}

/// A uniformly random `size`-subset of the ring.
pub fn sample_subset(ring: &Ring, size: u64, trial_seed: u64) -> Result<RSet> {
    let picked = sample_indices(ring.order(), size, trial_seed)?;
    Ok(RSet::from_elems(ring, picked.into_iter().map(Elem::from_raw)))
}

/// A uniformly random `size`-subset of `pool`.
pub fn sample_from(ring: &Ring, pool: &[Elem], size: u64, seed: u64) -> Result<RSet> {
    let picked = sample_indices(pool.len() as u64, size, seed)?;
    Ok(RSet::from_elems(ring, picked.into_iter().map(|i| pool[i as usize])))
}

/// Every subset of `pool` with size in `1..=max_size`, by size then lexicographically.
pub fn subsets_up_to(pool: &[Elem], max_size: usize) -> impl Iterator<Item = Vec<Elem>> + '_ {
    (1..=max_size.min(pool.len())).flat_map(move |k| Combinations::new(pool.len(), k).map(move |c| c.iter().map(|&i| pool[i]).collect()))
}

/// `sum_{k=1}^{max} C(n, k)`, saturating.
pub fn subset_count(n: u64, max_size: u64) -> u128 {
    let mut total = 0u128;
    let mut binom = 1u128;
    for k in 1..=max_size.min(n) {
        binom = binom.saturating_mul((n - k + 1) as u128) / k as u128;
        total = total.saturating_add(binom);
    }
    total
}

struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations { n, idx: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        match (0..k).rev().find(|&i| self.idx[i] != i + self.n - k) {
            Some(i) => {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
            }
            None => self.done = true,
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_ring, RingKind};

    #[test]
    fn sampling_contract() {
        let r = make_ring(RingKind::Zpr, 3, 1, 2).unwrap();
        for seed in 0..20 {
            assert!(sample_subset(&r, 9, seed).unwrap().is_full());
            let s = sample_subset(&r, 4, seed).unwrap();
            assert_eq!(s.len(), 4);
            assert_eq!(s, sample_subset(&r, 4, seed).unwrap());
        }
        assert!(sample_subset(&r, 0, 1).is_err());
        assert!(sample_subset(&r, 10, 1).is_err());
    }

    #[test]
    fn pinned_subset() {
        // frozen when the sampler was first written; guards the seeding contract
        let r = make_ring(RingKind::Zpr, 3, 1, 2).unwrap();
        let s = sample_subset(&r, 3, mix64(42, 0)).unwrap();
        assert_eq!(s.to_string(), PINNED_Z9_SIZE3_SEED42_TRIAL0);
    }

    const PINNED_Z9_SIZE3_SEED42_TRIAL0: &str = "0,1,7";

    #[test]
    fn mixing_is_stable() {
        assert_eq!(splitmix64(0), 0xE220_A839_7B1D_CDAF);
        assert_ne!(mix64(1, 0), mix64(0, 1));
    }

    #[test]
    fn combination_counts() {
        let pool: Vec<Elem> = (0..9).map(Elem::from_raw).collect();
        for max in 0..=9 {
            assert_eq!(subsets_up_to(&pool, max).count() as u128, subset_count(9, max as u64));
        }
        assert_eq!(subset_count(9, 5), 9 + 36 + 84 + 126 + 126);
        let all: std::collections::HashSet<Vec<Elem>> = subsets_up_to(&pool, 9).collect();
        assert_eq!(all.len(), 511);
    }
}
