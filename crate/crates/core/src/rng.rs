//! Seeded pseudo-random source shared by generators and suites.
//!
//! The stream is xoshiro256** seeded through SplitMix64 (the reference
//! `seed_from_u64` expansion). Derived draws are defined here rather than
//! delegated to `rand` so that other implementations can reproduce every
//! instance bit for bit:
//!
//! * `below(k)`: Lemire's multiply-shift with rejection. Take `x = next_u64()`,
//!   `m = x * k` as a 128-bit product; if the low 64 bits are below
//!   `(2^64 - k) mod k`, draw again; return the high 64 bits.
//! * `unit()`: `(next_u64() >> 11) * 2^-53`.
//! * `shuffle`: Fisher-Yates from the last index down, `j = below(i + 1)`.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

#[derive(Debug, Clone)]
pub struct SeededRng(Xoshiro256StarStar);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng(Xoshiro256StarStar::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform integer in `0..bound`. `bound` must be nonzero.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "below(0)");
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let m = (self.next_u64() as u128) * (bound as u128);
            if (m as u64) >= threshold {
                return (m >> 64) as u64;
            }
        }
    }

    pub fn below_usize(&mut self, bound: usize) -> usize {
        self.below(bound as u64) as usize
    }

    /// Uniform integer in `lo..=hi`.
    pub fn range_inclusive(&mut self, lo: usize, hi: usize) -> usize {
        assert!(lo <= hi);
        lo + self.below_usize(hi - lo + 1)
    }

    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn bernoulli(&mut self, p: f64) -> bool {
        self.unit() < p
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below_usize(i + 1);
            items.swap(i, j);
        }
    }

    /// Uniformly random `k`-subset of `items`, returned in the input order.
    pub fn sample_subset<T: Copy>(&mut self, items: &[T], k: usize) -> Vec<T> {
        let mut idx: Vec<usize> = (0..items.len()).collect();
        // partial Fisher-Yates over the first k slots
        for i in 0..k.min(idx.len()) {
            let j = i + self.below_usize(idx.len() - i);
            idx.swap(i, j);
        }
        let mut chosen = idx[..k.min(items.len())].to_vec();
        chosen.sort_unstable();
        chosen.into_iter().map(|i| items[i]).collect()
    }

    /// Derives an independent child seed, used to give each suite trial its own stream.
    pub fn fork_seed(seed: u64, index: u64) -> u64 {
        // one SplitMix64 step over the combined value
        let mut z = seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
        z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let mut a = SeededRng::new(42);
        let mut b = SeededRng::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn below_stays_in_range() {
        let mut r = SeededRng::new(1);
        let mut seen = [0usize; 7];
        for _ in 0..7000 {
            seen[r.below_usize(7)] += 1;
        }
        assert!(seen.iter().all(|&c| c > 800), "{seen:?}");
    }

    #[test]
    fn subset_has_requested_size() {
        let mut r = SeededRng::new(9);
        let items: Vec<usize> = (10..30).collect();
        for k in 0..=20 {
            let s = r.sample_subset(&items, k);
            assert_eq!(s.len(), k);
            assert!(s.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
