//! Seeded sampling with a fully specified algorithm.
//!
//! Runs must be reproducible from a 64-bit seed across implementations, so
//! the generator and the range reduction are pinned here rather than left to
//! a library's unspecified `gen_range`:
//!
//! * generator: xoshiro256\*\*, state expanded from the seed by SplitMix64
//!   (the reference `seed_from_u64` of `rand_xoshiro`);
//! * reduction to `[0, n)`: Lemire's multiply-shift with rejection, which is
//!   exactly uniform.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

#[derive(Clone, Debug)]
pub struct SeededSampler {
    rng: Xoshiro256StarStar,
}

impl SeededSampler {
    pub fn new(seed: u64) -> Self {
        SeededSampler {
            rng: Xoshiro256StarStar::seed_from_u64(seed),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform integer in `[0, bound)`. `bound` must be nonzero.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty sampling range");
        let mut product = u128::from(self.next_u64()) * u128::from(bound);
        let mut low = product as u64;
        if low < bound {
            let threshold = bound.wrapping_neg() % bound;
            while low < threshold {
                product = u128::from(self.next_u64()) * u128::from(bound);
                low = product as u64;
            }
        }
        (product >> 64) as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let mut a = SeededSampler::new(42);
        let mut b = SeededSampler::new(42);
        for _ in 0..100 {
            assert_eq!(a.below(1000), b.below(1000));
        }
        let mut c = SeededSampler::new(43);
        let xs: Vec<_> = (0..8).map(|_| a.next_u64()).collect();
        let ys: Vec<_> = (0..8).map(|_| c.next_u64()).collect();
        assert_ne!(xs, ys);
    }

    #[test]
    fn pinned_first_outputs() {
        // SplitMix64 expansion of seed 0 followed by xoshiro256**; these
        // values are what other implementations must reproduce.
        let mut s = SeededSampler::new(0);
        let first: Vec<u64> = (0..3).map(|_| s.next_u64()).collect();
        assert_eq!(
            first,
            vec![11091344671253066420, 13793997310169335082, 1900383378846508768]
        );
        let mut s = SeededSampler::new(1);
        let draws: Vec<u64> = (0..10).map(|_| s.below(10)).collect();
        assert_eq!(draws, vec![7, 5, 5, 3, 6, 1, 0, 3, 8, 5]);
    }

    #[test]
    fn below_stays_in_range_and_covers_it() {
        let mut s = SeededSampler::new(7);
        let mut seen = [0usize; 7];
        for _ in 0..7000 {
            seen[s.below(7) as usize] += 1;
        }
        assert!(seen.iter().all(|&c| c > 800 && c < 1200), "{seen:?}");
        assert_eq!(s.below(1), 0);
        let big = s.below(u64::MAX);
        assert!(big < u64::MAX);
    }
}
