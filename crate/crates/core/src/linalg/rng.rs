//! Reproducible uniform streams.
//!
//! Streams are SplitMix64 generators. A parallel task never shares a stream;
//! it derives its own with [`Stream::substream`], whose seed is
//! [`mix`]`(seed, index)`, so results depend only on `(seed, index)`.

use rand::{Rng, RngExt, SeedableRng};
use rand_xoshiro::SplitMix64;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// Seed of the sub-stream `index` of `seed`.
pub fn mix(seed: u64, index: u64) -> u64 {
    let mut g = SplitMix64::seed_from_u64(seed ^ index.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA));
    g.next_u64()
}

#[derive(Clone, Debug)]
pub struct Stream(SplitMix64);

impl Stream {
    pub fn new(seed: u64) -> Self {
        Stream(SplitMix64::seed_from_u64(seed))
    }

    pub fn substream(seed: u64, index: u64) -> Self {
        Stream::new(mix(seed, index))
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        self.0.random::<f64>()
    }

    /// Uniform in `[lo, hi)`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }
}

pub fn seeded_rng(seed: u64) -> Stream {
    Stream::new(seed)
}
