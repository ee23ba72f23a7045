//! Portable seeded randomness.
//!
//! Every draw goes through 64-bit integer arithmetic so that a given seed
//! produces the same sequence on every platform.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A single-owner deterministic generator.
#[derive(Clone, Debug)]
pub struct SeededRng {
    seed: u64,
    inner: ChaCha8Rng,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng {
            seed,
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Independent generator for the `stream`-th child of a draw `base`.
    pub fn derived(base: u64, stream: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(base);
        inner.set_stream(stream);
        SeededRng { seed: base, inner }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform index in `0..bound`. Panics if `bound == 0`.
    pub fn index(&mut self, bound: usize) -> usize {
        assert!(bound > 0, "empty range");
        self.inner.random_range(0..bound as u64) as usize
    }

    /// Uniform real in `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        // 53 random mantissa bits
        (self.inner.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}
