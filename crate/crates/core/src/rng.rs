//! Seeded random streams.
//!
//! Every random graph is drawn from a ChaCha8 stream (`rand_chacha`) seeded
//! through `SeedableRng::seed_from_u64`. Trial seeds are derived from a
//! master seed with a keyed SplitMix64-style mixer so trials can run in any
//! order on any number of workers.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Name of the generator, reported alongside results.
pub const RNG_ALGORITHM: &str = "ChaCha8 (rand_chacha 0.9, seed_from_u64)";

/// Name of the per-trial seed derivation, reported alongside results.
pub const SEED_DERIVATION: &str = "splitmix64(master ^ splitmix64(index + 0x9e3779b97f4a7c15))";

const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

/// The SplitMix64 finalizer.
#[inline]
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(GOLDEN_GAMMA);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed for trial `index` under `master`.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    splitmix64(master ^ splitmix64(index.wrapping_add(GOLDEN_GAMMA)))
}

/// A uniform stream of `f64` variates in `[0, 1)`.
#[derive(Clone, Debug)]
pub struct UniformStream {
    rng: ChaCha8Rng,
}

impl UniformStream {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Next variate: the top 53 bits of one `u64`, scaled into `[0, 1)`.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }
}
