//! Seeded random streams.
//!
//! Every stochastic path in the crate draws from a [`SearchRng`] built from a
//! 64-bit seed, so a run is fully determined by its configuration.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type SearchRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SearchRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// SplitMix64 finalizer. A bijection on `u64`.
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed for run `index` of an experiment rooted at `base`.
///
/// For a fixed base the map `index -> seed` is injective: the index is offset
/// by the golden-ratio increment and passed through a bijective mixer.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    mix(mix(base).wrapping_add(index.wrapping_mul(0x9e37_79b9_7f4a_7c15)))
}
