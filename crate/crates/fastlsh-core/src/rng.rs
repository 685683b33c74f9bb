//! Counter-based seed splitting.
//!
//! All randomness in the crate flows from one user-supplied 64-bit seed.
//! Independent streams (per table, per hash function, per trial, ...) are
//! derived by mixing the master seed with a stream tag and two counters, so
//! construction order never matters: hasher (t, j) is the same whether the
//! tables are built sequentially or in parallel, and table prefixes are
//! stable when L grows.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Stream tags; each distinct source of randomness gets its own.
pub mod stream {
    pub const PLAN: u64 = 0x01;
    pub const PROJ: u64 = 0x02;
    pub const OFFSET: u64 = 0x03;
    pub const SIGNS: u64 = 0x04;
    pub const SPARSE: u64 = 0x05;
    pub const DATA: u64 = 0x06;
    pub const QUERY: u64 = 0x07;
    pub const MC_TRIAL: u64 = 0x08;
    pub const PAIR_SAMPLE: u64 = 0x09;
    pub const HASHER: u64 = 0x0a;
}

#[inline]
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Derive a child seed from `(master, tag, a, b)`.
pub fn split_seed(master: u64, tag: u64, a: u64, b: u64) -> u64 {
    let mut s = splitmix64(master ^ 0x6a09_e667_f3bc_c909);
    s = splitmix64(s ^ tag.wrapping_mul(0xff51_afd7_ed55_8ccd));
    s = splitmix64(s ^ a.wrapping_mul(0xc4ce_b9fe_1a85_ec53));
    splitmix64(s ^ b)
}

/// Deterministic RNG for the given stream coordinates.
pub fn rng_for(master: u64, tag: u64, a: u64, b: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(split_seed(master, tag, a, b))
}
