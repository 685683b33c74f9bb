//! Sampling-based locality-sensitive hashing for the Euclidean norm.
//!
//! The crate has four parts:
//!
//! * [`hash`] — elementary hash functions: the classic p-stable projection
//!   (`floor((a·v + b)/w)`), the sampled variant that projects only `m`
//!   randomly chosen coordinates, and a Hadamard-plus-sparse-projection
//!   sketch, together with composite `k`-wise bucket keys and the
//!   inner-product-search transform.
//! * [`theory`] — the analytic machinery for collision probabilities:
//!   truncated normal distributions, the characteristic function of the
//!   sampled projection gap, its inverse-Fourier density, closed-form and
//!   quadrature collision probabilities, moments, ρ(c) curves, and a
//!   Monte-Carlo oracle to cross-check all of it.
//! * [`index`] — multi-table LSH index with exact candidate re-ranking.
//! * [`data`] — in-memory datasets, synthetic generators, exact k-NN ground
//!   truth, and the pairwise (μ, σ) statistics the theory layer consumes.
//!
//! Everything is deterministic given a single `u64` seed: per-hasher
//! randomness is derived by a counter-based split on (table, function), so
//! rebuilding an index with the same seed reproduces it bit for bit.
//!
//! The crate is `no_std`-compatible (`--no-default-features`, alloc
//! required); float math routes through `num-traits`/`libm` in that
//! configuration. File formats, timing, and the CLI live in the companion
//! `fastlsh-cli` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod data;
pub mod error;
pub mod hash;
pub mod index;
pub mod quad;
pub mod rng;
pub mod theory;

pub use data::{Dataset, Neighbor, PairStats, SigmaProfile, SyntheticKind};
pub use error::Error;
pub use hash::{
    apply_sampling, composite_hash_key, CompositeKey, HasherParams, MipsMode, MipsTransform,
    SamplingPlan, Scheme,
};
pub use index::{build_index, recall_at_k, IndexConfig, LshIndex, QueryResult};
pub use theory::{
    collision_prob_e2lsh, collision_prob_fast, collision_prob_mips, matched_width,
    mc_collision_oracle, moments_stx, pdf_stx, rho_curve, sdist_pdf, trunc_normal_cdf,
    trunc_normal_pdf, CollisionModel, McEstimate, Moments, OracleScheme, QuadratureConfig,
    RhoPoint, RhoScheme, TruncSpec,
};

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
