//! End-to-end Monte-Carlo collision oracle: draw fresh hashers, hash both
//! vectors, count equal hash values. The empirical collision frequency is
//! the ground truth every analytic collision probability is checked
//! against.

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::Error;
use crate::hash::HasherParams;
use crate::rng::{split_seed, stream};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub p: f64,
    pub stderr: f64,
    pub trials: usize,
}

/// Hasher family and parameters for the oracle draws.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OracleScheme {
    FastLsh { m: usize, width: f64 },
    E2Lsh { width: f64 },
    AcHash { width: f64, density: f64 },
}

/// Fraction of `trials` independent hasher draws with h(v) == h(u).
pub fn mc_collision_oracle(
    v: &[f32],
    u: &[f32],
    scheme: &OracleScheme,
    trials: usize,
    seed: u64,
) -> Result<McEstimate, Error> {
    if trials < 1_000 {
        return Err(Error::InvalidArgument("oracle needs at least 1000 trials"));
    }
    if v.len() != u.len() || v.is_empty() {
        return Err(Error::InvalidArgument("oracle vectors must share a nonzero dimension"));
    }
    let n = v.len();
    let mut scratch = alloc::vec::Vec::new();
    let mut hits = 0usize;
    for trial in 0..trials {
        let hseed = split_seed(seed, stream::MC_TRIAL, trial as u64, 0);
        let hasher = match scheme {
            OracleScheme::FastLsh { m, width } => HasherParams::fastlsh(n, *m, *width, hseed)?,
            OracleScheme::E2Lsh { width } => HasherParams::e2lsh(n, *width, hseed)?,
            OracleScheme::AcHash { width, density } => {
                HasherParams::achash(n, *width, *density, hseed)?
            }
        };
        let hv = hasher.quantize(hasher.raw_projection_with_scratch(v, &mut scratch)?);
        let hu = hasher.quantize(hasher.raw_projection_with_scratch(u, &mut scratch)?);
        if hv == hu {
            hits += 1;
        }
    }
    let p = hits as f64 / trials as f64;
    Ok(McEstimate {
        p,
        stderr: (p * (1.0 - p) / trials as f64).sqrt(),
        trials,
    })
}
