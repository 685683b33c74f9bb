//! The coordinate-sampling operator S(·).

use alloc::vec::Vec;
use rand::Rng;

use crate::error::Error;
use crate::rng::{rng_for, stream};

/// A multiset of `m` coordinate indices into an `n`-dimensional vector.
///
/// Duplicates are allowed (sampling is with replacement) and the draw is
/// deterministic in `(seed, n, m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SamplingPlan {
    indices: Vec<u32>,
    n: usize,
}

impl SamplingPlan {
    /// Draw `m` indices i.i.d. uniformly from `[0, n)`.
    pub fn generate(n: usize, m: usize, seed: u64) -> Result<Self, Error> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidArgument("sampling plan needs m >= 1 and n >= 1"));
        }
        if n > u32::MAX as usize {
            return Err(Error::InvalidArgument("dimension exceeds u32 index range"));
        }
        let mut rng = rng_for(seed, stream::PLAN, 0, 0);
        let indices = (0..m).map(|_| rng.random_range(0..n as u32)).collect();
        Ok(Self { indices, n })
    }

    /// Wrap explicit indices (used by tests and the worked examples).
    pub fn from_indices(indices: Vec<u32>, n: usize) -> Result<Self, Error> {
        if indices.is_empty() || n == 0 {
            return Err(Error::InvalidArgument("sampling plan needs m >= 1 and n >= 1"));
        }
        if indices.iter().any(|&i| i as usize >= n) {
            return Err(Error::InvalidArgument("sampling index out of range"));
        }
        Ok(Self { indices, n })
    }

    /// The identity plan (0, 1, ..., n-1).
    pub fn identity(n: usize) -> Self {
        Self {
            indices: (0..n as u32).collect(),
            n,
        }
    }

    pub fn m(&self) -> usize {
        self.indices.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }
}

/// Apply the sampling operator: `out[j] = v[plan.indices[j]]`.
pub fn apply_sampling(v: &[f32], plan: &SamplingPlan) -> Result<Vec<f32>, Error> {
    if v.len() != plan.n {
        return Err(Error::InvalidArgument("vector length does not match plan dimension"));
    }
    Ok(plan.indices.iter().map(|&i| v[i as usize]).collect())
}
