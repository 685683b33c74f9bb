//! Asymmetric transforms that turn maximum-inner-product search into
//! nearest-neighbor search in the sampled space.
//!
//! Data vectors map to P̃(v) = (√(κ̃² − ‖S(v)‖²), S(v)) and queries to
//! Q̃(u) = (0, S(u)/‖S(u)‖), with κ̃ = max‖S(vᵢ)‖ over the dataset. Every
//! transformed data vector then has norm exactly κ̃, so minimizing the
//! transformed Euclidean distance maximizes the sampled inner product.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use super::sampling::{apply_sampling, SamplingPlan};
use crate::data::Dataset;
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MipsMode {
    Data,
    Query,
}

/// Norm bounds for the transform: `kappa` over raw vectors, `kappa_sampled`
/// over sampled vectors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MipsTransform {
    pub kappa: f64,
    pub kappa_sampled: f64,
    pub mode: MipsMode,
}

fn norm_f64(v: &[f32]) -> f64 {
    v.iter().map(|&x| x as f64 * x as f64).sum::<f64>().sqrt()
}

impl MipsTransform {
    /// Measure κ and κ̃ over a dataset; the result is in data mode.
    pub fn fit(dataset: &Dataset, plan: &SamplingPlan) -> Result<Self, Error> {
        if dataset.len() == 0 {
            return Err(Error::InvalidArgument("mips transform needs a nonempty dataset"));
        }
        if dataset.dim() != plan.n() {
            return Err(Error::InvalidArgument("plan dimension does not match dataset"));
        }
        let mut kappa = 0.0f64;
        let mut kappa_sampled = 0.0f64;
        for row in dataset.rows() {
            kappa = kappa.max(norm_f64(row));
            let sampled = apply_sampling(row, plan)?;
            kappa_sampled = kappa_sampled.max(norm_f64(&sampled));
        }
        Ok(Self {
            kappa,
            kappa_sampled,
            mode: MipsMode::Data,
        })
    }

    /// The same bounds in query mode.
    pub fn for_query(&self) -> Self {
        Self {
            mode: MipsMode::Query,
            ..*self
        }
    }

    /// Δ = κ̃² − ‖S(v)‖² for a data vector; feeds the shifted collision
    /// model.
    pub fn delta(&self, v: &[f32], plan: &SamplingPlan) -> Result<f64, Error> {
        let sampled = apply_sampling(v, plan)?;
        let norm = norm_f64(&sampled);
        let delta = self.kappa_sampled * self.kappa_sampled - norm * norm;
        if delta < -1e-9 * self.kappa_sampled.max(1.0) {
            return Err(Error::InvalidArgument("sampled norm exceeds kappa_sampled"));
        }
        Ok(delta.max(0.0))
    }
}

/// Apply the transform, producing an (m+1)-vector.
pub fn mips_transform(
    v: &[f32],
    plan: &SamplingPlan,
    t: &MipsTransform,
) -> Result<Vec<f32>, Error> {
    let sampled = apply_sampling(v, plan)?;
    let norm = norm_f64(&sampled);
    let mut out = Vec::with_capacity(sampled.len() + 1);
    match t.mode {
        MipsMode::Data => {
            let delta = t.kappa_sampled * t.kappa_sampled - norm * norm;
            if delta < -1e-9 * t.kappa_sampled.max(1.0) {
                return Err(Error::InvalidArgument("sampled norm exceeds kappa_sampled"));
            }
            out.push(delta.max(0.0).sqrt() as f32);
            out.extend_from_slice(&sampled);
        }
        MipsMode::Query => {
            if norm <= 0.0 {
                return Err(Error::InvalidArgument("query has zero sampled norm"));
            }
            out.push(0.0);
            out.extend(sampled.iter().map(|&x| (x as f64 / norm) as f32));
        }
    }
    Ok(out)
}
