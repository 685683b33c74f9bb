//! ρ(c) = log(1/p₁)/log(1/p₂) with s₁ = 1 and s₂ = c; governs the query
//! time O(N^ρ log N) and space O(N^{1+ρ}) of the LSH data structure.

#[allow(unused_imports)]
use num_traits::Float;

use super::collision::{collision_prob_e2lsh, collision_prob_fast};
use super::{CollisionModel, QuadratureConfig};
use crate::error::Error;
use alloc::vec::Vec;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RhoPoint {
    pub c: f64,
    pub rho: f64,
    pub p1: f64,
    pub p2: f64,
}

/// Which scheme's collision probability feeds the curve. The sampled
/// scheme needs the per-distance spread: `sigma_at(s)` supplies σ for a
/// pair at distance `s` (measured envelopes from real data, typically).
pub enum RhoScheme<'a> {
    E2Lsh {
        width: f64,
    },
    FastLsh {
        width: f64,
        m: usize,
        n: usize,
        sigma_at: &'a (dyn Fn(f64) -> f64 + Sync),
    },
}

impl RhoScheme<'_> {
    fn prob(&self, s: f64, q: &QuadratureConfig) -> Result<f64, Error> {
        match self {
            RhoScheme::E2Lsh { width } => collision_prob_e2lsh(s, *width),
            RhoScheme::FastLsh {
                width,
                m,
                n,
                sigma_at,
            } => {
                let cm = CollisionModel::new(s, sigma_at(s), *m, *n)?;
                collision_prob_fast(&cm, *width, q)
            }
        }
    }
}

/// Evaluate ρ over a grid of approximation ratios. Each point fails
/// independently: c < 1 is an invalid argument, p = 1 yields
/// [`Error::UndefinedRho`].
pub fn rho_curve(
    c_grid: &[f64],
    scheme: &RhoScheme<'_>,
    q: &QuadratureConfig,
) -> Vec<Result<RhoPoint, Error>> {
    let p1 = match scheme.prob(1.0, q) {
        Ok(p) => p,
        Err(e) => return c_grid.iter().map(|_| Err(e.clone())).collect(),
    };
    c_grid
        .iter()
        .map(|&c| {
            if !(c >= 1.0) {
                return Err(Error::InvalidArgument("approximation ratio c must be >= 1"));
            }
            let p2 = scheme.prob(c, q)?;
            if p1 >= 1.0 || p2 >= 1.0 {
                return Err(Error::UndefinedRho);
            }
            Ok(RhoPoint {
                c,
                rho: p1.ln() / p2.ln(),
                p1,
                p2,
            })
        })
        .collect()
}
