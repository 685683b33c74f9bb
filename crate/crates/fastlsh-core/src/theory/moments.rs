//! First four moments of the projection gap s̃X and their relative
//! deviations (ε, λ) from the matching zero-mean normal N(0, ms²/n).

#[allow(unused_imports)]
use num_traits::Float;

use super::special::erfcx;
use super::CollisionModel;
use crate::error::Error;

const SQRT_2PI: f64 = 2.506_628_274_631_000_7;

/// Odd moments vanish; the even ones are
/// `m2 = (ms²/n)(1+ε)` and `m4 = (3m²s⁴/n²)(1+λ)` with
/// `ε = σ̃·exp(−μ̃²/(2σ̃²)) / (√(2π)·μ̃·(1−Φ(−μ̃/σ̃)))` and `λ = σ̃²/μ̃² + ε`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Moments {
    pub m1: f64,
    pub m2: f64,
    pub m3: f64,
    pub m4: f64,
    pub epsilon: f64,
    pub lambda: f64,
}

/// Compute the moments for a collision model. Errors on μ̃ = 0 (identical
/// points); collapses to the exact normal moments when σ̃ = 0.
pub fn moments_stx(cm: &CollisionModel) -> Result<Moments, Error> {
    let mu_t = cm.mu_t();
    let sigma_t = cm.sigma_t();
    if mu_t <= 0.0 {
        return Err(Error::InvalidArgument(
            "mu_t = 0 (identical points): moments of s̃X are degenerate",
        ));
    }
    if sigma_t <= 0.0 {
        return Ok(Moments {
            m1: 0.0,
            m2: mu_t,
            m3: 0.0,
            m4: 3.0 * mu_t * mu_t,
            epsilon: 0.0,
            lambda: 0.0,
        });
    }
    let r = mu_t / sigma_t;
    // ε rewritten through erfcx: 2(1−Φ(−r)) = erfc(−r/√2), so
    // ε = 2σ̃ / (√(2π)·μ̃·erfcx(−r/√2)); erfcx overflows past r ≈ 37.6,
    // where the true ε is below 1e-300 anyway.
    let epsilon = if r > 37.0 {
        0.0
    } else {
        2.0 * sigma_t / (SQRT_2PI * mu_t * erfcx(-r / core::f64::consts::SQRT_2))
    };
    let ratio = sigma_t / mu_t;
    let lambda = ratio * ratio + epsilon;
    Ok(Moments {
        m1: 0.0,
        m2: mu_t * (1.0 + epsilon),
        m3: 0.0,
        m4: 3.0 * mu_t * mu_t * (1.0 + lambda),
        epsilon,
        lambda,
    })
}
