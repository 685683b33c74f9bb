//! Collision probabilities for the full and the sampled projection.

#[allow(unused_imports)]
use num_traits::Float;

use super::special::norm_cdf;
use super::stx::StxKernel;
use super::{CollisionModel, QuadratureConfig};
use crate::error::Error;
use crate::quad::UniformSpline;

const SQRT_2PI: f64 = 2.506_628_274_631_000_7;

/// Relative σ̃/μ̃ below which the truncated normal collapses to a point
/// mass and the closed form takes over.
const DEGENERATE_RATIO: f64 = 1e-10;

/// Bucket width for the sampled hash that matches width `w` of the full
/// projection: w̃ = √(m/n)·w.
pub fn matched_width(w: f64, m: usize, n: usize) -> f64 {
    w * (m as f64 / n as f64).sqrt()
}

/// Closed-form collision probability of the full p-stable projection at
/// distance `s` and bucket width `w`:
///
/// ```text
/// p = 2Φ(w/s) − 1 − 2s/(√(2π)·w)·(1 − exp(−w²/(2s²)))
/// ```
///
/// Monotonically decreasing in `s`; p → 1 as s → 0.
pub fn collision_prob_e2lsh(s: f64, w: f64) -> Result<f64, Error> {
    if !(w > 0.0) || !w.is_finite() {
        return Err(Error::InvalidArgument("width must be finite and > 0"));
    }
    if !(s >= 0.0) || !s.is_finite() {
        return Err(Error::InvalidArgument("distance must be finite and >= 0"));
    }
    if s == 0.0 {
        return Ok(1.0);
    }
    let r = w / s;
    // 1 - exp(-r²/2) via exp_m1 to stay accurate for narrow buckets
    let one_minus_exp = -(-0.5 * r * r).exp_m1();
    let p = 2.0 * norm_cdf(r) - 1.0 - 2.0 / (SQRT_2PI * r) * one_minus_exp;
    Ok(p.clamp(0.0, 1.0))
}

/// Shared path: collision probability when the projection gap is s̃X with
/// s̃² ~ TN(mu_eff, sigma_t², 0, ∞), integrating the cached density grid
/// against the tent weight (1 − t/w).
pub(crate) fn collision_prob_kernel(
    mu_eff: f64,
    sigma_t: f64,
    w: f64,
    q: &QuadratureConfig,
) -> Result<f64, Error> {
    if !(w > 0.0) || !w.is_finite() {
        return Err(Error::InvalidArgument("width must be finite and > 0"));
    }
    q.validate()?;
    if sigma_t <= 0.0 || sigma_t < DEGENERATE_RATIO * mu_eff {
        // point mass s̃² = mu_eff: exactly the closed-form case at √mu_eff
        return collision_prob_e2lsh(mu_eff.sqrt(), w);
    }
    let kernel = StxKernel::new(mu_eff, sigma_t, q)?;
    // beyond the support radius the density carries ~1e-20 mass; clip the
    // grid there so huge widths don't starve the spline of resolution
    let t_hi = w.min(kernel.support_radius());
    let points = q.grid_points.max(9);
    let dx = t_hi / (points - 1) as f64;
    let mut y = alloc::vec::Vec::with_capacity(points);
    for i in 0..points {
        y.push(kernel.pdf(i as f64 * dx));
    }
    // the density is even, so f'(0) = 0 exactly; estimate the right-end
    // slope by a one-sided 4th-order difference to keep the spline O(h⁴)
    let n = points;
    let d_right = (25.0 * y[n - 1] - 48.0 * y[n - 2] + 36.0 * y[n - 3] - 16.0 * y[n - 4]
        + 3.0 * y[n - 5])
        / (12.0 * dx);
    let spline = UniformSpline::fit_with_ends(
        0.0,
        dx,
        y,
        crate::quad::SplineEnds::Clamped {
            d_left: 0.0,
            d_right,
        },
    )?;
    // ∫ 2f(t)(1 − t/w) dt over [0, t_hi]
    let p = spline.integrate_against_linear(2.0, -2.0 / w);
    Ok(p.clamp(0.0, 1.0))
}

/// Collision probability of the sampled projection at bucket width `w_t`.
///
/// Degenerates to [`collision_prob_e2lsh`] at distance √μ̃ when σ̃/μ̃ falls
/// below 1e-10 (point-mass squared distance).
pub fn collision_prob_fast(
    cm: &CollisionModel,
    w_t: f64,
    q: &QuadratureConfig,
) -> Result<f64, Error> {
    collision_prob_kernel(cm.mu_t(), cm.sigma_t(), w_t, q)
}

/// Collision probability of the inner-product-search variant, where the
/// squared-distance mean is shifted by Δ ≥ 0.
pub fn collision_prob_mips(
    cm: &CollisionModel,
    delta: f64,
    w: f64,
    q: &QuadratureConfig,
) -> Result<f64, Error> {
    if !(delta >= 0.0) || !delta.is_finite() {
        return Err(Error::InvalidArgument("mips delta must be finite and >= 0"));
    }
    collision_prob_kernel(cm.mu_t() + delta, cm.sigma_t(), w, q)
}
