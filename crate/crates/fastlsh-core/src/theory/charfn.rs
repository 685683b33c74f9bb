//! Characteristic function of the sampled projection gap.
//!
//! With the sampled squared distance modelled as a truncated normal
//! TN(μ̃, σ̃², 0, ∞) and the projection being standard-normal-stable, the
//! projection gap is s̃X and its characteristic function is
//!
//! ```text
//! φ(x) = exp(x⁴σ̃²/8 − μ̃x²/2) · erfc(z) / (2(1 − Φ(−μ̃/σ̃)))
//!        with z = (x²σ̃²/2 − μ̃)/(√2·σ̃).
//! ```
//!
//! The exponential factor overflows long before the product does, so φ is
//! evaluated as the algebraically identical ratio of scaled complementary
//! error functions, φ(x) = erfcx(z)/erfcx(z₀) with z₀ = −μ̃/(√2σ̃), split
//! into branches so neither erfcx argument is ever in its overflow range.

#[allow(unused_imports)]
use num_traits::Float;

use super::special::erfcx;
use super::CollisionModel;
use crate::error::Error;

const SQRT2: f64 = core::f64::consts::SQRT_2;

/// erfc(t) for t <= 0, always in [1, 2]; exact 2.0 once exp(-t²) underflows.
#[inline]
fn erfc_nonpos(t: f64) -> f64 {
    debug_assert!(t <= 0.0);
    2.0 - (-t * t).exp() * erfcx(-t)
}

/// φ for a truncated-normal squared-distance model with mean `mu_eff` and
/// std `sigma_t`, both before truncation at zero.
pub(crate) fn charfn_shifted(x: f64, mu_eff: f64, sigma_t: f64) -> f64 {
    if sigma_t <= 0.0 {
        // point mass at mu_eff: Gaussian characteristic function
        return (-0.5 * mu_eff * x * x).exp();
    }
    let z0 = -mu_eff / (SQRT2 * sigma_t);
    let zs = x * x * sigma_t / (2.0 * SQRT2); // z - z0
    let z = z0 + zs;
    if z <= 0.0 {
        // exponent is z² − z₀², expanded to avoid squaring huge z's
        let e = x * x * (x * x * sigma_t * sigma_t / 8.0 - mu_eff / 2.0);
        e.exp() * erfc_nonpos(z) / erfc_nonpos(z0)
    } else {
        // erfcx(z₀) would overflow for z₀ < −26.6; fold its exp in directly
        erfcx(z) * (-z0 * z0).exp() / erfc_nonpos(z0)
    }
}

/// Characteristic function of s̃X. Real, even, φ(0) = 1, |φ| ≤ 1.
pub fn charfn_stx(x: f64, cm: &CollisionModel) -> f64 {
    charfn_shifted(x, cm.mu_t(), cm.sigma_t())
}

/// Characteristic function of the inner-product-search variant, where the
/// squared-distance mean is shifted by Δ = κ̃² − ‖S(v)‖² ≥ 0.
pub fn charfn_mips(x: f64, cm: &CollisionModel, delta: f64) -> Result<f64, Error> {
    if !(delta >= 0.0) || !delta.is_finite() {
        return Err(Error::InvalidArgument("mips delta must be finite and >= 0"));
    }
    Ok(charfn_shifted(x, cm.mu_t() + delta, cm.sigma_t()))
}
