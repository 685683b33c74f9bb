//! Truncated normal density, CDF, and a rejection sampler for the
//! lower-truncated case used by the Monte-Carlo oracles.

#[allow(unused_imports)]
use num_traits::Float;
use rand::Rng;

use super::special::{norm_cdf, norm_pdf};
use crate::error::Error;

/// A normal distribution restricted to the window `(a1, a2)`.
///
/// Infinite bounds are allowed. The window must carry positive probability
/// mass under the parent normal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncSpec {
    pub mu: f64,
    pub sigma2: f64,
    pub a1: f64,
    pub a2: f64,
}

impl TruncSpec {
    pub fn new(mu: f64, sigma2: f64, a1: f64, a2: f64) -> Result<Self, Error> {
        let spec = Self { mu, sigma2, a1, a2 };
        spec.window_mass().map(|_| spec)
    }

    fn sd(&self) -> f64 {
        self.sigma2.sqrt()
    }

    /// Parent-normal mass of the truncation window; error when it is zero
    /// (including underflow in a far tail).
    pub fn window_mass(&self) -> Result<f64, Error> {
        if !(self.sigma2 > 0.0) || !self.mu.is_finite() {
            return Err(Error::InvalidArgument(
                "truncated normal requires finite mu and sigma2 > 0",
            ));
        }
        if !(self.a1 < self.a2) {
            return Err(Error::InvalidArgument("truncation requires a1 < a2"));
        }
        let sd = self.sd();
        let mass = norm_cdf((self.a2 - self.mu) / sd) - norm_cdf((self.a1 - self.mu) / sd);
        if mass > 0.0 {
            Ok(mass)
        } else {
            Err(Error::InvalidArgument(
                "truncation window carries zero probability mass",
            ))
        }
    }
}

/// Density of the truncated normal; zero outside `(a1, a2)`.
pub fn trunc_normal_pdf(x: f64, spec: &TruncSpec) -> Result<f64, Error> {
    let mass = spec.window_mass()?;
    if x <= spec.a1 || x >= spec.a2 {
        return Ok(0.0);
    }
    let sd = spec.sd();
    Ok(norm_pdf((x - spec.mu) / sd) / (sd * mass))
}

/// CDF of the truncated normal; 0 below `a1`, 1 above `a2`.
pub fn trunc_normal_cdf(x: f64, spec: &TruncSpec) -> Result<f64, Error> {
    let mass = spec.window_mass()?;
    if x <= spec.a1 {
        return Ok(0.0);
    }
    if x >= spec.a2 {
        return Ok(1.0);
    }
    let sd = spec.sd();
    let v = (norm_cdf((x - spec.mu) / sd) - norm_cdf((spec.a1 - spec.mu) / sd)) / mass;
    Ok(v.clamp(0.0, 1.0))
}

/// Draw from N(mu, sigma²) conditioned on the value being >= `lo`, by
/// rejection. Intended for lo <= mu-ish windows (acceptance >= Φ((mu-lo)/σ));
/// the oracles only ever truncate below the mean.
pub fn sample_lower_truncated<R: Rng + ?Sized>(rng: &mut R, mu: f64, sigma: f64, lo: f64) -> f64 {
    use rand_distr::StandardNormal;
    loop {
        let z: f64 = rng.sample(StandardNormal);
        let v = mu + sigma * z;
        if v >= lo {
            return v;
        }
    }
}
