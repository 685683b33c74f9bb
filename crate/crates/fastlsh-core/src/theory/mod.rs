//! Analytic and numerical evaluation of the collision-probability theory:
//! truncated normals, the characteristic function of the sampled projection
//! gap s̃X, its inverse-Fourier density, collision probabilities for both
//! the full and the sampled projection, moments, ρ(c) curves, and a
//! Monte-Carlo oracle for cross-validation.

pub mod charfn;
pub mod collision;
pub mod mc;
pub mod moments;
pub mod rho;
pub mod special;
pub mod stx;
pub mod truncnorm;

pub use charfn::{charfn_mips, charfn_stx};
pub use collision::{collision_prob_e2lsh, collision_prob_fast, collision_prob_mips, matched_width};
pub use mc::{mc_collision_oracle, McEstimate, OracleScheme};
pub use moments::{moments_stx, Moments};
pub use rho::{rho_curve, RhoPoint, RhoScheme};
pub use stx::{pdf_stx, pdf_stx_grid, sdist_pdf};
pub use truncnorm::{sample_lower_truncated, trunc_normal_cdf, trunc_normal_pdf, TruncSpec};

use crate::error::Error;

/// Distance/variance model for one vector pair under coordinate sampling.
///
/// `s` is the Euclidean distance between the pair, `sigma` the standard
/// deviation of the population of per-dimension squared differences
/// (whose mean is `mu = s²/n`), `m` the number of sampled coordinates out
/// of `n`. The squared distance after sampling is modelled as a normal with
/// mean `mu_t = m·s²/n` and standard deviation `sigma_t = √m·σ`, truncated
/// to `[0, ∞)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollisionModel {
    pub s: f64,
    pub sigma: f64,
    pub m: usize,
    pub n: usize,
}

impl CollisionModel {
    pub fn new(s: f64, sigma: f64, m: usize, n: usize) -> Result<Self, Error> {
        if !(s >= 0.0) || !s.is_finite() {
            return Err(Error::InvalidArgument("distance s must be finite and >= 0"));
        }
        if !(sigma >= 0.0) || !sigma.is_finite() {
            return Err(Error::InvalidArgument("sigma must be finite and >= 0"));
        }
        if m == 0 || n == 0 {
            return Err(Error::InvalidArgument("m and n must be >= 1"));
        }
        if m > n {
            return Err(Error::InvalidArgument("m > n is rejected"));
        }
        Ok(Self { s, sigma, m, n })
    }

    /// Mean of the sampled squared distance, m·s²/n.
    pub fn mu_t(&self) -> f64 {
        self.m as f64 * self.s * self.s / self.n as f64
    }

    /// Standard deviation of the sampled squared distance, √m·σ.
    pub fn sigma_t(&self) -> f64 {
        #[allow(unused_imports)]
        use num_traits::Float;
        (self.m as f64).sqrt() * self.sigma
    }
}

/// Controls for the inverse-Fourier quadrature.
///
/// `abs_tol` is the absolute tolerance for a collision probability (the
/// inner density grid gets a tenth of it). `envelope_tol` drives the
/// truncation point of the characteristic-function integral: integration
/// stops where the (tail-subtracted) integrand envelope stays below it.
/// The oscillation rule fixes the panel width at
/// `min(π/(8t), x_max/1000)`, refined once if an embedded lower-order rule
/// disagrees. `grid_points` is the size of the cached density grid the
/// outer integral interpolates over.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub envelope_tol: f64,
    pub grid_points: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            abs_tol: 1e-9,
            envelope_tol: 1e-12,
            grid_points: 257,
        }
    }
}

impl QuadratureConfig {
    /// A looser, faster preset for curve sweeps where 1e-6 suffices.
    pub fn fast() -> Self {
        Self {
            abs_tol: 1e-6,
            envelope_tol: 1e-10,
            grid_points: 129,
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        if !(self.abs_tol > 0.0) || !(self.envelope_tol > 0.0) {
            return Err(Error::InvalidArgument("quadrature tolerances must be > 0"));
        }
        if self.grid_points < 9 {
            return Err(Error::InvalidArgument("grid_points must be >= 9"));
        }
        Ok(())
    }
}
