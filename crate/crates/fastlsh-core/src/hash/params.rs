//! Elementary hash functions and composite bucket keys.

use alloc::boxed::Box;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;
use rand::Rng;
use rand_distr::StandardNormal;

use super::fwht::fwht_normalized;
use super::sampling::SamplingPlan;
use crate::error::Error;
use crate::rng::{rng_for, stream};

/// The three hash families under comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    /// Sampled projection: floor((ã·S(v) + b̃)/w̃), O(m) per hash.
    FastLsh,
    /// Full p-stable projection: floor((a·v + b)/w), O(n) per hash.
    E2Lsh,
    /// Rademacher diagonal → normalized Walsh–Hadamard → sparse Gaussian
    /// projection → floor quantization. A fast-JL sketch, not a proven LSH.
    AcHash,
}

impl Scheme {
    pub fn as_str(&self) -> &'static str {
        match self {
            Scheme::FastLsh => "fastlsh",
            Scheme::E2Lsh => "e2lsh",
            Scheme::AcHash => "achash",
        }
    }
}

impl core::str::FromStr for Scheme {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "fastlsh" => Ok(Scheme::FastLsh),
            "e2lsh" => Ok(Scheme::E2Lsh),
            "achash" => Ok(Scheme::AcHash),
            _ => Err(Error::InvalidArgument("unknown scheme (expected fastlsh|e2lsh|achash)")),
        }
    }
}

/// Rademacher signs plus the sparse projection over the padded dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct AcHashParts {
    /// ±1 per padded coordinate
    pub signs: Vec<f64>,
    pub sparse_idx: Vec<u32>,
    pub sparse_val: Vec<f64>,
    pub padded_dim: usize,
}

/// One elementary hash function.
///
/// `offset_b` is always `offset_frac · width_w`, with `offset_frac` drawn
/// uniformly from [0, 1); keeping the fraction lets [`with_width`] rescale
/// the bucket width without redrawing randomness, so width sweeps reuse
/// the same projections.
///
/// [`with_width`]: HasherParams::with_width
#[derive(Debug, Clone, PartialEq)]
pub struct HasherParams {
    pub scheme: Scheme,
    pub input_dim: usize,
    /// standard-normal projection vector (length m for the sampled scheme,
    /// n for the full projection, empty for the Hadamard sketch)
    pub proj: Vec<f64>,
    pub offset_frac: f64,
    pub offset_b: f64,
    pub width_w: f64,
    pub plan: Option<SamplingPlan>,
    pub achash: Option<AcHashParts>,
}

fn check_width(width: f64) -> Result<(), Error> {
    if !(width > 0.0) || !width.is_finite() {
        return Err(Error::InvalidArgument("bucket width must be finite and > 0"));
    }
    Ok(())
}

impl HasherParams {
    /// Sampled-projection hasher over m of n coordinates.
    pub fn fastlsh(n: usize, m: usize, width: f64, seed: u64) -> Result<Self, Error> {
        check_width(width)?;
        let plan = SamplingPlan::generate(n, m, crate::rng::split_seed(seed, stream::PLAN, 0, 0))?;
        let mut rng = rng_for(seed, stream::PROJ, 0, 0);
        let proj = (0..m).map(|_| rng.sample(StandardNormal)).collect();
        let offset_frac: f64 = rng_for(seed, stream::OFFSET, 0, 0).random();
        Ok(Self {
            scheme: Scheme::FastLsh,
            input_dim: n,
            proj,
            offset_frac,
            offset_b: offset_frac * width,
            width_w: width,
            plan: Some(plan),
            achash: None,
        })
    }

    /// Full-projection hasher.
    pub fn e2lsh(n: usize, width: f64, seed: u64) -> Result<Self, Error> {
        check_width(width)?;
        if n == 0 {
            return Err(Error::InvalidArgument("dimension must be >= 1"));
        }
        let mut rng = rng_for(seed, stream::PROJ, 0, 0);
        let proj = (0..n).map(|_| rng.sample(StandardNormal)).collect();
        let offset_frac: f64 = rng_for(seed, stream::OFFSET, 0, 0).random();
        Ok(Self {
            scheme: Scheme::E2Lsh,
            input_dim: n,
            proj,
            offset_frac,
            offset_b: offset_frac * width,
            width_w: width,
            plan: None,
            achash: None,
        })
    }

    /// Hadamard sketch hasher with the given sparse-projection density.
    pub fn achash(n: usize, width: f64, density: f64, seed: u64) -> Result<Self, Error> {
        check_width(width)?;
        if n == 0 {
            return Err(Error::InvalidArgument("dimension must be >= 1"));
        }
        if !(density > 0.0 && density <= 1.0) {
            return Err(Error::InvalidArgument("density must be in (0, 1]"));
        }
        let padded_dim = n.next_power_of_two();
        let mut sign_rng = rng_for(seed, stream::SIGNS, 0, 0);
        let signs = (0..padded_dim)
            .map(|_| if sign_rng.random::<bool>() { 1.0 } else { -1.0 })
            .collect();
        let mut sparse_rng = rng_for(seed, stream::SPARSE, 0, 0);
        let mut sparse_idx = Vec::new();
        let mut sparse_val = Vec::new();
        for i in 0..padded_dim {
            if sparse_rng.random::<f64>() < density {
                sparse_idx.push(i as u32);
                sparse_val.push(sparse_rng.sample(StandardNormal));
            }
        }
        let offset_frac: f64 = rng_for(seed, stream::OFFSET, 0, 0).random();
        Ok(Self {
            scheme: Scheme::AcHash,
            input_dim: n,
            proj: Vec::new(),
            offset_frac,
            offset_b: offset_frac * width,
            width_w: width,
            plan: None,
            achash: Some(AcHashParts {
                signs,
                sparse_idx,
                sparse_val,
                padded_dim,
            }),
        })
    }

    /// The same hasher at a different bucket width; projections, plan, and
    /// the offset fraction are untouched.
    pub fn with_width(&self, width: f64) -> Result<Self, Error> {
        check_width(width)?;
        let mut out = self.clone();
        out.width_w = width;
        out.offset_b = out.offset_frac * width;
        Ok(out)
    }

    /// The projection value before quantization.
    pub fn raw_projection(&self, v: &[f32]) -> Result<f64, Error> {
        let mut scratch = Vec::new();
        self.raw_projection_with_scratch(v, &mut scratch)
    }

    /// As [`raw_projection`], reusing a scratch buffer (only the Hadamard
    /// sketch needs one).
    ///
    /// [`raw_projection`]: HasherParams::raw_projection
    pub fn raw_projection_with_scratch(
        &self,
        v: &[f32],
        scratch: &mut Vec<f64>,
    ) -> Result<f64, Error> {
        if v.len() != self.input_dim {
            return Err(Error::InvalidArgument("vector length does not match hasher dimension"));
        }
        let raw = match self.scheme {
            Scheme::FastLsh => {
                let plan = self.plan.as_ref().expect("fastlsh hasher carries a plan");
                if plan.n() != v.len() {
                    return Err(Error::InvalidArgument(
                        "sampling plan dimension does not match the vector",
                    ));
                }
                let mut acc = 0.0f64;
                // plan indices are < plan.n() == v.len() by construction,
                // so the gather can skip bounds checks
                for (&i, &w) in plan.indices().iter().zip(self.proj.iter()) {
                    acc += unsafe { *v.get_unchecked(i as usize) } as f64 * w;
                }
                acc
            }
            Scheme::E2Lsh => {
                let mut acc = 0.0f64;
                for (x, w) in v.iter().zip(self.proj.iter()) {
                    acc += *x as f64 * *w;
                }
                acc
            }
            Scheme::AcHash => {
                let parts = self.achash.as_ref().expect("achash hasher carries parts");
                scratch.clear();
                scratch.resize(parts.padded_dim, 0.0);
                for (i, &x) in v.iter().enumerate() {
                    scratch[i] = x as f64 * parts.signs[i];
                }
                fwht_normalized(scratch)?;
                let mut acc = 0.0f64;
                for (&i, &w) in parts.sparse_idx.iter().zip(parts.sparse_val.iter()) {
                    acc += scratch[i as usize] * w;
                }
                acc
            }
        };
        if !raw.is_finite() {
            return Err(Error::InvalidArgument(
                "projection is not finite (NaN/Inf in input?)",
            ));
        }
        Ok(raw)
    }

    /// Bucket id for a raw projection value.
    #[inline]
    pub fn quantize(&self, raw: f64) -> i64 {
        ((raw + self.offset_b) / self.width_w).floor() as i64
    }

    /// The hash: floor((projection + b)/w).
    pub fn hash_value(&self, v: &[f32]) -> Result<i64, Error> {
        Ok(self.quantize(self.raw_projection(v)?))
    }
}

/// Concatenation of k elementary hash values; the exact tuple, so equal
/// keys mean equal hash tuples and nothing else.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompositeKey(Box<[i64]>);

impl CompositeKey {
    pub fn new(values: Box<[i64]>) -> Self {
        Self(values)
    }

    pub fn components(&self) -> &[i64] {
        &self.0
    }
}

/// Hash `v` under each of the k hashers and concatenate.
pub fn composite_hash_key(v: &[f32], hashers: &[HasherParams]) -> Result<CompositeKey, Error> {
    if hashers.is_empty() {
        return Err(Error::InvalidArgument("composite key needs k >= 1 hashers"));
    }
    let mut scratch = Vec::new();
    let mut values = Vec::with_capacity(hashers.len());
    for h in hashers {
        values.push(h.quantize(h.raw_projection_with_scratch(v, &mut scratch)?));
    }
    Ok(CompositeKey(values.into_boxed_slice()))
}
