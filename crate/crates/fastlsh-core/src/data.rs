//! In-memory datasets, synthetic generators, exact k-NN ground truth, and
//! the pairwise (μ, σ) statistics the theory layer consumes.

use alloc::string::String;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::Error;
use crate::rng::{rng_for, stream};

/// Rectangular set of `len × dim` vectors, stored as f32 row-major;
/// accumulation everywhere happens in f64.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    name: String,
    dim: usize,
    data: Vec<f32>,
}

impl Dataset {
    /// Wrap raw row-major storage; rejects ragged lengths and NaN/Inf.
    pub fn from_raw(name: String, dim: usize, data: Vec<f32>) -> Result<Self, Error> {
        if dim == 0 {
            return Err(Error::InvalidArgument("dataset dimension must be >= 1"));
        }
        if data.len() % dim != 0 {
            return Err(Error::InvalidArgument("dataset storage is not rectangular"));
        }
        if data.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidArgument("dataset contains NaN or Inf"));
        }
        Ok(Self { name, dim, data })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.data.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn row(&self, i: usize) -> &[f32] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f32]> {
        self.data.chunks_exact(self.dim)
    }

    pub fn raw(&self) -> &[f32] {
        &self.data
    }

    /// Scale every vector to unit norm (angular-similarity preprocessing).
    pub fn normalize(&mut self) -> Result<(), Error> {
        let dim = self.dim;
        for row in self.data.chunks_exact_mut(dim) {
            let norm = row.iter().map(|&x| x as f64 * x as f64).sum::<f64>().sqrt();
            if norm <= 0.0 {
                return Err(Error::InvalidArgument("cannot normalize a zero vector"));
            }
            for x in row.iter_mut() {
                *x = (*x as f64 / norm) as f32;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SyntheticKind {
    /// Uniform in the unit ball (norms <= 1).
    UnitHypersphere,
    /// i.i.d. standard normal coordinates.
    Gaussian,
    /// Gaussian clusters with log-uniform radii; pairwise distances spread
    /// over roughly [0.5, 20] regardless of dimension.
    Clustered,
}

impl core::str::FromStr for SyntheticKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "unit_hypersphere" | "hypersphere" => Ok(SyntheticKind::UnitHypersphere),
            "gaussian" => Ok(SyntheticKind::Gaussian),
            "clustered" => Ok(SyntheticKind::Clustered),
            _ => Err(Error::InvalidArgument(
                "unknown kind (expected unit_hypersphere|gaussian|clustered)",
            )),
        }
    }
}

const CLUSTER_COUNT: usize = 64;

/// Deterministic synthetic dataset.
pub fn gen_synthetic(
    n_points: usize,
    dim: usize,
    kind: SyntheticKind,
    seed: u64,
) -> Result<Dataset, Error> {
    if n_points == 0 || dim == 0 {
        return Err(Error::InvalidArgument("synthetic dataset needs n >= 1 and dim >= 1"));
    }
    let mut rng = rng_for(seed, stream::DATA, 0, 0);
    let mut data = Vec::with_capacity(n_points * dim);
    let name = String::from(match kind {
        SyntheticKind::UnitHypersphere => "synthetic-hypersphere",
        SyntheticKind::Gaussian => "synthetic-gaussian",
        SyntheticKind::Clustered => "synthetic-clustered",
    });
    match kind {
        SyntheticKind::Gaussian => {
            for _ in 0..n_points * dim {
                data.push(rng.sample::<f64, _>(StandardNormal) as f32);
            }
        }
        SyntheticKind::UnitHypersphere => {
            let mut buf = alloc::vec![0.0f64; dim];
            for _ in 0..n_points {
                let mut norm2 = 0.0f64;
                for b in buf.iter_mut() {
                    *b = rng.sample(StandardNormal);
                    norm2 += *b * *b;
                }
                let radius: f64 = rng.random::<f64>().powf(1.0 / dim as f64);
                let scale = radius / norm2.sqrt();
                data.extend(buf.iter().map(|&b| (b * scale) as f32));
            }
        }
        SyntheticKind::Clustered => {
            let scale = 1.0 / (dim as f64).sqrt();
            let center_std = 7.0 * scale;
            let (r_lo, r_hi) = (0.35 * scale, 3.5 * scale);
            let mut centers = Vec::with_capacity(CLUSTER_COUNT * dim);
            let mut radii = Vec::with_capacity(CLUSTER_COUNT);
            for _ in 0..CLUSTER_COUNT {
                for _ in 0..dim {
                    centers.push(rng.sample::<f64, _>(StandardNormal) * center_std);
                }
                radii.push(r_lo * (r_hi / r_lo).powf(rng.random::<f64>()));
            }
            for _ in 0..n_points {
                let c = rng.random_range(0..CLUSTER_COUNT);
                let base = &centers[c * dim..(c + 1) * dim];
                for d in 0..dim {
                    let noise: f64 = rng.sample(StandardNormal);
                    data.push((base[d] + radii[c] * noise) as f32);
                }
            }
        }
    }
    Dataset::from_raw(name, dim, data)
}

/// Squared Euclidean distance with f64 accumulation; four independent
/// accumulators keep the ground-truth scans throughput-bound rather than
/// latency-bound.
pub fn l2_distance_sq(a: &[f32], b: &[f32]) -> f64 {
    let mut acc = [0.0f64; 4];
    let chunks = a.len() / 4 * 4;
    let mut i = 0;
    while i < chunks {
        for lane in 0..4 {
            let d = a[i + lane] as f64 - b[i + lane] as f64;
            acc[lane] += d * d;
        }
        i += 4;
    }
    let mut tail = 0.0f64;
    for j in chunks..a.len() {
        let d = a[j] as f64 - b[j] as f64;
        tail += d * d;
    }
    acc[0] + acc[1] + acc[2] + acc[3] + tail
}

/// Distance μ/σ statistics of one pair: `s = ‖v−u‖`, `mu = s²/n`, and
/// `sigma` the population std of the per-dimension squared differences.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairStats {
    pub s: f64,
    pub mu: f64,
    pub sigma: f64,
}

pub fn pair_stats(v: &[f32], u: &[f32]) -> Result<PairStats, Error> {
    if v.len() != u.len() || v.is_empty() {
        return Err(Error::InvalidArgument("pair stats need equal nonzero dimensions"));
    }
    let n = v.len() as f64;
    let mut sum = 0.0f64;
    let mut sum_sq = 0.0f64;
    for (&a, &b) in v.iter().zip(u.iter()) {
        let d = a as f64 - b as f64;
        let dsq = d * d;
        sum += dsq;
        sum_sq += dsq * dsq;
    }
    let mu = sum / n;
    let var = (sum_sq / n - mu * mu).max(0.0);
    Ok(PairStats {
        s: sum.sqrt(),
        mu,
        sigma: var.sqrt(),
    })
}

/// One distance bucket of the σ profile.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SigmaBucket {
    pub s_lo: f64,
    pub s_hi: f64,
    pub sigma_min: f64,
    pub sigma_mean: f64,
    pub sigma_max: f64,
    pub count: usize,
}

/// min/mean/max σ observed among sampled pairs, bucketed by distance.
#[derive(Debug, Clone, PartialEq)]
pub struct SigmaProfile {
    pub buckets: Vec<SigmaBucket>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Envelope {
    Min,
    Mean,
    Max,
}

impl SigmaProfile {
    /// σ at distance `s` under the chosen envelope, from the nearest
    /// populated bucket. None when the profile is empty.
    pub fn sigma_at(&self, s: f64, envelope: Envelope) -> Option<f64> {
        let pick = |b: &SigmaBucket| match envelope {
            Envelope::Min => b.sigma_min,
            Envelope::Mean => b.sigma_mean,
            Envelope::Max => b.sigma_max,
        };
        self.buckets
            .iter()
            .filter(|b| b.count > 0)
            .min_by(|a, b| {
                let ca = 0.5 * (a.s_lo + a.s_hi);
                let cb = 0.5 * (b.s_lo + b.s_hi);
                (ca - s).abs().partial_cmp(&(cb - s).abs()).unwrap()
            })
            .map(pick)
    }
}

/// Sample `sample_pairs` random pairs and aggregate σ per distance bucket
/// (equal-width buckets spanning the observed distance range).
pub fn dataset_sigma_profile(
    dataset: &Dataset,
    sample_pairs: usize,
    num_buckets: usize,
    seed: u64,
) -> Result<SigmaProfile, Error> {
    if dataset.len() < 2 {
        return Err(Error::InvalidArgument("sigma profile needs at least 2 points"));
    }
    if sample_pairs == 0 || num_buckets == 0 {
        return Err(Error::InvalidArgument("sigma profile needs pairs >= 1 and buckets >= 1"));
    }
    let mut rng = rng_for(seed, stream::PAIR_SAMPLE, 0, 0);
    let n = dataset.len();
    let mut stats = Vec::with_capacity(sample_pairs);
    let mut s_min = f64::INFINITY;
    let mut s_max = 0.0f64;
    for _ in 0..sample_pairs {
        let i = rng.random_range(0..n);
        let mut j = rng.random_range(0..n);
        if i == j {
            j = (j + 1) % n;
        }
        let ps = pair_stats(dataset.row(i), dataset.row(j))?;
        s_min = s_min.min(ps.s);
        s_max = s_max.max(ps.s);
        stats.push(ps);
    }
    if !(s_max > s_min) {
        s_max = s_min + 1.0;
    }
    let width = (s_max - s_min) / num_buckets as f64;
    let mut buckets: Vec<SigmaBucket> = (0..num_buckets)
        .map(|b| SigmaBucket {
            s_lo: s_min + b as f64 * width,
            s_hi: s_min + (b + 1) as f64 * width,
            sigma_min: f64::INFINITY,
            sigma_mean: 0.0,
            sigma_max: 0.0,
            count: 0,
        })
        .collect();
    for ps in &stats {
        let b = (((ps.s - s_min) / width) as usize).min(num_buckets - 1);
        let bucket = &mut buckets[b];
        bucket.sigma_min = bucket.sigma_min.min(ps.sigma);
        bucket.sigma_max = bucket.sigma_max.max(ps.sigma);
        bucket.sigma_mean += ps.sigma;
        bucket.count += 1;
    }
    for b in buckets.iter_mut() {
        if b.count > 0 {
            b.sigma_mean /= b.count as f64;
        } else {
            b.sigma_min = 0.0;
        }
    }
    Ok(SigmaProfile { buckets })
}

/// Construct a vector pair whose distance is exactly `s` and whose
/// per-dimension squared-difference std is as close to `sigma_target` as a
/// nonnegative population allows.
///
/// A population with mean μ = s²/n cannot have std above μ·√(n−1) (attained
/// only by the single-spike population), so targets beyond that cap are
/// clipped. Below the cap, a two-level population with the largest feasible
/// number of active dimensions hits the target exactly, which also keeps
/// the sampled sum as close to its normal model as the target permits.
/// Feed the pair's *measured* [`pair_stats`] to the theory side.
pub fn pair_with_target_stats(n: usize, s: f64, sigma_target: f64) -> Result<(Vec<f32>, Vec<f32>), Error> {
    if n == 0 || !(s > 0.0) || !(sigma_target >= 0.0) {
        return Err(Error::InvalidArgument("pair construction needs n >= 1, s > 0, sigma >= 0"));
    }
    let nf = n as f64;
    let mu = s * s / nf;
    let sigma_cap = mu * (nf - 1.0).sqrt();
    let sigma = sigma_target.min(sigma_cap);
    let mut sq = alloc::vec![0.0f64; n];
    if sigma >= 0.999 * sigma_cap {
        sq[0] = s * s;
    } else if sigma == 0.0 {
        sq.fill(mu);
    } else {
        let k = ((nf * mu * mu / (mu * mu + sigma * sigma)).floor() as usize).clamp(1, n - 1);
        let kf = k as f64;
        let delta = sigma * nf / (kf * (nf - kf)).sqrt();
        let a = mu + (nf - kf) / nf * delta;
        let b = mu - kf / nf * delta;
        if b < 0.0 {
            // one unequal level: b chosen to keep everything nonnegative
            let b = (mu - sigma / (nf - 1.0).sqrt()).max(0.0);
            let a = nf * mu - (nf - 1.0) * b;
            sq[0] = a;
            sq[1..].fill(b);
        } else {
            sq[..k].fill(a);
            sq[k..].fill(b);
        }
    }
    let v: Vec<f32> = sq.iter().map(|&x| x.sqrt() as f32).collect();
    let u = alloc::vec![0.0f32; n];
    Ok((v, u))
}

/// One returned neighbor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Neighbor {
    pub id: u32,
    pub dist: f64,
}

/// Exact k nearest neighbors of one query, ties broken by ascending id.
pub fn brute_force_knn_query(dataset: &Dataset, query: &[f32], k: usize) -> Vec<Neighbor> {
    let mut best: Vec<Neighbor> = Vec::with_capacity(k + 1);
    for (i, row) in dataset.rows().enumerate() {
        let dist = l2_distance_sq(query, row).sqrt();
        let cand = Neighbor { id: i as u32, dist };
        if best.len() < k || dist < best[best.len() - 1].dist
            || (dist == best[best.len() - 1].dist && cand.id < best[best.len() - 1].id)
        {
            let pos = best
                .binary_search_by(|b| {
                    b.dist
                        .partial_cmp(&cand.dist)
                        .unwrap()
                        .then(b.id.cmp(&cand.id))
                })
                .unwrap_or_else(|p| p);
            best.insert(pos, cand);
            if best.len() > k {
                best.pop();
            }
        }
    }
    best
}

/// Exact k nearest neighbors for every query.
pub fn brute_force_knn(
    dataset: &Dataset,
    queries: &Dataset,
    k: usize,
) -> Result<Vec<Vec<Neighbor>>, Error> {
    if k == 0 || k > dataset.len() {
        return Err(Error::InvalidArgument("k must be in [1, dataset size]"));
    }
    if dataset.dim() != queries.dim() {
        return Err(Error::InvalidArgument("query dimension does not match dataset"));
    }
    Ok(queries
        .rows()
        .map(|q| brute_force_knn_query(dataset, q, k))
        .collect())
}
