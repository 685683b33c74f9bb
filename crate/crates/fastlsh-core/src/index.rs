//! Multi-table LSH index with exact candidate re-ranking.
//!
//! Each of the L tables hashes every point with its own k elementary
//! functions and buckets ids under the exact k-tuple key. A query probes
//! one bucket per table, unions the ids, and re-ranks all candidates by
//! true Euclidean distance — the exact evaluation strategy, not the
//! 3L-truncated one.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use hashbrown::HashMap;

use crate::data::{l2_distance_sq, Dataset, Neighbor};
use crate::error::Error;
use crate::hash::{CompositeKey, HasherParams, Scheme};
use crate::rng::{split_seed, stream};

/// Table layout and hasher parameters for one index.
#[derive(Debug, Clone, PartialEq)]
pub struct IndexConfig {
    pub scheme: Scheme,
    /// hashes per table
    pub k: usize,
    /// number of tables
    pub l: usize,
    pub width: f64,
    /// sampled dimensions per hash (FastLsh only)
    pub m: usize,
    /// sparse projection density (AcHash only)
    pub achash_density: f64,
    pub seed: u64,
}

impl IndexConfig {
    pub fn validate(&self, dim: usize) -> Result<(), Error> {
        if self.k == 0 || self.l == 0 {
            return Err(Error::InvalidArgument("index needs k >= 1 and L >= 1"));
        }
        if !(self.width > 0.0) || !self.width.is_finite() {
            return Err(Error::InvalidArgument("index width must be finite and > 0"));
        }
        if self.scheme == Scheme::FastLsh && (self.m == 0 || self.m > dim) {
            return Err(Error::InvalidArgument("fastlsh needs 1 <= m <= dim"));
        }
        if self.scheme == Scheme::AcHash && !(self.achash_density > 0.0 && self.achash_density <= 1.0)
        {
            return Err(Error::InvalidArgument("achash density must be in (0, 1]"));
        }
        Ok(())
    }

    /// The L×k hashers, each seeded by a counter split on (table, fn).
    pub fn build_hashers(&self, dim: usize) -> Result<Vec<Vec<HasherParams>>, Error> {
        self.validate(dim)?;
        let mut tables = Vec::with_capacity(self.l);
        for t in 0..self.l {
            let mut fns = Vec::with_capacity(self.k);
            for j in 0..self.k {
                let seed = split_seed(self.seed, stream::HASHER, t as u64, j as u64);
                let h = match self.scheme {
                    Scheme::FastLsh => HasherParams::fastlsh(dim, self.m, self.width, seed)?,
                    Scheme::E2Lsh => HasherParams::e2lsh(dim, self.width, seed)?,
                    Scheme::AcHash => {
                        HasherParams::achash(dim, self.width, self.achash_density, seed)?
                    }
                };
                fns.push(h);
            }
            tables.push(fns);
        }
        Ok(tables)
    }
}

type Bucket = Vec<u32>;
type Table = HashMap<CompositeKey, Bucket>;

/// Raw projection values for every (table, fn, point); lets width sweeps
/// and index builds share the expensive projection pass.
pub struct RawProjections {
    /// indexed [t*k + j][point]
    pub columns: Vec<Vec<f64>>,
}

/// Compute all projections for a dataset under the given hashers.
pub fn compute_raw_projections(
    dataset: &Dataset,
    hashers: &[Vec<HasherParams>],
) -> Result<RawProjections, Error> {
    let mut columns = Vec::with_capacity(hashers.iter().map(Vec::len).sum());
    let mut scratch = Vec::new();
    for table in hashers {
        for h in table {
            let mut col = Vec::with_capacity(dataset.len());
            for row in dataset.rows() {
                col.push(h.raw_projection_with_scratch(row, &mut scratch)?);
            }
            columns.push(col);
        }
    }
    Ok(RawProjections { columns })
}

/// Evaluate every hasher on every point, writing hash values into
/// `out[point * hashers.len() + hasher]`.
///
/// Shapes are validated once and the inner loops are specialized per
/// scheme, so the per-hash cost is the arithmetic itself — this is the
/// path to benchmark when comparing hash-evaluation cost across schemes.
pub fn hash_dataset_into(
    dataset: &Dataset,
    hashers: &[HasherParams],
    out: &mut [i64],
) -> Result<(), Error> {
    let dim = dataset.dim();
    let count = hashers.len();
    if out.len() != dataset.len() * count {
        return Err(Error::InvalidArgument("output buffer has the wrong size"));
    }
    // specialized views; shape checks happen here, once
    enum Kernel<'a> {
        Fast {
            indices: &'a [u32],
            proj: &'a [f64],
            b: f64,
            w: f64,
        },
        Full {
            proj: &'a [f64],
            b: f64,
            w: f64,
        },
        Sketch(&'a HasherParams),
    }
    let mut kernels = Vec::with_capacity(count);
    for h in hashers {
        if h.input_dim != dim {
            return Err(Error::InvalidArgument("hasher dimension does not match dataset"));
        }
        kernels.push(match h.scheme {
            Scheme::FastLsh => {
                let plan = h
                    .plan
                    .as_ref()
                    .ok_or(Error::InvalidArgument("fastlsh hasher lacks a plan"))?;
                if plan.n() != dim || plan.m() != h.proj.len() {
                    return Err(Error::InvalidArgument("sampling plan shape mismatch"));
                }
                Kernel::Fast {
                    indices: plan.indices(),
                    proj: &h.proj,
                    b: h.offset_b,
                    w: h.width_w,
                }
            }
            Scheme::E2Lsh => {
                if h.proj.len() != dim {
                    return Err(Error::InvalidArgument("projection length mismatch"));
                }
                Kernel::Full {
                    proj: &h.proj,
                    b: h.offset_b,
                    w: h.width_w,
                }
            }
            Scheme::AcHash => Kernel::Sketch(h),
        });
    }
    let mut scratch = Vec::new();
    for (out_row, row) in out.chunks_exact_mut(count).zip(dataset.rows()) {
        for (slot, kernel) in out_row.iter_mut().zip(kernels.iter()) {
            *slot = match kernel {
                Kernel::Fast {
                    indices,
                    proj,
                    b,
                    w,
                } => {
                    let mut acc = 0.0f64;
                    // indices are < plan.n() == dim == row.len() (validated
                    // above), so the gather skips bounds checks
                    for (&i, &c) in indices.iter().zip(proj.iter()) {
                        acc += unsafe { *row.get_unchecked(i as usize) } as f64 * c;
                    }
                    ((acc + b) / w).floor() as i64
                }
                Kernel::Full { proj, b, w } => {
                    let mut acc = 0.0f64;
                    for (&x, &c) in row.iter().zip(proj.iter()) {
                        acc += x as f64 * c;
                    }
                    ((acc + b) / w).floor() as i64
                }
                Kernel::Sketch(h) => {
                    h.quantize(h.raw_projection_with_scratch(row, &mut scratch)?)
                }
            };
        }
    }
    // NaN inputs are rejected at dataset construction, so no per-value
    // finiteness check is needed here
    Ok(())
}

/// L hash tables over one dataset. The dataset itself is referenced by
/// fingerprint/shape only; queries take it as an argument for re-ranking.
#[derive(Debug, PartialEq)]
pub struct LshIndex {
    pub cfg: IndexConfig,
    pub dim: usize,
    pub num_points: u32,
    hashers: Vec<Vec<HasherParams>>,
    tables: Vec<Table>,
}

/// Build an index over the dataset; deterministic in `cfg.seed`.
pub fn build_index(dataset: &Dataset, cfg: &IndexConfig) -> Result<LshIndex, Error> {
    if dataset.is_empty() {
        return Err(Error::InvalidArgument("cannot index an empty dataset"));
    }
    let hashers = cfg.build_hashers(dataset.dim())?;
    let raw = compute_raw_projections(dataset, &hashers)?;
    build_from_projections(dataset, cfg, hashers, &raw)
}

/// Build from precomputed projections (must come from hashers equivalent
/// to `cfg`'s, e.g. via [`compute_raw_projections`] after a width sweep).
pub fn build_index_with_projections(
    dataset: &Dataset,
    cfg: &IndexConfig,
    raw: &RawProjections,
) -> Result<LshIndex, Error> {
    if dataset.is_empty() {
        return Err(Error::InvalidArgument("cannot index an empty dataset"));
    }
    let hashers = cfg.build_hashers(dataset.dim())?;
    build_from_projections(dataset, cfg, hashers, raw)
}

fn build_from_projections(
    dataset: &Dataset,
    cfg: &IndexConfig,
    hashers: Vec<Vec<HasherParams>>,
    raw: &RawProjections,
) -> Result<LshIndex, Error> {
    let n = dataset.len();
    if raw.columns.len() != cfg.l * cfg.k || raw.columns.iter().any(|c| c.len() != n) {
        return Err(Error::InvalidArgument("projection cache shape does not match config"));
    }
    let mut tables = Vec::with_capacity(cfg.l);
    let mut key_buf: Vec<i64> = Vec::with_capacity(cfg.k);
    for t in 0..cfg.l {
        let mut table = Table::default();
        for point in 0..n {
            key_buf.clear();
            for j in 0..cfg.k {
                let h = &hashers[t][j];
                key_buf.push(h.quantize(raw.columns[t * cfg.k + j][point]));
            }
            table
                .entry(CompositeKey::new(key_buf.clone().into_boxed_slice()))
                .or_insert_with(Bucket::new)
                .push(point as u32);
        }
        // ids are inserted in ascending order already; sort anyway so the
        // invariant holds for any future parallel build path
        for bucket in table.values_mut() {
            bucket.sort_unstable();
        }
        tables.push(table);
    }
    Ok(LshIndex {
        cfg: cfg.clone(),
        dim: dataset.dim(),
        num_points: n as u32,
        hashers,
        tables,
    })
}

/// Query outcome: exact-ranked neighbors plus the candidate-set size and
/// (when measured by the caller) the hash/scan timing split.
#[derive(Debug, Clone, PartialEq)]
pub struct QueryResult {
    pub neighbors: Vec<Neighbor>,
    pub candidate_count: usize,
    pub hash_ns: u64,
    pub scan_ns: u64,
}

impl LshIndex {
    pub fn hashers(&self) -> &[Vec<HasherParams>] {
        &self.hashers
    }

    pub fn tables(&self) -> &[Table] {
        &self.tables
    }

    /// Composite keys of a query vector, one per table.
    pub fn compute_keys(&self, v: &[f32]) -> Result<Vec<CompositeKey>, Error> {
        if v.len() != self.dim {
            return Err(Error::InvalidArgument("query dimension does not match index"));
        }
        let mut scratch = Vec::new();
        let mut keys = Vec::with_capacity(self.cfg.l);
        for table in &self.hashers {
            let mut parts = Vec::with_capacity(self.cfg.k);
            for h in table {
                parts.push(h.quantize(h.raw_projection_with_scratch(v, &mut scratch)?));
            }
            keys.push(CompositeKey::new(parts.into_boxed_slice()));
        }
        Ok(keys)
    }

    /// Union of the probed buckets, deduplicated and sorted by id.
    pub fn candidates(&self, keys: &[CompositeKey]) -> Vec<u32> {
        let mut out = Vec::new();
        for (table, key) in self.tables.iter().zip(keys) {
            if let Some(bucket) = table.get(key) {
                out.extend_from_slice(bucket);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Exact re-rank of a candidate set against the dataset.
    pub fn rank_candidates(
        &self,
        dataset: &Dataset,
        v: &[f32],
        candidates: &[u32],
        topk: usize,
    ) -> Vec<Neighbor> {
        let mut scored: Vec<Neighbor> = candidates
            .iter()
            .map(|&id| Neighbor {
                id,
                dist: l2_distance_sq(v, dataset.row(id as usize)).sqrt(),
            })
            .collect();
        scored.sort_by(|a, b| a.dist.partial_cmp(&b.dist).unwrap().then(a.id.cmp(&b.id)));
        scored.truncate(topk);
        scored
    }

    /// Probe, union, and exactly re-rank; returns top-k (fewer when the
    /// candidate set is smaller). An empty candidate set is an empty
    /// result, not an error.
    pub fn query(&self, dataset: &Dataset, v: &[f32], topk: usize) -> Result<QueryResult, Error> {
        if dataset.dim() != self.dim || dataset.len() != self.num_points as usize {
            return Err(Error::InvalidArgument("dataset does not match the indexed one"));
        }
        let keys = self.compute_keys(v)?;
        let candidates = self.candidates(&keys);
        let neighbors = self.rank_candidates(dataset, v, &candidates, topk);
        Ok(QueryResult {
            neighbors,
            candidate_count: candidates.len(),
            hash_ns: 0,
            scan_ns: 0,
        })
    }

    /// Rebuild from persisted parts; hashers are re-derived from the
    /// config so only buckets travel.
    pub fn from_buckets(
        cfg: IndexConfig,
        dim: usize,
        num_points: u32,
        buckets: Vec<Vec<(CompositeKey, Vec<u32>)>>,
    ) -> Result<Self, Error> {
        if buckets.len() != cfg.l {
            return Err(Error::InvalidArgument("bucket table count does not match config"));
        }
        let hashers = cfg.build_hashers(dim)?;
        let tables = buckets
            .into_iter()
            .map(|t| t.into_iter().collect::<Table>())
            .collect();
        Ok(Self {
            cfg,
            dim,
            num_points,
            hashers,
            tables,
        })
    }
}

/// Mean over queries of |returned top-k ∩ true top-k| / k.
pub fn recall_at_k(
    returned: &[Vec<u32>],
    ground_truth: &[Vec<u32>],
    k: usize,
) -> Result<f64, Error> {
    if returned.len() != ground_truth.len() || returned.is_empty() {
        return Err(Error::InvalidArgument("recall needs matching nonempty query sets"));
    }
    if k == 0 {
        return Err(Error::InvalidArgument("recall needs k >= 1"));
    }
    let mut total = 0.0;
    for (ret, truth) in returned.iter().zip(ground_truth) {
        if truth.len() < k {
            return Err(Error::InvalidArgument("ground truth holds fewer than k neighbors"));
        }
        let true_k = &truth[..k];
        let hits = ret
            .iter()
            .take(k)
            .filter(|id| true_k.contains(id))
            .count();
        total += hits as f64 / k as f64;
    }
    Ok(total / returned.len() as f64)
}
