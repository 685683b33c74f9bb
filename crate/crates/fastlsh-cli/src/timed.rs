//! Wall-clock instrumentation: per-query timing splits and the hash
//! evaluation benchmark.

use std::time::Instant;

use fastlsh_core::data::Dataset;
use fastlsh_core::hash::HasherParams;
use fastlsh_core::index::{hash_dataset_into, LshIndex, QueryResult};

/// Query with the hash phase and the scan/re-rank phase timed separately.
pub fn timed_query(
    index: &LshIndex,
    dataset: &Dataset,
    query: &[f32],
    topk: usize,
) -> Result<QueryResult, fastlsh_core::Error> {
    let t0 = Instant::now();
    let keys = index.compute_keys(query)?;
    let hash_ns = t0.elapsed().as_nanos() as u64;
    let t1 = Instant::now();
    let candidates = index.candidates(&keys);
    let neighbors = index.rank_candidates(dataset, query, &candidates, topk);
    let scan_ns = t1.elapsed().as_nanos() as u64;
    Ok(QueryResult {
        neighbors,
        candidate_count: candidates.len(),
        hash_ns,
        scan_ns,
    })
}

#[derive(Debug, Clone)]
pub struct HashTimings {
    /// median over repetitions of the wall-clock for all hashes of all points
    pub median_ns: u64,
    pub per_rep_ns: Vec<u64>,
    pub hashes: usize,
    pub points: usize,
}

/// Time the evaluation of every hasher on every point.
///
/// A warmup pass over a slice of the data runs first; the timed region
/// only reads the preloaded dataset and writes into a preallocated output
/// buffer (the Hadamard scratch is reused across calls), so no dataset
/// storage is allocated while the clock runs.
pub fn time_hashing(
    dataset: &Dataset,
    hashers: &[HasherParams],
    repetitions: usize,
) -> Result<HashTimings, fastlsh_core::Error> {
    let points = dataset.len();
    let hashes = hashers.len();
    let mut out = vec![0i64; points.saturating_mul(hashes)];

    // warmup over ~10% of the points (at least one)
    let warm = (points / 10).max(1).min(points);
    let warm_rows = Dataset::from_raw(
        "warmup".into(),
        dataset.dim(),
        dataset.raw()[..warm * dataset.dim()].to_vec(),
    )?;
    hash_dataset_into(&warm_rows, hashers, &mut out[..warm * hashes])?;

    let mut per_rep_ns = Vec::with_capacity(repetitions);
    for _ in 0..repetitions.max(1) {
        let start = Instant::now();
        hash_dataset_into(dataset, hashers, &mut out)?;
        per_rep_ns.push(start.elapsed().as_nanos() as u64);
    }
    let mut sorted = per_rep_ns.clone();
    sorted.sort_unstable();
    Ok(HashTimings {
        median_ns: sorted[sorted.len() / 2],
        per_rep_ns,
        hashes,
        points,
    })
}
