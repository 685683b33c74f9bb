//! The experiment runner: shared dataset/queries/ground truth, per-scheme
//! width tuning, recall and timing measurement, and the report assembly.
//!
//! Fairness rules: every scheme sees the same dataset, the same test and
//! validation queries, the same ground truth, and the same (k, L); only
//! the elementary hash function (and its tuned width) differs. Query
//! latency is measured single-threaded.

use anyhow::{anyhow, bail, Context};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use fastlsh_core::data::{brute_force_knn_query, gen_synthetic, Dataset, SyntheticKind};
use fastlsh_core::hash::Scheme;
use fastlsh_core::index::IndexConfig;
use fastlsh_core::recall_at_k;
use fastlsh_core::rng::split_seed;

use crate::config::{ExperimentConfig, QuerySource};
use crate::io::{dataset_fingerprint, fingerprint_hex, read_fvecs};
use crate::timed::{time_hashing, timed_query};
use crate::tune::tune_and_build;

/// Per-scheme results; config knobs echoed alongside.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SchemeRecord {
    pub scheme: String,
    pub k: usize,
    pub l: usize,
    pub width: f64,
    pub m: usize,
    pub recall_at_k: f64,
    pub avg_query_time_ns: u64,
    pub avg_hash_time_ns: u64,
    pub avg_scan_time_ns: u64,
    pub total_hash_eval_ns: u64,
    pub candidate_count_mean: f64,
    pub candidate_count_max: usize,
    pub tuned_recall_validation: f64,
    pub tune_target_met: bool,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExperimentReport {
    /// the configuration, echoed verbatim
    pub config: serde_json::Value,
    pub dataset_name: String,
    pub dataset_points: usize,
    pub dataset_dim: usize,
    pub dataset_fingerprint: String,
    pub test_queries: usize,
    pub validation_queries: usize,
    pub topk: usize,
    pub records: Vec<SchemeRecord>,
}

/// Dataset plus held-out test and validation query splits.
pub struct ExperimentData {
    pub dataset: Dataset,
    pub test_queries: Dataset,
    pub validation_queries: Dataset,
}

fn parse_synthetic(spec: &str) -> anyhow::Result<(SyntheticKind, usize, usize)> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 4 || parts[0] != "synthetic" {
        bail!("synthetic spec must be synthetic:<kind>:<points>:<dim>");
    }
    let kind: SyntheticKind = parts[1]
        .parse()
        .map_err(|e| anyhow!("{e}"))?;
    Ok((kind, parts[2].parse()?, parts[3].parse()?))
}

/// Resolve the dataset and query splits named by a config.
///
/// Synthetic data draws points and both query splits from one generator
/// invocation, so queries share the dataset's cluster structure while
/// staying held out. File-backed queries are split: the first
/// `validation_queries` for tuning, the rest for the test run.
pub fn resolve_data(cfg: &ExperimentConfig) -> anyhow::Result<ExperimentData> {
    let val_count = cfg.validation_queries.max(1);
    if cfg.dataset.starts_with("synthetic:") {
        let (kind, points, dim) = parse_synthetic(&cfg.dataset)?;
        let test_count = match &cfg.queries {
            QuerySource::Count(c) => *c,
            QuerySource::Path(_) => bail!("synthetic datasets take a query count, not a path"),
        };
        let total = points + test_count + val_count;
        let all = gen_synthetic(total, dim, kind, split_seed(cfg.seed, fastlsh_core::rng::stream::DATA, 0, 0))?;
        let slice = |from: usize, to: usize, name: &str| {
            Dataset::from_raw(name.into(), dim, all.raw()[from * dim..to * dim].to_vec())
        };
        let mut dataset = slice(0, points, &format!("{}-{points}x{dim}", all.name()))?;
        let mut test_queries = slice(points, points + test_count, "queries-test")?;
        let mut validation_queries = slice(points + test_count, total, "queries-validation")?;
        if cfg.normalize {
            dataset.normalize()?;
            test_queries.normalize()?;
            validation_queries.normalize()?;
        }
        Ok(ExperimentData {
            dataset,
            test_queries,
            validation_queries,
        })
    } else {
        let mut dataset = read_fvecs(&cfg.dataset).context("reading dataset")?;
        let mut queries = match &cfg.queries {
            QuerySource::Path(p) => read_fvecs(p).context("reading queries")?,
            QuerySource::Count(_) => bail!("file datasets need a query file path"),
        };
        if cfg.normalize {
            dataset.normalize()?;
            queries.normalize()?;
        }
        if queries.len() <= val_count {
            bail!("need more than {val_count} queries to hold out a validation split");
        }
        let dim = queries.dim();
        let validation_queries = Dataset::from_raw(
            "queries-validation".into(),
            dim,
            queries.raw()[..val_count * dim].to_vec(),
        )?;
        let test_queries = Dataset::from_raw(
            "queries-test".into(),
            dim,
            queries.raw()[val_count * dim..].to_vec(),
        )?;
        Ok(ExperimentData {
            dataset,
            test_queries,
            validation_queries,
        })
    }
}

/// Width-grid scale for a scheme: the sampled hash works on gaps shrunk by
/// √(m/n), the sketch on gaps shrunk by √density.
pub fn scheme_width_scale(scheme: Scheme, cfg: &ExperimentConfig, dim: usize) -> f64 {
    match scheme {
        Scheme::E2Lsh => 1.0,
        Scheme::FastLsh => (cfg.m as f64 / dim as f64).sqrt(),
        Scheme::AcHash => cfg.achash_density.sqrt(),
    }
}

/// Exact ground truth for a query set (parallel over queries).
pub fn ground_truth_ids(dataset: &Dataset, queries: &Dataset, k: usize) -> Vec<Vec<u32>> {
    (0..queries.len())
        .into_par_iter()
        .map(|qi| {
            brute_force_knn_query(dataset, queries.row(qi), k)
                .into_iter()
                .map(|nb| nb.id)
                .collect()
        })
        .collect()
}

/// Run the full protocol for one config.
pub fn run_experiment(cfg: &ExperimentConfig) -> anyhow::Result<ExperimentReport> {
    cfg.validate()?;
    let data = resolve_data(cfg)?;
    let fingerprint = dataset_fingerprint(&data.dataset);
    let truth_test = ground_truth_ids(&data.dataset, &data.test_queries, cfg.topk);
    let truth_val = ground_truth_ids(&data.dataset, &data.validation_queries, cfg.topk);

    let mut records = Vec::new();
    for scheme_name in &cfg.schemes {
        let scheme: Scheme = scheme_name.parse().map_err(|e| anyhow!("{e}"))?;
        let scale = if cfg.scale_widths {
            scheme_width_scale(scheme, cfg, data.dataset.dim())
        } else {
            1.0
        };
        let grid: Vec<f64> = cfg.width_grid.iter().map(|w| w * scale).collect();
        let template = IndexConfig {
            scheme,
            k: cfg.k,
            l: cfg.l,
            width: grid[0],
            m: cfg.m,
            achash_density: cfg.achash_density,
            seed: cfg.seed,
        };
        let (tune, index) = tune_and_build(
            &data.dataset,
            &data.validation_queries,
            &truth_val,
            &template,
            &grid,
            cfg.target_recall,
            cfg.topk,
        )?;

        // test queries, single-threaded, timed
        let mut returned = Vec::with_capacity(data.test_queries.len());
        let mut total_ns = 0u64;
        let mut hash_ns = 0u64;
        let mut scan_ns = 0u64;
        let mut cand_total = 0usize;
        let mut cand_max = 0usize;
        for q in data.test_queries.rows() {
            let r = timed_query(&index, &data.dataset, q, cfg.topk)?;
            total_ns += r.hash_ns + r.scan_ns;
            hash_ns += r.hash_ns;
            scan_ns += r.scan_ns;
            cand_total += r.candidate_count;
            cand_max = cand_max.max(r.candidate_count);
            returned.push(r.neighbors.iter().map(|nb| nb.id).collect::<Vec<u32>>());
        }
        let recall = recall_at_k(&returned, &truth_test, cfg.topk)?;

        // hash-evaluation cost, separate from the query path
        let flat: Vec<_> = index.hashers().iter().flatten().cloned().collect();
        let timed_hashers = if cfg.timing_hashes == 0 || cfg.timing_hashes >= flat.len() {
            flat
        } else {
            flat[..cfg.timing_hashes].to_vec()
        };
        let hash_bench = time_hashing(&data.dataset, &timed_hashers, cfg.timing_reps)?;

        let nq = data.test_queries.len() as u64;
        records.push(SchemeRecord {
            scheme: scheme_name.clone(),
            k: cfg.k,
            l: cfg.l,
            width: tune.width,
            m: if scheme == Scheme::FastLsh { cfg.m } else { 0 },
            recall_at_k: recall,
            avg_query_time_ns: total_ns / nq,
            avg_hash_time_ns: hash_ns / nq,
            avg_scan_time_ns: scan_ns / nq,
            total_hash_eval_ns: hash_bench.median_ns,
            candidate_count_mean: cand_total as f64 / nq as f64,
            candidate_count_max: cand_max,
            tuned_recall_validation: tune.achieved_recall,
            tune_target_met: tune.met_target,
            seed: cfg.seed,
        });
    }

    Ok(ExperimentReport {
        config: serde_json::to_value(cfg)?,
        dataset_name: data.dataset.name().to_string(),
        dataset_points: data.dataset.len(),
        dataset_dim: data.dataset.dim(),
        dataset_fingerprint: fingerprint_hex(&fingerprint),
        test_queries: data.test_queries.len(),
        validation_queries: data.validation_queries.len(),
        topk: cfg.topk,
        records,
    })
}
