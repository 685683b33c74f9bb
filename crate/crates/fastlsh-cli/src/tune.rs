//! Bucket-width tuning by grid search on a validation query split.
//!
//! Projections do not depend on the width, so the sweep computes them once
//! and re-quantizes per candidate width; recall is estimated by scanning
//! quantized point keys directly instead of materializing hash tables.

use rayon::prelude::*;

use fastlsh_core::data::{l2_distance_sq, Dataset};
use fastlsh_core::error::Error;
use fastlsh_core::hash::HasherParams;
use fastlsh_core::index::{
    build_index_with_projections, IndexConfig, LshIndex, RawProjections,
};
use fastlsh_core::recall_at_k;

/// Parallel projection pass: chunks of points in parallel, each row hashed
/// by every hasher while it is cache-resident, then a transpose into the
/// column-major layout the sweep wants.
pub fn compute_raw_projections_parallel(
    dataset: &Dataset,
    hashers: &[Vec<HasherParams>],
) -> Result<RawProjections, Error> {
    let flat: Vec<&HasherParams> = hashers.iter().flatten().collect();
    let n = dataset.len();
    let cols = flat.len();
    const CHUNK: usize = 1024;
    let chunks: Vec<Vec<f64>> = (0..n.div_ceil(CHUNK))
        .into_par_iter()
        .map(|ci| {
            let lo = ci * CHUNK;
            let hi = (lo + CHUNK).min(n);
            let mut scratch = Vec::new();
            let mut block = vec![0.0f64; (hi - lo) * cols];
            for (local, p) in (lo..hi).enumerate() {
                let row = dataset.row(p);
                for (j, h) in flat.iter().enumerate() {
                    block[local * cols + j] =
                        h.raw_projection_with_scratch(row, &mut scratch)?;
                }
            }
            Ok(block)
        })
        .collect::<Result<_, Error>>()?;
    let mut columns = vec![Vec::with_capacity(n); cols];
    for (ci, block) in chunks.iter().enumerate() {
        let rows = block.len() / cols;
        for local in 0..rows {
            for j in 0..cols {
                columns[j].push(block[local * cols + j]);
            }
        }
        let _ = ci;
    }
    Ok(RawProjections { columns })
}

#[derive(Debug, Clone)]
pub struct WidthDiagnostics {
    pub width: f64,
    pub recall: f64,
    pub candidate_mean: f64,
}

#[derive(Debug, Clone)]
pub struct TuneOutcome {
    /// chosen width: the smallest on the grid that reaches the target
    /// (which also minimizes candidate work among achievers), or the best
    /// achieved when none does
    pub width: f64,
    pub achieved_recall: f64,
    pub met_target: bool,
    /// whether recall was nondecreasing along the (ascending) grid
    pub monotone: bool,
    pub sweep: Vec<WidthDiagnostics>,
}

struct SweepState {
    hashers_cfg: IndexConfig,
    point_proj: RawProjections,
    query_proj: RawProjections,
    offset_fracs: Vec<f64>,
}

fn prepare(
    dataset: &Dataset,
    queries: &Dataset,
    cfg_template: &IndexConfig,
    reference_width: f64,
) -> Result<SweepState, Error> {
    let mut cfg = cfg_template.clone();
    cfg.width = reference_width;
    let hashers = cfg.build_hashers(dataset.dim())?;
    let point_proj = compute_raw_projections_parallel(dataset, &hashers)?;
    let query_proj = compute_raw_projections_parallel(queries, &hashers)?;
    let offset_fracs = hashers
        .iter()
        .flat_map(|t| t.iter().map(|h| h.offset_frac))
        .collect();
    Ok(SweepState {
        hashers_cfg: cfg,
        point_proj,
        query_proj,
        offset_fracs,
    })
}

fn evaluate_width(
    state: &SweepState,
    dataset: &Dataset,
    queries: &Dataset,
    truth: &[Vec<u32>],
    width: f64,
    topk: usize,
) -> Result<(f64, f64), Error> {
    let k = state.hashers_cfg.k;
    let l = state.hashers_cfg.l;
    let n = dataset.len();
    // quantize all point projections at this width
    let keys: Vec<Vec<i64>> = state
        .point_proj
        .columns
        .par_iter()
        .zip(&state.offset_fracs)
        .map(|(col, frac)| {
            let b = frac * width;
            col.iter().map(|&raw| ((raw + b) / width).floor() as i64).collect()
        })
        .collect();
    let results: Vec<(Vec<u32>, usize)> = (0..queries.len())
        .into_par_iter()
        .map(|qi| {
            let q = queries.row(qi);
            let mut qkeys = vec![0i64; l * k];
            for (col, slot) in qkeys.iter_mut().enumerate() {
                let b = state.offset_fracs[col] * width;
                *slot = ((state.query_proj.columns[col][qi] + b) / width).floor() as i64;
            }
            let mut candidates: Vec<u32> = Vec::new();
            for t in 0..l {
                'point: for p in 0..n {
                    for j in 0..k {
                        let col = t * k + j;
                        if keys[col][p] != qkeys[col] {
                            continue 'point;
                        }
                    }
                    candidates.push(p as u32);
                }
            }
            candidates.sort_unstable();
            candidates.dedup();
            let count = candidates.len();
            let mut scored: Vec<(f64, u32)> = candidates
                .into_iter()
                .map(|id| (l2_distance_sq(q, dataset.row(id as usize)).sqrt(), id))
                .collect();
            scored.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then(a.1.cmp(&b.1)));
            scored.truncate(topk);
            (scored.into_iter().map(|(_, id)| id).collect(), count)
        })
        .collect();
    let cand_total: f64 = results.iter().map(|(_, c)| *c as f64).sum();
    let returned: Vec<Vec<u32>> = results.into_iter().map(|(ids, _)| ids).collect();
    let recall = recall_at_k(&returned, truth, topk)?;
    Ok((recall, cand_total / queries.len() as f64))
}

/// Sweep the grid and pick a width. `truth` must hold at least `topk` true
/// neighbor ids per validation query.
pub fn tune_width(
    dataset: &Dataset,
    validation_queries: &Dataset,
    truth: &[Vec<u32>],
    cfg_template: &IndexConfig,
    grid: &[f64],
    target_recall: f64,
    topk: usize,
) -> Result<TuneOutcome, Error> {
    let (outcome, _) = tune_width_with_state(
        dataset,
        validation_queries,
        truth,
        cfg_template,
        grid,
        target_recall,
        topk,
    )?;
    Ok(outcome)
}

fn tune_width_with_state(
    dataset: &Dataset,
    validation_queries: &Dataset,
    truth: &[Vec<u32>],
    cfg_template: &IndexConfig,
    grid: &[f64],
    target_recall: f64,
    topk: usize,
) -> Result<(TuneOutcome, SweepState), Error> {
    if grid.is_empty() {
        return Err(Error::InvalidArgument("width grid must be nonempty"));
    }
    let mut grid = grid.to_vec();
    grid.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let state = prepare(dataset, validation_queries, cfg_template, grid[0])?;
    let mut sweep = Vec::with_capacity(grid.len());
    for &w in &grid {
        let (recall, candidate_mean) =
            evaluate_width(&state, dataset, validation_queries, truth, w, topk)?;
        sweep.push(WidthDiagnostics {
            width: w,
            recall,
            candidate_mean,
        });
    }
    let monotone = sweep.windows(2).all(|p| p[1].recall >= p[0].recall - 1e-9);
    let chosen = sweep
        .iter()
        .find(|d| d.recall >= target_recall)
        .or_else(|| {
            sweep
                .iter()
                .max_by(|a, b| a.recall.partial_cmp(&b.recall).unwrap())
        })
        .unwrap();
    let outcome = TuneOutcome {
        width: chosen.width,
        achieved_recall: chosen.recall,
        met_target: chosen.recall >= target_recall,
        monotone,
        sweep,
    };
    Ok((outcome, state))
}

/// Tune, then build the final index at the chosen width, reusing the
/// sweep's projection cache.
pub fn tune_and_build(
    dataset: &Dataset,
    validation_queries: &Dataset,
    truth: &[Vec<u32>],
    cfg_template: &IndexConfig,
    grid: &[f64],
    target_recall: f64,
    topk: usize,
) -> Result<(TuneOutcome, LshIndex), Error> {
    let (outcome, state) = tune_width_with_state(
        dataset,
        validation_queries,
        truth,
        cfg_template,
        grid,
        target_recall,
        topk,
    )?;
    let mut cfg = cfg_template.clone();
    cfg.width = outcome.width;
    let index = build_index_with_projections(dataset, &cfg, &state.point_proj)?;
    Ok((outcome, index))
}
