//! Experiment configuration: a flat JSON object.

use serde::{Deserialize, Serialize};
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config: {0}")]
    Io(#[from] std::io::Error),
    #[error("invalid config: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid config: {0}")]
    Invalid(String),
}

fn default_m() -> usize {
    30
}
fn default_schemes() -> Vec<String> {
    vec!["e2lsh".into(), "fastlsh".into(), "achash".into()]
}
fn default_width_grid() -> Vec<f64> {
    vec![1.0, 2.0, 4.0, 8.0, 16.0, 32.0]
}
fn default_true() -> bool {
    true
}
fn default_density() -> f64 {
    0.25
}
fn default_target_recall() -> f64 {
    0.9
}
fn default_topk() -> usize {
    10
}
fn default_seed() -> u64 {
    1
}
fn default_timing_reps() -> usize {
    5
}
fn default_timing_hashes() -> usize {
    0
}
fn default_validation_queries() -> usize {
    50
}

/// Flat key-value experiment description.
///
/// `dataset` is either a path to an fvecs file or
/// `synthetic:<kind>:<points>:<dim>`; `queries` is a path or a count
/// (held out from the same synthetic draw).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub dataset: String,
    pub queries: QuerySource,
    pub k: usize,
    pub l: usize,
    #[serde(default = "default_m")]
    pub m: usize,
    #[serde(default = "default_schemes")]
    pub schemes: Vec<String>,
    /// bucket-width grid at the full-projection scale
    #[serde(default = "default_width_grid")]
    pub width_grid: Vec<f64>,
    /// scale the grid per scheme (√(m/n) for the sampled hash, √density
    /// for the Hadamard sketch)
    #[serde(default = "default_true")]
    pub scale_widths: bool,
    #[serde(default = "default_density")]
    pub achash_density: f64,
    #[serde(default = "default_target_recall")]
    pub target_recall: f64,
    #[serde(default = "default_topk")]
    pub topk: usize,
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default = "default_timing_reps")]
    pub timing_reps: usize,
    /// hashers to time in the hash-evaluation benchmark; 0 means k·L
    #[serde(default = "default_timing_hashes")]
    pub timing_hashes: usize,
    #[serde(default = "default_validation_queries")]
    pub validation_queries: usize,
    #[serde(default)]
    pub normalize: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum QuerySource {
    Count(usize),
    Path(String),
}

impl ExperimentConfig {
    pub fn from_path(path: impl AsRef<Path>) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)?;
        let cfg: ExperimentConfig = serde_json::from_str(&text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.k == 0 || self.l == 0 {
            return Err(ConfigError::Invalid("k and l must be >= 1".into()));
        }
        if self.m == 0 {
            return Err(ConfigError::Invalid("m must be >= 1".into()));
        }
        if self.width_grid.is_empty() || self.width_grid.iter().any(|w| !(*w > 0.0)) {
            return Err(ConfigError::Invalid("width_grid must be positive and nonempty".into()));
        }
        if !(0.0..=1.0).contains(&self.target_recall) {
            return Err(ConfigError::Invalid("target_recall must be in [0, 1]".into()));
        }
        if self.topk == 0 {
            return Err(ConfigError::Invalid("topk must be >= 1".into()));
        }
        for s in &self.schemes {
            s.parse::<fastlsh_core::hash::Scheme>()
                .map_err(|e| ConfigError::Invalid(format!("{e}")))?;
        }
        if let QuerySource::Count(0) = self.queries {
            return Err(ConfigError::Invalid("query count must be >= 1".into()));
        }
        Ok(())
    }
}
