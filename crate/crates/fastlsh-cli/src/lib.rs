//! File formats, index persistence, the benchmark harness, and the CLI
//! plumbing around `fastlsh-core`.

pub mod bench;
pub mod config;
pub mod io;
pub mod persist;
pub mod report;
pub mod timed;
pub mod tune;

pub use config::ExperimentConfig;
pub use io::{read_fvecs, read_ivecs, write_fvecs, write_ivecs, IoError};
pub use persist::{load_index, save_index};
