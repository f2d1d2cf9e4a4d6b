//! Instance files, generators, run reports and the benchmark driver behind
//! the `mi` binary.

use serde::Serialize;
use thiserror::Error;

mod bench;
mod commands;
mod generate;
mod instance;

pub use bench::{
    calibrate_budget, run_bench, write_bench_csv, BenchConfig, BenchRow, BenchSpec, CALIBRATION_NS, CALIBRATION_SEEDS,
    PARTITION_MATCHING_BUDGET_CONSTANT,
};
pub use commands::{cmd_solve, cmd_verify, AxiomSummary, BaselineReport, RunReport, SolveFlags, VerifyOutcome};
pub use generate::{generate_instance, Family};
pub use instance::{parse_instance, InstanceFile, MatroidSpec};

/// Errors surfaced by the command-line driver.
#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed or unsupported input; exit code 2.
    #[error("input error: {0}")]
    Input(String),
    /// A checked invariant or verification failed; exit code 1.
    #[error("invariant failed: {0}")]
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Invariant(_) => 1,
        }
    }
}

/// Pretty JSON with keys sorted at every level and a trailing newline.
pub fn canonical_json<T: Serialize + ?Sized>(value: &T) -> String {
    // serde_json::Value objects are BTreeMaps, so this sorts keys.
    let value = serde_json::to_value(value).expect("report types serialize to JSON");
    let mut out = serde_json::to_string_pretty(&value).expect("JSON values serialize");
    out.push('\n');
    out
}
