//! Oracle-call benchmark over a matrix of generated instances.
//!
//! Config:
//!
//! ```json
//! {"runs": [{"family": "partition_matching", "n": [64, 128, 256], "seeds": [1, 2, 3, 4]}]}
//! ```
//!
//! Output is one CSV row per `(family, n, seed)` in config order.

use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::solver::solve;
use crate::verify::{budget_scale, check_bounds, max_rank};

use super::generate::{generate_instance, Family};
use super::CliError;

/// Largest `total_calls / (n (r + 1) log2(r + 2)^2)` observed on
/// `partition_matching` at `n` in [`CALIBRATION_NS`] over
/// [`CALIBRATION_SEEDS`]. Measured, not derived; the acceptance suite
/// recomputes it.
pub const PARTITION_MATCHING_BUDGET_CONSTANT: f64 = 0.121_635_034_647_915_97;

pub const CALIBRATION_NS: [usize; 3] = [64, 128, 256];
pub const CALIBRATION_SEEDS: [u64; 4] = [1, 2, 3, 4];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchSpec {
    pub family: Family,
    pub n: Vec<usize>,
    pub seeds: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchConfig {
    pub runs: Vec<BenchSpec>,
}

impl BenchConfig {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let config: BenchConfig =
            serde_json::from_str(text).map_err(|e| CliError::Input(format!("bench config: {e}")))?;
        if config.runs.iter().any(|r| r.n.is_empty() || r.seeds.is_empty()) {
            return Err(CliError::Input(
                "bench config: every run needs at least one n and one seed".into(),
            ));
        }
        Ok(config)
    }

    fn cells(&self) -> Vec<(Family, usize, u64)> {
        self.runs
            .iter()
            .flat_map(|run| {
                run.n
                    .iter()
                    .flat_map(move |&n| run.seeds.iter().map(move |&seed| (run.family, n, seed)))
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub family: Family,
    pub n: usize,
    pub seed: u64,
    pub r: usize,
    pub p: usize,
    pub calls_matroid1: u64,
    pub calls_matroid2: u64,
    pub total_calls: u64,
    pub sum_path_length: usize,
    pub total_length_bound: f64,
    pub augmentations: usize,
    pub shortcut_additions: usize,
    pub budget_ratio: f64,
    pub certificate_ok: bool,
    pub length_bounds_ok: bool,
}

fn bench_one(family: Family, n: usize, seed: u64) -> Result<BenchRow, CliError> {
    let instance = generate_instance(family, n, seed);
    let (m1, m2) = instance.build()?;
    let solution = solve(&m1, &m2).map_err(|e| CliError::Invariant(format!("{family} n={n} seed={seed}: {e}")))?;
    let r = max_rank(&m1, &m2).map_err(|e| CliError::Input(e.to_string()))?;
    let stats = &solution.stats;
    let bounds = check_bounds(stats, n, r, PARTITION_MATCHING_BUDGET_CONSTANT);
    let cert = &solution.certificate;
    Ok(BenchRow {
        family,
        n,
        seed,
        r,
        p: solution.set.len(),
        calls_matroid1: stats.calls.matroid1.total(),
        calls_matroid2: stats.calls.matroid2.total(),
        total_calls: stats.calls.total(),
        sum_path_length: bounds.total_length,
        total_length_bound: bounds.total_bound,
        augmentations: stats.augmentations,
        shortcut_additions: stats.shortcut_additions,
        budget_ratio: stats.calls.total() as f64 / budget_scale(n, r),
        certificate_ok: cert.r1_of_u + cert.r2_of_complement == solution.set.len(),
        length_bounds_ok: bounds.lengths_ok(),
    })
}

/// Runs every cell in parallel; rows come back in config order.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRow>, CliError> {
    config
        .cells()
        .into_par_iter()
        .map(|(family, n, seed)| bench_one(family, n, seed))
        .collect()
}

pub fn write_bench_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<(), CliError> {
    let mut writer = csv::Writer::from_writer(out);
    for row in rows {
        writer
            .serialize(row)
            .map_err(|e| CliError::Input(format!("writing csv: {e}")))?;
    }
    writer.flush().map_err(|e| CliError::Input(format!("writing csv: {e}")))
}

/// Maximum budget ratio over `partition_matching` at [`CALIBRATION_NS`] and
/// [`CALIBRATION_SEEDS`].
pub fn calibrate_budget() -> Result<f64, CliError> {
    let config = BenchConfig {
        runs: vec![BenchSpec {
            family: Family::PartitionMatching,
            n: CALIBRATION_NS.to_vec(),
            seeds: CALIBRATION_SEEDS.to_vec(),
        }],
    };
    Ok(run_bench(&config)?
        .iter()
        .map(|row| row.budget_ratio)
        .fold(0.0, f64::max))
}
