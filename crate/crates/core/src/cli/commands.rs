use serde::Serialize;

use crate::element::ElementSet;
use crate::matroid::{axiom_check, rank, AnyMatroid, AxiomReport, MatroidError};
use crate::solver::{solve_with, CallCounts, Certificate, SolveError, SolveOptions};
use crate::verify::{brute_force_max_common, check_bounds, check_layer_equivalence, max_rank, BoundReport};

use super::bench::PARTITION_MATCHING_BUDGET_CONSTANT;
use super::instance::InstanceFile;
use super::CliError;

#[derive(Debug, Clone, Copy, Default)]
pub struct SolveFlags {
    /// Compare every lazy BFS against BFS over the fully built exchange graph.
    pub baseline: bool,
    /// Check path lengths against the shortest-path bounds.
    pub check_bounds: bool,
    /// Exhaustively check both oracles against the matroid axioms first.
    pub axiom_check: bool,
    /// Enforce `total calls <= c * n (r + 1) log2(r + 2)^2` with this `c`.
    pub budget_constant: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BaselineReport {
    pub bfs_runs_checked: usize,
    pub ok: bool,
    pub mismatches: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomSummary {
    pub matroid1: AxiomReport,
    pub matroid2: AxiomReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub name: Option<String>,
    pub seed: Option<u64>,
    pub n: usize,
    pub solution: ElementSet,
    pub solution_size: usize,
    pub certificate: Certificate,
    pub calls: CallCounts,
    pub total_calls: u64,
    pub path_lengths: Vec<usize>,
    pub path_start_sizes: Vec<usize>,
    pub augmentations: usize,
    pub shortcut_additions: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub baseline: Option<BaselineReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axioms: Option<AxiomSummary>,
    /// Names of failed checks; empty iff the run passed.
    pub failures: Vec<String>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn solve_error(e: SolveError) -> CliError {
    match e {
        SolveError::GroundSizeMismatch(..) | SolveError::Matroid(_) => CliError::Input(e.to_string()),
        SolveError::ContractViolation(_) | SolveError::Internal(_) => CliError::Invariant(e.to_string()),
    }
}

fn input_error(e: MatroidError) -> CliError {
    CliError::Input(e.to_string())
}

fn run_axiom_gate(m1: &AnyMatroid, m2: &AnyMatroid) -> Result<AxiomSummary, CliError> {
    let summary = AxiomSummary {
        matroid1: axiom_check(m1).map_err(input_error)?,
        matroid2: axiom_check(m2).map_err(input_error)?,
    };
    if !(summary.matroid1.is_matroid() && summary.matroid2.is_matroid()) {
        return Err(CliError::Invariant(format!(
            "axiom_check: matroid1 has {} violations, matroid2 has {}",
            summary.matroid1.violations.len(),
            summary.matroid2.violations.len()
        )));
    }
    Ok(summary)
}

/// Solves an instance and assembles its report. Enabled checks that fail
/// are listed in `failures`; solver contract or internal errors are returned
/// as [`CliError::Invariant`].
pub fn cmd_solve(instance: &InstanceFile, flags: SolveFlags) -> Result<RunReport, CliError> {
    let (m1, m2) = instance.build()?;
    let axioms = flags.axiom_check.then(|| run_axiom_gate(&m1, &m2)).transpose()?;

    let solution = solve_with(&m1, &m2, SolveOptions { trace: flags.baseline }).map_err(solve_error)?;
    let stats = &solution.stats;
    let mut failures = Vec::new();

    let baseline = flags.baseline.then(|| {
        let mismatches: Vec<String> = solution
            .trace
            .iter()
            .filter_map(|t| check_layer_equivalence(&m1, &m2, t).err())
            .collect();
        BaselineReport {
            bfs_runs_checked: solution.trace.len(),
            ok: mismatches.is_empty(),
            mismatches,
        }
    });
    if baseline.as_ref().is_some_and(|b| !b.ok) {
        failures.push("layer_equivalence".to_string());
    }

    let mut r = None;
    let bounds = if flags.check_bounds || flags.budget_constant.is_some() {
        let rank = max_rank(&m1, &m2).map_err(input_error)?;
        r = Some(rank);
        let c = flags.budget_constant.unwrap_or(PARTITION_MATCHING_BUDGET_CONSTANT);
        let report = check_bounds(stats, instance.n, rank, c);
        if report.per_path.iter().any(|p| !p.ok) {
            failures.push("per_path_length_bound".to_string());
        }
        if !report.total_ok {
            failures.push("total_length_bound".to_string());
        }
        if flags.budget_constant.is_some() && !report.budget.ok {
            failures.push("oracle_budget".to_string());
        }
        Some(report)
    } else {
        None
    };

    Ok(RunReport {
        name: instance.name.clone(),
        seed: instance.seed,
        n: instance.n,
        solution_size: solution.set.len(),
        solution: solution.set,
        certificate: solution.certificate,
        calls: stats.calls,
        total_calls: stats.calls.total(),
        path_lengths: stats.path_lengths.clone(),
        path_start_sizes: stats.path_start_sizes.clone(),
        augmentations: stats.augmentations,
        shortcut_additions: stats.shortcut_additions,
        rank: r,
        bounds,
        baseline,
        axioms,
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyOutcome {
    pub solver_size: usize,
    pub brute_force_size: usize,
    pub certificate_sum: usize,
}

impl VerifyOutcome {
    pub fn ok(&self) -> bool {
        self.solver_size == self.brute_force_size && self.certificate_sum == self.solver_size
    }
}

/// Solves, then compares against exhaustive search and recomputes the
/// certificate ranks on fresh oracles. Refuses `n > 20`.
pub fn cmd_verify(instance: &InstanceFile, axiom_gate: bool) -> Result<VerifyOutcome, CliError> {
    let limit = crate::verify::MAX_COMMON_BRUTE_FORCE_N;
    if instance.n > limit {
        return Err(CliError::Input(format!(
            "verify needs exhaustive search; n = {} exceeds the limit of {limit}",
            instance.n
        )));
    }
    let (m1, m2) = instance.build()?;
    if axiom_gate {
        run_axiom_gate(&m1, &m2)?;
    }
    let solution = solve_with(&m1, &m2, SolveOptions::default()).map_err(solve_error)?;
    let (brute_force_size, _) = brute_force_max_common(&m1, &m2).map_err(|e| CliError::Input(e.to_string()))?;
    let u = &solution.certificate.u;
    let complement = u.complement();
    let certificate_sum = rank(&m1, u).map_err(input_error)? + rank(&m2, &complement).map_err(input_error)?;
    Ok(VerifyOutcome {
        solver_size: solution.set.len(),
        brute_force_size,
        certificate_sum,
    })
}
