//! Cunningham's augmenting-path algorithm with a lazily explored exchange
//! graph.
//!
//! Each outer iteration recomputes the sources `X1 = {x ∉ S : S + x ∈ I1}`
//! and sinks `X2 = {x ∉ S : S + x ∈ I2}`. If they meet, the smallest common
//! element is added directly. Otherwise a BFS from `X1` finds a shortest path
//! to `X2` and `S` is replaced by `S Δ P`. When no path exists the reached
//! set yields a rank certificate of optimality.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::element::{Element, ElementSet};
use crate::matroid::{rank, CountingOracle, Matroid, MatroidError, Phase, PhaseCounts};

mod bfs;
mod neighbors;
mod ordered;

pub use bfs::{
    augment, search_from, shortest_augmenting_path, symmetric_difference, AugmentingPath, BfsOutcome, BfsResult,
    BfsState,
};
pub use neighbors::{compute_free_additions, fan_in_neighbors, fan_out_neighbors};
pub use ordered::{min_dependent_prefix, OrderedGround};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("ground sizes differ: matroid1 has {0} elements, matroid2 has {1}")]
    GroundSizeMismatch(usize, usize),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error("contract violation: {0}")]
    ContractViolation(String),
    #[error("internal error: {0}")]
    Internal(String),
}

/// Min-max witness: `r1(U) + r2(E \ U) = |S|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub u: ElementSet,
    pub r1_of_u: usize,
    pub r2_of_complement: usize,
}

/// Oracle calls per matroid, per phase.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CallCounts {
    pub matroid1: PhaseCounts,
    pub matroid2: PhaseCounts,
}

impl CallCounts {
    pub fn total(&self) -> u64 {
        self.matroid1.total() + self.matroid2.total()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunStats {
    pub calls: CallCounts,
    /// Arc count of each BFS augmentation, in order.
    pub path_lengths: Vec<usize>,
    /// `|S|` just before each BFS augmentation, parallel to `path_lengths`.
    pub path_start_sizes: Vec<usize>,
    pub augmentations: usize,
    pub shortcut_additions: usize,
    pub solution_size: usize,
}

/// One BFS invocation, recorded when tracing is enabled.
#[derive(Debug, Clone)]
pub struct BfsTrace {
    pub solution: ElementSet,
    pub layers: Vec<Vec<Element>>,
    pub path: Option<AugmentingPath>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SolveOptions {
    /// Record the solution and layers of every BFS.
    pub trace: bool,
}

#[derive(Debug, Clone)]
pub struct Solution {
    pub set: ElementSet,
    pub certificate: Certificate,
    pub stats: RunStats,
    pub trace: Vec<BfsTrace>,
}

/// Builds the certificate `U = E \ R` from the reachable set `R` of an
/// exhausted search and checks `r1(U) + r2(R) = |S|`.
pub fn certificate_from_reachable<M1, M2>(
    m1: &M1,
    m2: &M2,
    solution: &ElementSet,
    reachable: &ElementSet,
) -> Result<Certificate, SolveError>
where
    M1: Matroid + ?Sized,
    M2: Matroid + ?Sized,
{
    let n = m1.ground_size();
    let mut u = ElementSet::full(n);
    u.difference_with(reachable);
    let complement = u.complement();
    m1.enter_phase(Phase::Certificate);
    m2.enter_phase(Phase::Certificate);
    let r1_of_u = rank(m1, &u)?;
    let r2_of_complement = rank(m2, &complement)?;
    if r1_of_u + r2_of_complement != solution.len() {
        return Err(SolveError::Internal(format!(
            "certificate mismatch: r1(U) = {r1_of_u}, r2(E \\ U) = {r2_of_complement}, |S| = {}",
            solution.len()
        )));
    }
    Ok(Certificate {
        u,
        r1_of_u,
        r2_of_complement,
    })
}

/// Maximum common independent set of `m1` and `m2`.
pub fn solve<M1, M2>(m1: &M1, m2: &M2) -> Result<Solution, SolveError>
where
    M1: Matroid + ?Sized,
    M2: Matroid + ?Sized,
{
    solve_with(m1, m2, SolveOptions::default())
}

pub fn solve_with<M1, M2>(m1: &M1, m2: &M2, options: SolveOptions) -> Result<Solution, SolveError>
where
    M1: Matroid + ?Sized,
    M2: Matroid + ?Sized,
{
    let n = m1.ground_size();
    if n != m2.ground_size() {
        return Err(SolveError::GroundSizeMismatch(n, m2.ground_size()));
    }
    let c1 = CountingOracle::new(m1);
    let c2 = CountingOracle::new(m2);
    let mut solution = ElementSet::new(n);
    let mut stats = RunStats::default();
    let mut trace = Vec::new();

    let certificate = loop {
        c1.enter_phase(Phase::SourcesSinks);
        c2.enter_phase(Phase::SourcesSinks);
        let sources = neighbors::free_additions(&c1, &solution);
        let sinks = neighbors::free_additions(&c2, &solution);

        if let Some(x) = sources.intersection(&sinks).min() {
            solution = augment(&c1, &c2, &solution, &AugmentingPath::singleton(x))?;
            stats.shortcut_additions += 1;
            continue;
        }

        let outcome = search_from(&c1, &c2, &solution, &sources, &sinks)?;
        if options.trace {
            trace.push(BfsTrace {
                solution: solution.clone(),
                layers: outcome.layers.clone(),
                path: match &outcome.result {
                    BfsResult::Path(p) => Some(p.clone()),
                    BfsResult::Exhausted(_) => None,
                },
            });
        }
        match outcome.result {
            BfsResult::Path(path) => {
                stats.path_lengths.push(path.len());
                stats.path_start_sizes.push(solution.len());
                solution = augment(&c1, &c2, &solution, &path)?;
                stats.augmentations += 1;
            }
            BfsResult::Exhausted(reachable) => {
                break certificate_from_reachable(&c1, &c2, &solution, &reachable)?;
            }
        }
    };

    stats.solution_size = solution.len();
    stats.calls = CallCounts {
        matroid1: c1.counts(),
        matroid2: c2.counts(),
    };
    Ok(Solution {
        set: solution,
        certificate,
        stats,
        trace,
    })
}
