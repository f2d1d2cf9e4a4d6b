//! Brute-force references and bound checks used to validate the solver.
//!
//! Everything here is deliberately naive: exhaustive enumeration, a fully
//! materialized exchange graph, and exact rational arithmetic.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::element::{Element, ElementSet};
use crate::matroid::{rank, Matroid, MatroidError};
use crate::solver::{BfsTrace, RunStats};

/// Largest ground set `brute_force_max_common` will enumerate.
pub const MAX_COMMON_BRUTE_FORCE_N: usize = 20;
/// Largest `|S + v|` `brute_force_circuit` will enumerate.
pub const CIRCUIT_BRUTE_FORCE_LIMIT: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("{what} of size {n} exceeds the brute-force limit of {limit}")]
    TooLarge { what: &'static str, n: usize, limit: usize },
    #[error("S + {0} is independent; there is no circuit")]
    NoCircuit(Element),
    #[error("S + {element} has {count} minimal dependent subsets, expected exactly one")]
    NotUnique { element: Element, count: usize },
    #[error("ground sizes differ: {0} vs {1}")]
    GroundSizeMismatch(usize, usize),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// Maximum common independent set size and the lexicographically least
/// witness of that size, by include-first depth-first enumeration pruned on
/// dependent prefixes.
pub fn brute_force_max_common<M1, M2>(m1: &M1, m2: &M2) -> Result<(usize, ElementSet), VerifyError>
where
    M1: Matroid + ?Sized,
    M2: Matroid + ?Sized,
{
    let n = m1.ground_size();
    if n != m2.ground_size() {
        return Err(VerifyError::GroundSizeMismatch(n, m2.ground_size()));
    }
    if n > MAX_COMMON_BRUTE_FORCE_N {
        return Err(VerifyError::TooLarge {
            what: "ground set",
            n,
            limit: MAX_COMMON_BRUTE_FORCE_N,
        });
    }

    struct Search<'a, A: ?Sized, B: ?Sized> {
        m1: &'a A,
        m2: &'a B,
        n: usize,
        current: ElementSet,
        best: ElementSet,
    }

    impl<A: Matroid + ?Sized, B: Matroid + ?Sized> Search<'_, A, B> {
        fn visit(&mut self, next: usize) {
            if self.current.len() + (self.n - next) <= self.best.len() {
                return;
            }
            if next == self.n {
                self.best = self.current.clone();
                return;
            }
            self.current.insert(next);
            if self.m1.is_independent(&self.current) && self.m2.is_independent(&self.current) {
                self.visit(next + 1);
            }
            self.current.remove(next);
            self.visit(next + 1);
        }
    }

    let mut search = Search {
        m1,
        m2,
        n,
        current: ElementSet::new(n),
        best: ElementSet::new(n),
    };
    search.visit(0);
    Ok((search.best.len(), search.best))
}

/// The exchange graph of `S`, with every arc tested directly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeGraph {
    /// `(y, x)` with `y ∈ S`, `x ∉ S`, `S - y + x ∈ I1`.
    pub arcs_s_to_out: BTreeSet<(Element, Element)>,
    /// `(x, y)` with `x ∉ S`, `y ∈ S`, `S - y + x ∈ I2`.
    pub arcs_out_to_s: BTreeSet<(Element, Element)>,
    pub sources: ElementSet,
    pub sinks: ElementSet,
}

pub fn build_naive_exchange_graph<M1, M2>(m1: &M1, m2: &M2, solution: &ElementSet) -> ExchangeGraph
where
    M1: Matroid + ?Sized,
    M2: Matroid + ?Sized,
{
    let n = m1.ground_size();
    let mut graph = ExchangeGraph {
        arcs_s_to_out: BTreeSet::new(),
        arcs_out_to_s: BTreeSet::new(),
        sources: ElementSet::new(n),
        sinks: ElementSet::new(n),
    };
    for x in (0..n).filter(|&x| !solution.contains(x)) {
        let plus = solution.with(x);
        if m1.is_independent(&plus) {
            graph.sources.insert(x);
        }
        if m2.is_independent(&plus) {
            graph.sinks.insert(x);
        }
        for y in solution.iter() {
            let swapped = plus.without(y);
            if m1.is_independent(&swapped) {
                graph.arcs_s_to_out.insert((y, x));
            }
            if m2.is_independent(&swapped) {
                graph.arcs_out_to_s.insert((x, y));
            }
        }
    }
    graph
}

impl ExchangeGraph {
    fn successors(&self, v: Element, solution: &ElementSet) -> Vec<Element> {
        let arcs = if solution.contains(v) {
            &self.arcs_s_to_out
        } else {
            &self.arcs_out_to_s
        };
        arcs.range((v, 0)..=(v, Element::MAX)).map(|&(_, w)| w).collect()
    }

    /// Full BFS layers from the sources, ignoring sinks, until exhaustion.
    pub fn bfs_layers(&self, solution: &ElementSet) -> Vec<Vec<Element>> {
        let mut dist: Vec<Option<usize>> = vec![None; self.sources.universe().max(solution.universe())];
        let mut queue = VecDeque::new();
        for s in self.sources.iter() {
            dist[s] = Some(0);
            queue.push_back(s);
        }
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for w in self.successors(v, solution) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        let mut layers: Vec<Vec<Element>> = Vec::new();
        for (v, d) in dist.iter().enumerate() {
            if let Some(d) = *d {
                if layers.len() <= d {
                    layers.resize(d + 1, Vec::new());
                }
                layers[d].push(v);
            }
        }
        layers
    }
}

/// Compares one recorded lazy BFS against BFS over the naive exchange graph.
///
/// Layers must agree up to the point the lazy search stopped. If it stopped at
/// a sink, that layer must be the first even layer containing a sink; if it
/// exhausted, the naive search must reach nothing further and no sink.
pub fn check_layer_equivalence<M1, M2>(m1: &M1, m2: &M2, trace: &BfsTrace) -> Result<(), String>
where
    M1: Matroid + ?Sized,
    M2: Matroid + ?Sized,
{
    let graph = build_naive_exchange_graph(m1, m2, &trace.solution);
    let naive = graph.bfs_layers(&trace.solution);
    let k = trace.layers.len();
    if naive.len() < k || naive[..k] != trace.layers[..] {
        return Err(format!(
            "S = {:?}: lazy layers {:?} differ from naive layers {:?}",
            trace.solution, trace.layers, naive
        ));
    }
    let first_sink_layer = naive
        .iter()
        .position(|layer| layer.iter().any(|&x| graph.sinks.contains(x)));
    match &trace.path {
        Some(path) => {
            let arcs_ok = path.vertices().windows(2).all(|w| {
                if trace.solution.contains(w[0]) {
                    graph.arcs_s_to_out.contains(&(w[0], w[1]))
                } else {
                    graph.arcs_out_to_s.contains(&(w[0], w[1]))
                }
            });
            let ends_ok = path.vertices().first().is_some_and(|&x| graph.sources.contains(x))
                && path.vertices().last().is_some_and(|&x| graph.sinks.contains(x));
            if !(arcs_ok && ends_ok) {
                return Err(format!(
                    "S = {:?}: path {:?} is not a source-to-sink path of the exchange graph",
                    trace.solution,
                    path.vertices()
                ));
            }
            if first_sink_layer != Some(k - 1) || path.len() != k - 1 {
                return Err(format!(
                    "S = {:?}: lazy search stopped at layer {} with a {}-arc path, naive first sink layer is {:?}",
                    trace.solution,
                    k - 1,
                    path.len(),
                    first_sink_layer
                ));
            }
        }
        None => {
            if naive.len() != k || first_sink_layer.is_some() {
                return Err(format!(
                    "S = {:?}: lazy search exhausted after {k} layers, naive has {} layers and first sink layer {:?}",
                    trace.solution,
                    naive.len(),
                    first_sink_layer
                ));
            }
        }
    }
    Ok(())
}

/// All minimal dependent subsets of `S + v`, by enumeration.
pub fn brute_force_circuits<M: Matroid + ?Sized>(
    m: &M,
    solution: &ElementSet,
    v: Element,
) -> Result<Vec<ElementSet>, VerifyError> {
    let members = solution.with(v).to_vec();
    if members.len() > CIRCUIT_BRUTE_FORCE_LIMIT {
        return Err(VerifyError::TooLarge {
            what: "S + v",
            n: members.len(),
            limit: CIRCUIT_BRUTE_FORCE_LIMIT,
        });
    }
    let subsets = 1usize << members.len();
    let dependent: Vec<bool> = (0..subsets)
        .map(|mask| {
            let set: ElementSet = members
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &x)| x)
                .collect();
            !m.is_independent(&set)
        })
        .collect();
    Ok((1..subsets)
        .filter(|&mask| {
            dependent[mask] && (0..members.len()).all(|i| mask >> i & 1 == 0 || !dependent[mask & !(1 << i)])
        })
        .map(|mask| {
            members
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect())
}

/// The unique circuit of `S + v`.
pub fn brute_force_circuit<M: Matroid + ?Sized>(
    m: &M,
    solution: &ElementSet,
    v: Element,
) -> Result<ElementSet, VerifyError> {
    let mut circuits = brute_force_circuits(m, solution, v)?;
    match circuits.len() {
        0 => Err(VerifyError::NoCircuit(v)),
        1 => Ok(circuits.pop().unwrap()),
        count => Err(VerifyError::NotUnique { element: v, count }),
    }
}

/// `2|S| / (p - |S|) + 2`, or `None` when `|S| >= p`.
pub fn path_length_bound(size_before: usize, p: usize) -> Option<BigRational> {
    (size_before < p).then(|| {
        BigRational::new(BigInt::from(2 * size_before), BigInt::from(p - size_before))
            + BigRational::from_integer(BigInt::from(2))
    })
}

/// `Σ_{k=0}^{p-1} (2k / (p - k) + 2)`.
pub fn total_length_bound(p: usize) -> BigRational {
    (0..p)
        .filter_map(|k| path_length_bound(k, p))
        .fold(BigRational::zero(), |acc, b| acc + b)
}

/// `n (r + 1) log2(r + 2)^2`.
pub fn budget_scale(n: usize, r: usize) -> f64 {
    let log = ((r + 2) as f64).log2();
    n as f64 * (r + 1) as f64 * log * log
}

/// `max(r1(E), r2(E))`, computed on the given oracles.
pub fn max_rank<M1, M2>(m1: &M1, m2: &M2) -> Result<usize, MatroidError>
where
    M1: Matroid + ?Sized,
    M2: Matroid + ?Sized,
{
    let r1 = rank(m1, &ElementSet::full(m1.ground_size()))?;
    let r2 = rank(m2, &ElementSet::full(m2.ground_size()))?;
    Ok(r1.max(r2))
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::INFINITY)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PathCheck {
    pub length: usize,
    pub size_before: usize,
    pub bound: f64,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BudgetCheck {
    pub measured_calls: u64,
    pub budget_value: f64,
    pub ratio: f64,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub per_path: Vec<PathCheck>,
    pub total_length: usize,
    pub total_bound: f64,
    pub total_ok: bool,
    pub budget: BudgetCheck,
}

impl BoundReport {
    /// Both length checks hold. A failure indicates a solver bug.
    pub fn lengths_ok(&self) -> bool {
        self.total_ok && self.per_path.iter().all(|c| c.ok)
    }
}

/// Checks recorded path lengths against the per-path and total length bounds
/// (exact rational comparison), and total oracle calls against
/// `c_budget * n (r + 1) log2(r + 2)^2`.
pub fn check_bounds(stats: &RunStats, n: usize, r: usize, c_budget: f64) -> BoundReport {
    let p = stats.solution_size;
    let per_path = stats
        .path_lengths
        .iter()
        .zip(&stats.path_start_sizes)
        .map(|(&length, &size_before)| {
            let bound = path_length_bound(size_before, p);
            let ok = bound
                .as_ref()
                .is_some_and(|b| BigRational::from_integer(BigInt::from(length)) <= *b);
            PathCheck {
                length,
                size_before,
                bound: bound.as_ref().map_or(f64::NAN, to_f64),
                ok,
            }
        })
        .collect();
    let total_length: usize = stats.path_lengths.iter().sum();
    let total = total_length_bound(p);
    let total_ok = BigRational::from_integer(BigInt::from(total_length)) <= total;

    let measured_calls = stats.calls.total();
    let scale = budget_scale(n, r);
    let budget_value = c_budget * scale;
    BoundReport {
        per_path,
        total_length,
        total_bound: to_f64(&total),
        total_ok,
        budget: BudgetCheck {
            measured_calls,
            budget_value,
            ratio: measured_calls as f64 / scale,
            ok: measured_calls as f64 <= budget_value,
        },
    }
}
