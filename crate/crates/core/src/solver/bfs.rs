//! Lazy breadth-first search over the exchange graph.
//!
//! Even layers lie outside the solution and are expanded with `fan_in_neighbors`
//! against `M2`; odd layers lie inside it and are expanded with
//! `fan_out_neighbors` against `M1`. Arcs are discovered only as the search
//! needs them.

use serde::Serialize;

use crate::element::{Element, ElementSet};
use crate::matroid::{Matroid, Phase};

use super::neighbors::{fan_in_neighbors, fan_out_neighbors, free_additions};
use super::ordered::OrderedGround;
use super::SolveError;

/// Alternating sequence `x_0, y_1, x_1, ..., y_t, x_t` with `x_i ∉ S`,
/// `y_i ∈ S`, starting at a source and ending at a sink.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AugmentingPath {
    vertices: Vec<Element>,
}

impl AugmentingPath {
    pub fn new(vertices: Vec<Element>) -> Self {
        Self { vertices }
    }

    pub fn singleton(x: Element) -> Self {
        Self { vertices: vec![x] }
    }

    pub fn vertices(&self) -> &[Element] {
        &self.vertices
    }

    /// Number of arcs.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Checks vertex count parity and alternation against `solution`.
    pub fn check_shape(&self, solution: &ElementSet) -> Result<(), SolveError> {
        if self.vertices.len().is_multiple_of(2) {
            return Err(SolveError::ContractViolation(format!(
                "path {:?} has an even number of vertices",
                self.vertices
            )));
        }
        let mut seen = ElementSet::new(solution.universe());
        for (i, &x) in self.vertices.iter().enumerate() {
            if solution.contains(x) != (i % 2 == 1) {
                return Err(SolveError::ContractViolation(format!(
                    "path {:?} does not alternate at position {i}",
                    self.vertices
                )));
            }
            if !seen.insert(x) {
                return Err(SolveError::ContractViolation(format!(
                    "path {:?} repeats element {x}",
                    self.vertices
                )));
            }
        }
        Ok(())
    }
}

/// Layered reachability state of one search.
#[derive(Debug, Clone)]
pub struct BfsState {
    pub layers: Vec<Vec<Element>>,
    /// Reached solution elements (union of odd layers).
    pub reached_in: ElementSet,
    /// Reached non-solution elements (union of even layers).
    pub reached_out: ElementSet,
    pub pred: Vec<Option<Element>>,
    pub sinks: ElementSet,
}

impl BfsState {
    fn new(n: usize, sources: &ElementSet, sinks: &ElementSet) -> Self {
        Self {
            layers: vec![sources.to_vec()],
            reached_in: ElementSet::new(n),
            reached_out: sources.clone(),
            pred: vec![None; n],
            sinks: sinks.clone(),
        }
    }

    fn path_to(&self, sink: Element) -> AugmentingPath {
        let mut vertices = vec![sink];
        let mut cur = sink;
        while let Some(p) = self.pred[cur] {
            vertices.push(p);
            cur = p;
        }
        vertices.reverse();
        AugmentingPath::new(vertices)
    }

    /// `A ∪ B`.
    pub fn reached(&self) -> ElementSet {
        self.reached_in.union(&self.reached_out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BfsResult {
    Path(AugmentingPath),
    /// No sink is reachable; carries every reached element.
    Exhausted(ElementSet),
}

#[derive(Debug, Clone)]
pub struct BfsOutcome {
    /// Distance layers `V_0, V_1, ...`, each ascending. When a path is found
    /// the last layer is the one containing its sink.
    pub layers: Vec<Vec<Element>>,
    pub result: BfsResult,
}

/// Shortest source-to-sink path in the exchange graph of `solution`, or the
/// reachable set if there is none. Computes sources and sinks itself.
pub fn shortest_augmenting_path<M1, M2>(m1: &M1, m2: &M2, solution: &ElementSet) -> Result<BfsOutcome, SolveError>
where
    M1: Matroid + ?Sized,
    M2: Matroid + ?Sized,
{
    m1.enter_phase(Phase::SourcesSinks);
    m2.enter_phase(Phase::SourcesSinks);
    let sources = free_additions(m1, solution);
    let sinks = free_additions(m2, solution);
    search_from(m1, m2, solution, &sources, &sinks)
}

/// Lazy BFS from precomputed sources and sinks.
///
/// Layer vertices are processed in ascending id order. Each even layer is
/// checked for sinks when it is generated, and the search stops at the
/// smallest sink of the first layer that has one.
pub fn search_from<M1, M2>(
    m1: &M1,
    m2: &M2,
    solution: &ElementSet,
    sources: &ElementSet,
    sinks: &ElementSet,
) -> Result<BfsOutcome, SolveError>
where
    M1: Matroid + ?Sized,
    M2: Matroid + ?Sized,
{
    let n = m1.ground_size();
    let mut state = BfsState::new(n, sources, sinks);
    let mut order = OrderedGround::new(solution);

    if sources.is_empty() {
        return Ok(BfsOutcome {
            layers: Vec::new(),
            result: BfsResult::Exhausted(ElementSet::new(n)),
        });
    }

    loop {
        let depth = state.layers.len() - 1;
        let current = state.layers[depth].clone();
        if depth.is_multiple_of(2) {
            if let Some(&sink) = current.iter().find(|&&x| state.sinks.contains(x)) {
                let path = state.path_to(sink);
                return Ok(BfsOutcome {
                    layers: state.layers,
                    result: BfsResult::Path(path),
                });
            }
        }

        let mut next = Vec::new();
        if depth.is_multiple_of(2) {
            m2.enter_phase(Phase::Case1);
            for &v in &current {
                for u in fan_in_neighbors(m2, &mut order, v)?.iter() {
                    state.pred[u] = Some(v);
                    state.reached_in.insert(u);
                    next.push(u);
                }
            }
            next.sort_unstable();
        } else {
            m1.enter_phase(Phase::Case2);
            for (t, parent) in fan_out_neighbors(m1, solution, &current, &state.reached_out)? {
                state.pred[t] = Some(parent);
                state.reached_out.insert(t);
                next.push(t);
            }
        }

        if next.is_empty() {
            let reached = state.reached();
            return Ok(BfsOutcome {
                layers: state.layers,
                result: BfsResult::Exhausted(reached),
            });
        }
        state.layers.push(next);
    }
}

/// `S Δ P`, checking only the shape of `P`.
pub fn symmetric_difference(solution: &ElementSet, path: &AugmentingPath) -> Result<ElementSet, SolveError> {
    path.check_shape(solution)?;
    let mut out = solution.clone();
    for &x in path.vertices() {
        if !out.remove(x) {
            out.insert(x);
        }
    }
    Ok(out)
}

/// Replaces `S` with `S Δ P` and asserts the result is independent in both
/// matroids (two oracle calls, attributed to `augment_check`).
pub fn augment<M1, M2>(m1: &M1, m2: &M2, solution: &ElementSet, path: &AugmentingPath) -> Result<ElementSet, SolveError>
where
    M1: Matroid + ?Sized,
    M2: Matroid + ?Sized,
{
    let next = symmetric_difference(solution, path)?;
    debug_assert_eq!(next.len(), solution.len() + 1);
    m1.enter_phase(Phase::AugmentCheck);
    m2.enter_phase(Phase::AugmentCheck);
    let ok1 = m1.is_independent(&next);
    let ok2 = m2.is_independent(&next);
    if !(ok1 && ok2) {
        return Err(SolveError::Internal(format!(
            "augmenting {solution:?} along {:?} gave {next:?}, independent in matroid1: {ok1}, matroid2: {ok2}",
            path.vertices()
        )));
    }
    Ok(next)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{GraphicMatroid, PartitionMatroid, UniformMatroid};

    fn set(ids: &[Element]) -> ElementSet {
        ids.iter().copied().collect()
    }

    /// Left {a, b}, right {c, d}; e0 = (a, c), e1 = (a, d), e2 = (b, c).
    fn bipartite() -> (PartitionMatroid, PartitionMatroid) {
        let left = PartitionMatroid::from_assignment(&[0, 0, 1], vec![1, 1]).unwrap();
        let right = PartitionMatroid::from_assignment(&[0, 1, 0], vec![1, 1]).unwrap();
        (left, right)
    }

    #[test]
    fn bipartite_path() {
        let (m1, m2) = bipartite();
        let outcome = shortest_augmenting_path(&m1, &m2, &set(&[0])).unwrap();
        assert_eq!(outcome.result, BfsResult::Path(AugmentingPath::new(vec![2, 0, 1])));
        assert_eq!(outcome.layers, vec![vec![2], vec![0], vec![1]]);
        let BfsResult::Path(path) = outcome.result else {
            unreachable!()
        };
        assert_eq!(path.len(), 2);
        assert_eq!(augment(&m1, &m2, &set(&[0]), &path).unwrap(), set(&[1, 2]));
    }

    #[test]
    fn no_sources_is_exhausted_immediately() {
        let loops = GraphicMatroid::new(1, vec![(0, 0), (0, 0)]).unwrap();
        let u = UniformMatroid::new(2, 2);
        let outcome = shortest_augmenting_path(&loops, &u, &set(&[])).unwrap();
        assert_eq!(outcome.result, BfsResult::Exhausted(set(&[])));
    }

    #[test]
    fn maximum_solution_exhausts() {
        let triangle = GraphicMatroid::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        let u = UniformMatroid::new(3, 2);
        let outcome = shortest_augmenting_path(&triangle, &u, &set(&[0, 1])).unwrap();
        assert!(matches!(outcome.result, BfsResult::Exhausted(_)));
    }

    #[test]
    fn singleton_augment() {
        let u = UniformMatroid::new(3, 2);
        assert_eq!(
            augment(&u, &u, &set(&[]), &AugmentingPath::singleton(1)).unwrap(),
            set(&[1])
        );
    }

    #[test]
    fn malformed_paths_rejected() {
        let s = set(&[0]);
        assert!(symmetric_difference(&s, &AugmentingPath::new(vec![1, 2])).is_err());
        assert!(symmetric_difference(&s, &AugmentingPath::new(vec![1, 2, 3])).is_err());
        assert!(symmetric_difference(&s, &AugmentingPath::new(vec![1, 0, 1])).is_err());
        assert_eq!(
            symmetric_difference(&s, &AugmentingPath::new(vec![1, 0, 2])).unwrap(),
            set(&[1, 2])
        );
    }

    #[test]
    fn non_shortest_path_trips_the_assertion() {
        // Sources and sinks both {1, 2} under U(3,1) vs U(3,1) with S = {0}:
        // path 1 -> 0 -> 2 is well formed but leaves a dependent set.
        let u = UniformMatroid::new(3, 1);
        let err = augment(&u, &u, &set(&[0]), &AugmentingPath::new(vec![1, 0, 2])).unwrap_err();
        assert!(matches!(err, SolveError::Internal(_)));
    }
}
