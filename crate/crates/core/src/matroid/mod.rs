//! Independence oracles and the concrete matroid families used for testing
//! and benchmarking.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::element::{Element, ElementSet};

mod axioms;
mod counting;
mod graphic;
mod linear;
mod partition;
mod uniform;

pub use axioms::{axiom_check, AxiomReport, AxiomViolation, AXIOM_CHECK_MAX_N};
pub use counting::{CountingOracle, PhaseCounts};
pub use graphic::GraphicMatroid;
pub use linear::LinearMatroidGf2;
pub use partition::PartitionMatroid;
pub use uniform::UniformMatroid;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatroidError {
    #[error("element {element} is outside the ground set of size {ground_size}")]
    OutOfRange { element: Element, ground_size: usize },
    #[error("ground set of size {n} exceeds the exhaustive limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("invalid matroid description: {0}")]
    Invalid(String),
}

/// Solver phase an oracle call is attributed to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    SourcesSinks,
    Case1,
    Case2,
    AugmentCheck,
    Certificate,
}

impl Phase {
    pub const ALL: [Phase; 5] = [
        Phase::SourcesSinks,
        Phase::Case1,
        Phase::Case2,
        Phase::AugmentCheck,
        Phase::Certificate,
    ];

    /// Fixed label used in reports.
    pub fn label(self) -> &'static str {
        match self {
            Phase::SourcesSinks => "sources_sinks",
            Phase::Case1 => "case1",
            Phase::Case2 => "case2",
            Phase::AugmentCheck => "augment_check",
            Phase::Certificate => "certificate",
        }
    }
}

/// An independence oracle over the ground set `[0, ground_size())`.
///
/// Implementations must be pure and deterministic. `is_independent` may assume
/// every member of the queried set is below `ground_size()`; use the free
/// function [`is_independent`] for a range-checked query.
pub trait Matroid {
    fn ground_size(&self) -> usize;

    fn is_independent(&self, set: &ElementSet) -> bool;

    /// Attribution hint for call accounting. Plain oracles ignore it.
    fn enter_phase(&self, _phase: Phase) {}
}

impl<M: Matroid + ?Sized> Matroid for &M {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        (**self).is_independent(set)
    }

    fn enter_phase(&self, phase: Phase) {
        (**self).enter_phase(phase)
    }
}

impl<M: Matroid + ?Sized> Matroid for Box<M> {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        (**self).is_independent(set)
    }

    fn enter_phase(&self, phase: Phase) {
        (**self).enter_phase(phase)
    }
}

/// Range-checked independence query.
pub fn is_independent<M: Matroid + ?Sized>(m: &M, set: &ElementSet) -> Result<bool, MatroidError> {
    check_in_range(m.ground_size(), set)?;
    Ok(m.is_independent(set))
}

pub(crate) fn check_in_range(ground_size: usize, set: &ElementSet) -> Result<(), MatroidError> {
    match set.max() {
        Some(element) if element >= ground_size => Err(MatroidError::OutOfRange { element, ground_size }),
        _ => Ok(()),
    }
}

/// Greedy rank of `set`, scanning members in ascending id order.
///
/// Issues at most `|set|` oracle calls.
pub fn rank<M: Matroid + ?Sized>(m: &M, set: &ElementSet) -> Result<usize, MatroidError> {
    check_in_range(m.ground_size(), set)?;
    let mut basis = ElementSet::new(m.ground_size());
    for x in set.iter() {
        basis.insert(x);
        if !m.is_independent(&basis) {
            basis.remove(x);
        }
    }
    Ok(basis.len())
}

/// Any of the four supported families, for instances loaded at runtime.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyMatroid {
    Uniform(UniformMatroid),
    Partition(PartitionMatroid),
    Graphic(GraphicMatroid),
    LinearGf2(LinearMatroidGf2),
}

impl Matroid for AnyMatroid {
    fn ground_size(&self) -> usize {
        match self {
            AnyMatroid::Uniform(m) => m.ground_size(),
            AnyMatroid::Partition(m) => m.ground_size(),
            AnyMatroid::Graphic(m) => m.ground_size(),
            AnyMatroid::LinearGf2(m) => m.ground_size(),
        }
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        match self {
            AnyMatroid::Uniform(m) => m.is_independent(set),
            AnyMatroid::Partition(m) => m.is_independent(set),
            AnyMatroid::Graphic(m) => m.is_independent(set),
            AnyMatroid::LinearGf2(m) => m.is_independent(set),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ids: &[Element]) -> ElementSet {
        ids.iter().copied().collect()
    }

    fn triangle() -> GraphicMatroid {
        GraphicMatroid::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn family_examples() {
        let u = UniformMatroid::new(4, 2);
        assert!(is_independent(&u, &set(&[0, 1])).unwrap());
        assert!(!is_independent(&triangle(), &set(&[0, 1, 2])).unwrap());
        let lin = LinearMatroidGf2::from_columns(2, &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        assert!(!is_independent(&lin, &set(&[0, 1, 2])).unwrap());
    }

    #[test]
    fn out_of_range_is_an_error_not_dependence() {
        let u = UniformMatroid::new(4, 2);
        assert_eq!(
            is_independent(&u, &set(&[4])),
            Err(MatroidError::OutOfRange {
                element: 4,
                ground_size: 4
            })
        );
        assert!(rank(&u, &set(&[1, 7])).is_err());
    }

    #[test]
    fn rank_examples() {
        let u = UniformMatroid::new(4, 2);
        assert_eq!(rank(&u, &set(&[0, 1, 2])).unwrap(), 2);
        assert_eq!(rank(&u, &ElementSet::new(4)).unwrap(), 0);
        assert_eq!(rank(&triangle(), &set(&[0, 1, 2])).unwrap(), 2);
    }

    #[test]
    fn rank_uses_at_most_set_size_calls() {
        let m = CountingOracle::new(triangle());
        rank(&m, &set(&[0, 1, 2])).unwrap();
        assert_eq!(m.total_calls(), 3);
    }

    #[test]
    fn phase_labels_are_fixed() {
        let labels: Vec<_> = Phase::ALL.iter().map(|p| p.label()).collect();
        assert_eq!(
            labels,
            ["sources_sinks", "case1", "case2", "augment_check", "certificate"]
        );
    }
}
