use std::cell::Cell;

use serde::{Deserialize, Serialize};

use crate::element::ElementSet;

use super::{Matroid, Phase};

/// Oracle calls attributed to each solver phase.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhaseCounts {
    pub sources_sinks: u64,
    pub case1: u64,
    pub case2: u64,
    pub augment_check: u64,
    pub certificate: u64,
}

impl PhaseCounts {
    pub fn get(&self, phase: Phase) -> u64 {
        match phase {
            Phase::SourcesSinks => self.sources_sinks,
            Phase::Case1 => self.case1,
            Phase::Case2 => self.case2,
            Phase::AugmentCheck => self.augment_check,
            Phase::Certificate => self.certificate,
        }
    }

    fn slot(&mut self, phase: Phase) -> &mut u64 {
        match phase {
            Phase::SourcesSinks => &mut self.sources_sinks,
            Phase::Case1 => &mut self.case1,
            Phase::Case2 => &mut self.case2,
            Phase::AugmentCheck => &mut self.augment_check,
            Phase::Certificate => &mut self.certificate,
        }
    }

    pub fn total(&self) -> u64 {
        Phase::ALL.iter().map(|&p| self.get(p)).sum()
    }
}

/// Wraps an oracle and counts every query, attributed to the current phase.
///
/// Counters live in `Cell`s, so a `CountingOracle` is `Send` but not `Sync`:
/// one thread owns it for the duration of a solve. Answers are always the
/// inner oracle's answers.
#[derive(Debug)]
pub struct CountingOracle<M> {
    inner: M,
    phase: Cell<Phase>,
    counts: Cell<PhaseCounts>,
}

impl<M: Matroid> CountingOracle<M> {
    /// Starts with all counters at zero, attributing to `sources_sinks`.
    pub fn new(inner: M) -> Self {
        Self {
            inner,
            phase: Cell::new(Phase::SourcesSinks),
            counts: Cell::new(PhaseCounts::default()),
        }
    }

    pub fn inner(&self) -> &M {
        &self.inner
    }

    pub fn into_inner(self) -> M {
        self.inner
    }

    pub fn phase(&self) -> Phase {
        self.phase.get()
    }

    pub fn counts(&self) -> PhaseCounts {
        self.counts.get()
    }

    pub fn total_calls(&self) -> u64 {
        self.counts.get().total()
    }

    pub fn reset(&self) {
        self.counts.set(PhaseCounts::default());
    }
}

impl<M: Matroid> Matroid for CountingOracle<M> {
    fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        let mut counts = self.counts.get();
        *counts.slot(self.phase.get()) += 1;
        self.counts.set(counts);
        self.inner.is_independent(set)
    }

    fn enter_phase(&self, phase: Phase) {
        self.phase.set(phase);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::GraphicMatroid;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn answers_and_counts_match_inner(
            queries in proptest::collection::vec(
                (proptest::collection::btree_set(0usize..6, 0..6), 0usize..5),
                0..40,
            )
        ) {
            let graph = GraphicMatroid::new(4, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 3), (0, 1)]).unwrap();
            let counting = CountingOracle::new(graph.clone());
            let mut expected = PhaseCounts::default();
            for (ids, phase) in &queries {
                let phase = Phase::ALL[*phase];
                counting.enter_phase(phase);
                let set: ElementSet = ids.iter().copied().collect();
                prop_assert_eq!(counting.is_independent(&set), graph.is_independent(&set));
                *expected.slot(phase) += 1;
            }
            prop_assert_eq!(counting.counts(), expected);
            prop_assert_eq!(counting.total_calls(), queries.len() as u64);
        }
    }
}
