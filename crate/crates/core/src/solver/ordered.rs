//! Ordering of the current solution with a reached prefix, and the
//! prefix binary search used to locate circuit elements.

use crate::element::{Element, ElementSet};
use crate::matroid::Matroid;

use super::SolveError;

/// A permutation `s_1, ..., s_k` of the solution whose first
/// `reached_len()` positions hold exactly the elements reached so far.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedGround {
    sequence: Vec<Element>,
    reached: usize,
}

impl OrderedGround {
    /// Ascending id order, nothing reached.
    pub fn new(solution: &ElementSet) -> Self {
        Self {
            sequence: solution.to_vec(),
            reached: 0,
        }
    }

    /// Ascending order with `reached` moved to the front, ascending within
    /// each part.
    pub fn with_reached(solution: &ElementSet, reached: &ElementSet) -> Self {
        let (mut front, back): (Vec<_>, Vec<_>) = solution.iter().partition(|&x| reached.contains(x));
        let reached = front.len();
        front.extend(back);
        Self {
            sequence: front,
            reached,
        }
    }

    pub fn sequence(&self) -> &[Element] {
        &self.sequence
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn reached_len(&self) -> usize {
        self.reached
    }

    pub fn reached(&self) -> &[Element] {
        &self.sequence[..self.reached]
    }

    /// Swaps the element at `position` to the end of the reached prefix and
    /// extends the prefix by one.
    pub fn promote(&mut self, position: usize) {
        assert!(
            position >= self.reached && position < self.sequence.len(),
            "promote({position}) outside the unreached region"
        );
        self.sequence.swap(position, self.reached);
        self.reached += 1;
    }
}

/// A probe set `base ∪ seq[..len]` that moves between prefix lengths by
/// adding or removing only the difference.
struct PrefixProbe<'a> {
    set: &'a mut ElementSet,
    seq: &'a [Element],
    len: usize,
}

impl PrefixProbe<'_> {
    fn move_to(&mut self, target: usize) {
        while self.len < target {
            self.set.insert(self.seq[self.len]);
            self.len += 1;
        }
        while self.len > target {
            self.len -= 1;
            self.set.remove(self.seq[self.len]);
        }
    }
}

/// Smallest `i` in `[lo, seq.len()]` with `base ∪ seq[..i]` dependent, where
/// `base` is the current content of `probe`.
///
/// Assumes the full prefix is dependent and that prefixes shorter than `lo`
/// are independent. The full prefix is only queried if the search lands on
/// it, in which case `None` means it was independent after all. `probe` is
/// restored to `base` before returning.
pub(crate) fn first_dependent_prefix<M: Matroid + ?Sized>(
    m: &M,
    probe: &mut ElementSet,
    seq: &[Element],
    lo: usize,
) -> Option<usize> {
    let hi_limit = seq.len();
    let (mut lo, mut hi) = (lo, hi_limit);
    let mut probe = PrefixProbe {
        set: probe,
        seq,
        len: 0,
    };
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        probe.move_to(mid);
        if m.is_independent(probe.set) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    let found = if lo == hi_limit {
        probe.move_to(hi_limit);
        (!m.is_independent(probe.set)).then_some(lo)
    } else {
        Some(lo)
    };
    probe.move_to(0);
    found
}

/// Minimum `i` in `[0, hi]` such that `{s_1, ..., s_i} ∪ {extra}` is dependent.
///
/// `i = 0` means `extra` is a loop; otherwise `s_i` lies on the unique circuit
/// of `S + extra`. Uses `ceil(log2(hi + 1))` oracle calls, plus one when the
/// answer is `hi`.
pub fn min_dependent_prefix<M: Matroid + ?Sized>(
    m: &M,
    order: &OrderedGround,
    extra: Element,
    hi: usize,
) -> Result<usize, SolveError> {
    if hi > order.len() {
        return Err(SolveError::ContractViolation(format!(
            "prefix bound {hi} exceeds ordering length {}",
            order.len()
        )));
    }
    let mut probe = ElementSet::new(m.ground_size());
    probe.insert(extra);
    first_dependent_prefix(m, &mut probe, &order.sequence()[..hi], 0).ok_or_else(|| {
        SolveError::ContractViolation(format!(
            "no circuit: the first {hi} ordered elements plus {extra} are independent"
        ))
    })
}
