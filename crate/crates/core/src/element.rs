//! Ground-set elements and subsets.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Dense element id in `[0, n)`.
pub type Element = usize;

/// A subset of the ground set `[0, n)`, stored as a bitset over its universe.
///
/// Equality is semantic: two sets with different universes but the same
/// members compare equal.
#[derive(Clone, Default)]
pub struct ElementSet {
    bits: FixedBitSet,
}

impl ElementSet {
    /// Empty set over a universe of `n` elements.
    pub fn new(n: usize) -> Self {
        Self {
            bits: FixedBitSet::with_capacity(n),
        }
    }

    /// The full ground set `[0, n)`.
    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        Self { bits }
    }

    /// Builds a set from ids, rejecting any id outside `[0, n)`.
    pub fn from_ids<I>(n: usize, ids: I) -> Result<Self, Element>
    where
        I: IntoIterator<Item = Element>,
    {
        let mut set = Self::new(n);
        for id in ids {
            if id >= n {
                return Err(id);
            }
            set.bits.insert(id);
        }
        Ok(set)
    }

    /// Size of the universe this set lives in.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    /// Inserts `x`, growing the universe if needed. Returns true if newly added.
    pub fn insert(&mut self, x: Element) -> bool {
        if x >= self.bits.len() {
            self.bits.grow(x + 1);
        }
        !self.bits.put(x)
    }

    /// Removes `x`. Returns true if it was present.
    pub fn remove(&mut self, x: Element) -> bool {
        if x >= self.bits.len() || !self.bits.contains(x) {
            return false;
        }
        self.bits.set(x, false);
        true
    }

    pub fn contains(&self, x: Element) -> bool {
        self.bits.contains(x)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// Members in ascending id order.
    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.bits.ones()
    }

    /// Members as an ascending vector.
    pub fn to_vec(&self) -> Vec<Element> {
        self.iter().collect()
    }

    /// Largest member, if any.
    pub fn max(&self) -> Option<Element> {
        self.bits.ones().next_back()
    }

    /// Smallest member, if any.
    pub fn min(&self) -> Option<Element> {
        self.bits.minimum()
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        if other.universe() > self.universe() {
            self.bits.grow(other.universe());
        }
        self.bits.union_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &ElementSet) {
        self.bits.difference_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &ElementSet) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    /// `[0, universe) \ self`.
    pub fn complement(&self) -> ElementSet {
        let mut out = self.clone();
        out.bits.toggle_range(..);
        out
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.iter().all(|x| other.contains(x))
    }

    /// Copy of this set with `x` added.
    pub fn with(&self, x: Element) -> ElementSet {
        let mut out = self.clone();
        out.insert(x);
        out
    }

    /// Copy of this set with `x` removed.
    pub fn without(&self, x: Element) -> ElementSet {
        let mut out = self.clone();
        out.remove(x);
        out
    }
}

impl PartialEq for ElementSet {
    fn eq(&self, other: &Self) -> bool {
        self.iter().eq(other.iter())
    }
}

impl Eq for ElementSet {}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Extend<Element> for ElementSet {
    fn extend<I: IntoIterator<Item = Element>>(&mut self, iter: I) {
        for x in iter {
            self.insert(x);
        }
    }
}

impl FromIterator<Element> for ElementSet {
    fn from_iter<I: IntoIterator<Item = Element>>(iter: I) -> Self {
        let mut set = ElementSet::default();
        set.extend(iter);
        set
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let ids = Vec::<Element>::deserialize(deserializer)?;
        Ok(ids.into_iter().collect())
    }
}
