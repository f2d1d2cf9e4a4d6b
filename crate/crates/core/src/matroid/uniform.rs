use crate::element::ElementSet;

use super::Matroid;

/// `X` is independent iff `|X| <= k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UniformMatroid {
    n: usize,
    k: usize,
}

impl UniformMatroid {
    pub fn new(n: usize, k: usize) -> Self {
        Self { n, k }
    }

    pub fn rank_cap(&self) -> usize {
        self.k
    }
}

impl Matroid for UniformMatroid {
    fn ground_size(&self) -> usize {
        self.n
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        set.len() <= self.k
    }
}
