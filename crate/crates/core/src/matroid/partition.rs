use crate::element::{Element, ElementSet};

use super::{Matroid, MatroidError};

/// Ground set split into disjoint blocks, each with a capacity.
/// `X` is independent iff it takes at most `capacity[i]` elements from block `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionMatroid {
    blocks: Vec<Vec<Element>>,
    capacities: Vec<usize>,
    block_of: Vec<usize>,
}

impl PartitionMatroid {
    /// Blocks must cover `[0, n)` exactly once, where `n` is the total number
    /// of listed elements. Empty blocks are allowed.
    pub fn new(blocks: Vec<Vec<Element>>, capacities: Vec<usize>) -> Result<Self, MatroidError> {
        if blocks.len() != capacities.len() {
            return Err(MatroidError::Invalid(format!(
                "blocks: {} blocks but {} capacities",
                blocks.len(),
                capacities.len()
            )));
        }
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut block_of = vec![usize::MAX; n];
        for (i, block) in blocks.iter().enumerate() {
            for &x in block {
                if x >= n {
                    return Err(MatroidError::Invalid(format!("blocks: element {x} outside [0, {n})")));
                }
                if block_of[x] != usize::MAX {
                    return Err(MatroidError::Invalid(format!(
                        "blocks: element {x} appears more than once"
                    )));
                }
                block_of[x] = i;
            }
        }
        Ok(Self {
            blocks,
            capacities,
            block_of,
        })
    }

    /// Builds from a per-element block assignment.
    pub fn from_assignment(block_of: &[usize], capacities: Vec<usize>) -> Result<Self, MatroidError> {
        let mut blocks = vec![Vec::new(); capacities.len()];
        for (x, &b) in block_of.iter().enumerate() {
            let block = blocks
                .get_mut(b)
                .ok_or_else(|| MatroidError::Invalid(format!("blocks: element {x} assigned to missing block {b}")))?;
            block.push(x);
        }
        Self::new(blocks, capacities)
    }

    pub fn blocks(&self) -> &[Vec<Element>] {
        &self.blocks
    }

    pub fn capacities(&self) -> &[usize] {
        &self.capacities
    }
}

impl Matroid for PartitionMatroid {
    fn ground_size(&self) -> usize {
        self.block_of.len()
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        let mut used = vec![0usize; self.blocks.len()];
        for x in set.iter() {
            let b = self.block_of[x];
            used[b] += 1;
            if used[b] > self.capacities[b] {
                return false;
            }
        }
        true
    }
}
