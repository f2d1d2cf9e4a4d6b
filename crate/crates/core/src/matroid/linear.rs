use crate::element::ElementSet;

use super::{Matroid, MatroidError};

/// Column matroid of a binary matrix: element `i` is column `i`, and a set of
/// columns is independent iff it is linearly independent over GF(2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMatroidGf2 {
    row_count: usize,
    words: usize,
    /// Column-major, `words` u64s per column, bit `r` = row `r`.
    packed: Vec<u64>,
}

impl LinearMatroidGf2 {
    /// Builds from 0/1 column vectors, each of length `row_count`.
    pub fn from_columns(row_count: usize, columns: &[Vec<u8>]) -> Result<Self, MatroidError> {
        let words = row_count.div_ceil(64).max(1);
        let mut packed = vec![0u64; words * columns.len()];
        for (c, column) in columns.iter().enumerate() {
            if column.len() != row_count {
                return Err(MatroidError::Invalid(format!(
                    "columns: column {c} has length {} but row_count is {row_count}",
                    column.len()
                )));
            }
            for (r, &bit) in column.iter().enumerate() {
                match bit {
                    0 => {}
                    1 => packed[c * words + r / 64] |= 1 << (r % 64),
                    other => {
                        return Err(MatroidError::Invalid(format!(
                            "columns: column {c} row {r} has entry {other}, expected 0 or 1"
                        )))
                    }
                }
            }
        }
        Ok(Self {
            row_count,
            words,
            packed,
        })
    }

    pub fn row_count(&self) -> usize {
        self.row_count
    }

    fn column(&self, c: usize) -> &[u64] {
        &self.packed[c * self.words..(c + 1) * self.words]
    }

    /// Column `c` as a 0/1 vector.
    pub fn column_bits(&self, c: usize) -> Vec<u8> {
        let col = self.column(c);
        (0..self.row_count)
            .map(|r| (col[r / 64] >> (r % 64) & 1) as u8)
            .collect()
    }

    pub fn columns(&self) -> Vec<Vec<u8>> {
        (0..self.ground_size()).map(|c| self.column_bits(c)).collect()
    }
}

fn highest_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .rev()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + 63 - w.leading_zeros() as usize)
}

impl Matroid for LinearMatroidGf2 {
    fn ground_size(&self) -> usize {
        self.packed.len() / self.words
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        if set.len() > self.row_count {
            return false;
        }
        // basis[p] holds a reduced vector whose highest set bit is p.
        let mut basis: Vec<Option<Vec<u64>>> = vec![None; self.row_count];
        for c in set.iter() {
            let mut v = self.column(c).to_vec();
            loop {
                let Some(top) = highest_bit(&v) else {
                    return false;
                };
                match &basis[top] {
                    Some(b) => v.iter_mut().zip(b).for_each(|(x, y)| *x ^= y),
                    None => {
                        basis[top] = Some(v);
                        break;
                    }
                }
            }
        }
        true
    }
}
