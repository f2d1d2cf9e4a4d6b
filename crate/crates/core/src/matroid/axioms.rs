//! Exhaustive matroid axiom checking for small ground sets.

use serde::Serialize;

use crate::element::{Element, ElementSet};

use super::{Matroid, MatroidError};

/// Largest ground set `axiom_check` will enumerate.
pub const AXIOM_CHECK_MAX_N: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum AxiomViolation {
    /// The empty set was reported dependent.
    EmptyDependent,
    /// `superset` is independent but its subset `subset` is not.
    Hereditary {
        subset: Vec<Element>,
        superset: Vec<Element>,
    },
    /// No element of `larger \ smaller` extends `smaller`.
    Exchange {
        smaller: Vec<Element>,
        larger: Vec<Element>,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn is_matroid(&self) -> bool {
        self.violations.is_empty()
    }
}

fn mask_to_vec(mask: u32) -> Vec<Element> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

/// Enumerates every subset and every pair of subsets and reports each
/// violated axiom instance. Hereditary violations are reported for
/// one-element-smaller subsets, which is equivalent to the full axiom.
/// Refuses ground sets larger than [`AXIOM_CHECK_MAX_N`].
pub fn axiom_check<M: Matroid + ?Sized>(m: &M) -> Result<AxiomReport, MatroidError> {
    let n = m.ground_size();
    if n > AXIOM_CHECK_MAX_N {
        return Err(MatroidError::TooLarge {
            n,
            limit: AXIOM_CHECK_MAX_N,
        });
    }
    let subsets = 1u32 << n;
    let independent: Vec<bool> = (0..subsets)
        .map(|mask| {
            let set: ElementSet = mask_to_vec(mask).into_iter().collect();
            m.is_independent(&set)
        })
        .collect();

    let mut report = AxiomReport::default();
    if !independent[0] {
        report.violations.push(AxiomViolation::EmptyDependent);
    }
    for y in 0..subsets {
        if !independent[y as usize] {
            continue;
        }
        for i in 0..n {
            let x = y & !(1 << i);
            if x != y && !independent[x as usize] {
                report.violations.push(AxiomViolation::Hereditary {
                    subset: mask_to_vec(x),
                    superset: mask_to_vec(y),
                });
            }
        }
    }
    let indep: Vec<u32> = (0..subsets).filter(|&s| independent[s as usize]).collect();
    for &x in &indep {
        for &y in &indep {
            if x.count_ones() >= y.count_ones() {
                continue;
            }
            let mut candidates = y & !x;
            let mut extendable = false;
            while candidates != 0 {
                let bit = candidates & candidates.wrapping_neg();
                if independent[(x | bit) as usize] {
                    extendable = true;
                    break;
                }
                candidates &= candidates - 1;
            }
            if !extendable {
                report.violations.push(AxiomViolation::Exchange {
                    smaller: mask_to_vec(x),
                    larger: mask_to_vec(y),
                });
            }
        }
    }
    Ok(report)
}
