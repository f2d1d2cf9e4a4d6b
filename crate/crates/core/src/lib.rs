//! Matroid intersection by Cunningham's augmenting-path algorithm, with
//! exchange-graph arcs found lazily by binary search over prefix sets.
//!
//! The crate counts independence-oracle calls per phase and ships brute-force
//! references to check the solver against.

pub mod cli;
pub mod element;
pub mod matroid;
pub mod solver;
pub mod verify;

pub use element::{Element, ElementSet};
pub use matroid::{AnyMatroid, Matroid, MatroidError, Phase};
pub use solver::{solve, solve_with, Certificate, RunStats, Solution, SolveError, SolveOptions};
