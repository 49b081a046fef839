//! Crossword validation, the witness constructions, diagonal decomposition
//! and the exhaustive search for a crossword with a prescribed diagonal.

mod decompose;
mod search;
mod validate;
mod witness;

pub use decompose::{decompose_diagonal, diversity_check, Decomposition, Diversity};
pub use search::{diagonal_step, solve_diagonal, DiagonalStep, SolveOutcome, DEFAULT_BUDGET, MAX_SEARCH_GROUND};
pub use validate::{validate, Validation};
pub use witness::{binary_witness, near_disjoint_witness, BinaryKind, NearDisjoint};

pub(crate) use search::reachable_diagonals;
