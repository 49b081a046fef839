//! Finite models of Pratt comonoids: families of subsets of a finite set
//! closed under taking diagonals of crosswords.
//!
//! Elements of the ground set are indices `0..n`. A [`Word`] is a subset,
//! ordered canonically by reading its bits as an unsigned integer with
//! element 0 least significant. A [`Crossword`] over a [`Family`] is a square
//! 0/1 matrix whose rows `{b | C[a][b]}` and columns `{b | C[b][a]}` are all
//! members; the family is a comonoid when it contains `∅` and `A` and the
//! diagonal of every crossword over it.

pub mod analysis;
pub mod closure;
pub mod constructions;
pub mod crossword;
pub mod error;
pub mod family;
pub mod lattice;
pub mod matrix;
pub mod order;
pub mod word;

pub use closure::{close, is_comonoid, Closure, ComonoidCheck, Rule, TraceEntry};
pub use crossword::{solve_diagonal, SolveOutcome, DEFAULT_BUDGET};
pub use error::{Error, Result};
pub use family::Family;
pub use matrix::{Axis, Crossword};
pub use order::Preorder;
pub use word::{GroundSet, Word};
