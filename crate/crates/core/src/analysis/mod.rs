//! T1 and discreteness classification, separating words, back-and-forth
//! completion, strong indecomposability and the chain constructions.

mod chains;
mod classify;
mod indecomposable;
mod separate;

pub use chains::{chain_union, continuum_witness, infinite_crossword, ChainUnion, ContinuumWitness, UnionRoute};
pub use classify::{classify, Classification};
pub use indecomposable::{dominated_classes, strongly_indecomposable, Dominated, DominatedClass, Indecomposables};
pub use separate::{back_and_forth, separating_word, Separation};
