//! Word algebra, family transforms, lattice generation, freeness tests and
//! monotone lattice terms.

mod algebra;
mod freeness;
mod generate;
mod term;
mod transforms;

pub use algebra::{word_algebra, AlgebraValue, WordOp};
pub use freeness::{is_free_family, partitioned_freeness, Freeness, Relation, MAX_FREENESS_FAMILY};
pub use generate::{is_lattice, lattice_close, lattice_close_words};
pub use term::{pinning_assignment, term_normalize, Expr, MonotoneTerm};
pub use transforms::{dual_family, interval_family, intersect_families, pullback_family, Interval};
