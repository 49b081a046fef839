//! Generators for concrete structures and the combinatorial procedures that
//! accompany them.

mod cx;
mod examples;
mod order;
mod product;
mod sunflower;

pub use cx::{cx_encode, cx_evaluate, cx_separate, cx_stratum, cx_u, CxParams, CxPoint, CxSeparation};
pub use examples::{antichain_family, coordinate_family, grid_chains, omega_infty, Flavor, GridChains};
pub use order::{order_comonoid, Direction};
pub use product::{product_upset_check, ProductUpsets, UpsetReport, MAX_PRODUCT};
pub use sunflower::{sunflower_extract, Sunflower};
