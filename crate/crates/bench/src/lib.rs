//! Fixtures shared by the benchmarks.

use pratt_core::constructions::{antichain_family, order_comonoid, Direction};
use pratt_core::{Family, Preorder};

/// Down-sets together with up-sets of the chain `0 < .. < n-1`.
pub fn down_up_chain(n: usize) -> Family {
    let p = Preorder::chain(n);
    let down = order_comonoid(&p, Direction::Down).expect("chain down-sets");
    let up = order_comonoid(&p, Direction::Up).expect("chain up-sets");
    down.with(up.words().iter().cloned()).expect("same ground")
}

/// Down-sets of a two-level poset on `n` elements: the first half of the
/// elements sit below every element of the second half.
pub fn two_level(n: usize) -> Family {
    let half = n / 2;
    let pairs: Vec<(usize, usize)> = (0..half).flat_map(|a| (half..n).map(move |b| (a, b))).collect();
    let p = Preorder::from_pairs(n, &pairs).expect("valid pairs");
    order_comonoid(&p, Direction::Down).expect("down-sets")
}

/// The e-family of the three two-element subsets of `{0, 1, 2}`.
pub fn triangle_antichain() -> Family {
    antichain_family(&[vec![0, 1], vec![1, 2], vec![0, 2]]).expect("antichain")
}
