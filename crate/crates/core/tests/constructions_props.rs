mod common;

use common::{brute_force_is_comonoid, random_preorder};
use pratt_core::analysis::classify;
use pratt_core::constructions::{
    coordinate_family, omega_infty, order_comonoid, sunflower_extract, Direction, Flavor,
};
use pratt_core::crossword::diagonal_step;
use pratt_core::lattice::is_free_family;
use pratt_core::{is_comonoid, Word, DEFAULT_BUDGET};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn order_families_are_comonoids(seed in any::<u64>(), n in 1usize..=5) {
        let mut rng = StdRng::seed_from_u64(seed);
        let p = random_preorder(&mut rng, n);
        for d in [Direction::Down, Direction::Up] {
            let f = order_comonoid(&p, d).unwrap();
            prop_assert!(is_comonoid(&f, DEFAULT_BUDGET).unwrap().is_ok());
        }
    }

    #[test]
    fn sunflower_shape(tuples in proptest::collection::vec(proptest::sample::subsequence((0u8..12).collect::<Vec<_>>(), 3), 2..10)) {
        // subsequences are sorted; shuffle positions deterministically by rotating
        let tuples: Vec<Vec<u8>> = tuples.into_iter().enumerate().map(|(i, mut t)| { t.rotate_left(i % 3); t }).collect();
        if let Ok(s) = sunflower_extract(&tuples, 2) {
            for (&k, tail) in s.picked.iter().zip(&s.tails) {
                let permuted: Vec<u8> = s.perm.iter().map(|&c| tuples[k][c]).collect();
                let rebuilt: Vec<u8> = s.core.iter().chain(tail).copied().collect();
                prop_assert_eq!(permuted, rebuilt);
            }
            for (i, a) in s.tails.iter().enumerate() {
                for b in &s.tails[i + 1..] {
                    prop_assert!(a.iter().all(|v| !b.contains(v)));
                }
            }
        }
    }
}

#[test]
fn omega_fill_up() {
    for n in 1..=4 {
        let f = omega_infty(n).unwrap();
        assert!(is_comonoid(&f, DEFAULT_BUDGET).unwrap().is_ok());
        assert!(brute_force_is_comonoid(&f));
        let c = classify(&f);
        assert!(!c.discrete);
        assert!(!c.t1);
        let step = diagonal_step(&f, DEFAULT_BUDGET).unwrap();
        for z in step.family.iter() {
            if (0..n).all(|a| z.contains(a)) {
                assert!(z.contains(n), "diagonal {z} reaches every finite element but not the top");
            }
        }
    }
}

#[test]
fn coordinate_families() {
    for m in 1..=4 {
        let e = coordinate_family(m, Flavor::EOnly).unwrap();
        assert!(is_free_family(&e).unwrap().is_free());
        assert!(!classify(&e).t1);
        assert!(classify(&coordinate_family(m, Flavor::WithComplements).unwrap()).t1);
    }
    let e = coordinate_family(2, Flavor::EOnly).unwrap();
    let e0 = Word::from_indices(4, [1, 3]).unwrap();
    assert!(e.contains(&e0));
}
