#![allow(dead_code)]

use std::collections::BTreeSet;

use pratt_core::analysis::classify;
use pratt_core::constructions::{order_comonoid, Direction};
use pratt_core::{Crossword, Family, Preorder, Word};
use rand::rngs::StdRng;
use rand::Rng;

pub fn w(len: usize, idx: &[usize]) -> Word {
    Word::from_indices(len, idx.iter().copied()).unwrap()
}

pub fn random_word(rng: &mut StdRng, n: usize) -> Word {
    Word::from_fn(n, |_| rng.gen_bool(0.5))
}

pub fn random_family(rng: &mut StdRng, n: usize, count: usize) -> Family {
    Family::from_words(n, (0..count).map(|_| random_word(rng, n))).unwrap()
}

pub fn with_bounds(f: &Family) -> Family {
    let n = f.size();
    f.with([Word::empty(n), Word::full(n)]).unwrap()
}

/// A random preorder from random pairs.
pub fn random_preorder(rng: &mut StdRng, n: usize) -> Preorder {
    let k = rng.gen_range(0..=n * 2);
    let pairs: Vec<(usize, usize)> = (0..k).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
    Preorder::from_pairs(n, &pairs).unwrap()
}

pub fn random_down_sets(rng: &mut StdRng, n: usize) -> Family {
    let dir = if rng.gen_bool(0.5) { Direction::Down } else { Direction::Up };
    order_comonoid(&random_preorder(rng, n), dir).unwrap()
}

/// Random T1 family: random words, resampled until T1.
pub fn random_t1(rng: &mut StdRng, n: usize) -> Family {
    loop {
        let count = rng.gen_range(n..=3 * n);
        let f = random_family(rng, n, count);
        if classify(&f).t1 {
            return f;
        }
    }
}

/// Random complement-closed T1 family.
pub fn random_complement_closed_t1(rng: &mut StdRng, n: usize) -> Family {
    loop {
        let count = rng.gen_range(1..=n + 1);
        let base: Vec<Word> = (0..count).map(|_| random_word(rng, n)).collect();
        let f = Family::from_words(n, base.iter().cloned().chain(base.iter().map(Word::negate))).unwrap();
        if classify(&f).t1 {
            return f;
        }
    }
}

/// Every diagonal of every crossword over `f`, by enumerating all `|f|^n`
/// row assignments and checking the columns.
pub fn brute_force_diagonals(f: &Family) -> BTreeSet<Word> {
    let n = f.size();
    let words = f.words();
    let mut out = BTreeSet::new();
    if n == 0 {
        out.insert(Word::empty(0));
        return out;
    }
    if words.is_empty() {
        return out;
    }
    let mut idx = vec![0usize; n];
    loop {
        let rows: Vec<Word> = idx.iter().map(|&i| words[i].clone()).collect();
        let c = Crossword::from_rows(rows).unwrap();
        if c.cols().iter().all(|col| f.contains(col)) {
            out.insert(c.diagonal());
        }
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            idx[k] += 1;
            if idx[k] < words.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Reference check of the comonoid condition.
pub fn brute_force_is_comonoid(f: &Family) -> bool {
    f.contains_bounds() && brute_force_diagonals(f).iter().all(|z| f.contains(z))
}
