use std::collections::HashSet;

use crate::family::Family;
use crate::word::Word;

/// The sublattice of `2^A` generated by `s ∪ {∅, A}` under pairwise meets
/// and joins.
pub fn lattice_close(s: &Family) -> Family {
    let n = s.size();
    let seeds = s.iter().cloned().chain([Word::empty(n), Word::full(n)]);
    let words = lattice_close_words(seeds, |_, _, _| {});
    Family::canonicalize(s.ground().clone(), words).expect("closure stays on the ground set")
}

/// Worklist closure under meet and join. Each new word is combined only with
/// words already present, so every pair is visited once. `on_new(w, a, b)` is
/// called for each word `w` produced from the pair `(a, b)`.
pub fn lattice_close_words<I, F>(seeds: I, mut on_new: F) -> Vec<Word>
where
    I: IntoIterator<Item = Word>,
    F: FnMut(&Word, &Word, &Word),
{
    let mut present: HashSet<Word> = HashSet::new();
    let mut all: Vec<Word> = Vec::new();
    for w in seeds {
        if present.insert(w.clone()) {
            all.push(w);
        }
    }
    let mut next = 0;
    while next < all.len() {
        let x = all[next].clone();
        for i in 0..=next {
            let y = all[i].clone();
            for z in [x.meet(&y), x.join(&y)] {
                if present.insert(z.clone()) {
                    on_new(&z, &x, &y);
                    all.push(z);
                }
            }
        }
        next += 1;
    }
    all
}

/// Whether the family is closed under pairwise meet and join.
pub fn is_lattice(f: &Family) -> bool {
    let w = f.words();
    w.iter().enumerate().all(|(i, x)| w[i..].iter().all(|y| f.contains(&x.meet(y)) && f.contains(&x.join(y))))
}
