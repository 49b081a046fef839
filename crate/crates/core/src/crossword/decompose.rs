use std::collections::HashSet;

use crate::matrix::Crossword;
use crate::word::Word;

/// The diagonal `z` of a matrix written as `⋁_{a∈z} x_a`, where `x_a` is the
/// meet of every row and column containing `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub diagonal: Word,
    pub parts: Vec<(usize, Word)>,
}

impl Decomposition {
    /// Join of the parts.
    pub fn union(&self) -> Word {
        self.parts.iter().fold(Word::empty(self.diagonal.len()), |acc, (_, x)| acc.join(x))
    }
}

pub fn decompose_diagonal(c: &Crossword) -> Decomposition {
    let n = c.size();
    let z = c.diagonal();
    let cols = c.cols();
    let parts: Vec<(usize, Word)> = z
        .iter()
        .map(|a| {
            let rows = c.rows().iter().filter(|r| r.contains(a));
            let columns = cols.iter().filter(|col| col.contains(a));
            let x = rows.chain(columns).fold(Word::full(n), |acc, w| acc.meet(w));
            (a, x)
        })
        .collect();
    let d = Decomposition { diagonal: z, parts };
    assert!(d.parts.iter().all(|(a, x)| x.contains(*a)), "x_a must contain a");
    assert_eq!(d.union(), d.diagonal, "diagonal must equal the join of its parts");
    d
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Diversity {
    pub distinct_rows: usize,
    pub distinct_cols: usize,
    pub bound_ok: bool,
}

fn at_most_pow2(x: usize, k: usize) -> bool {
    k >= usize::BITS as usize - 1 || x <= 1usize << k
}

/// Counts distinct rows and columns; each count is at most two to the power
/// of the other.
pub fn diversity_check(c: &Crossword) -> Diversity {
    let rows: HashSet<&Word> = c.rows().iter().collect();
    let cols: HashSet<Word> = c.cols().into_iter().collect();
    let (k, l) = (rows.len(), cols.len());
    let bound_ok = at_most_pow2(l, k) && at_most_pow2(k, l);
    assert!(bound_ok, "row/column diversity bound violated");
    Diversity { distinct_rows: k, distinct_cols: l, bound_ok }
}
