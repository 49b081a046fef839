use crate::error::{Error, Result};
use crate::matrix::Crossword;
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinaryKind {
    Meet,
    Join,
}

/// Crossword whose diagonal is `x ∧ y` (meet: `x × y`) or `x ∨ y`
/// (join: `(x × A) ∨ (A × y)`). Its rows and columns are among
/// `∅, x, y, A`.
pub fn binary_witness(kind: BinaryKind, x: &Word, y: &Word) -> Result<Crossword> {
    if x.len() != y.len() {
        return Err(Error::GroundMismatch { expected: x.len(), found: y.len() });
    }
    let n = x.len();
    Ok(match kind {
        BinaryKind::Meet => Crossword::product(x, y),
        BinaryKind::Join => {
            let all = Word::full(n);
            Crossword::product(x, &all).union(&Crossword::product(&all, y))
        }
    })
}

/// `⋁ x_i × x_i` together with the largest number of words sharing a point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NearDisjoint {
    pub crossword: Crossword,
    pub max_multiplicity: usize,
}

/// Row `a` (and column `a`) of the result is the union of those `x_i`
/// containing `a`; the diagonal is `⋁ x_i`.
pub fn near_disjoint_witness(n: usize, xs: &[Word]) -> Result<NearDisjoint> {
    if let Some(bad) = xs.iter().find(|x| x.len() != n) {
        return Err(Error::GroundMismatch { expected: n, found: bad.len() });
    }
    let mut rows = vec![Word::empty(n); n];
    let mut multiplicity = vec![0usize; n];
    for x in xs {
        for a in x.iter() {
            rows[a] = rows[a].join(x);
            multiplicity[a] += 1;
        }
    }
    Ok(NearDisjoint {
        crossword: Crossword::from_rows(rows)?,
        max_multiplicity: multiplicity.into_iter().max().unwrap_or(0),
    })
}
