use crate::error::{Error, Result};
use crate::family::Family;
use crate::lattice::lattice_close;
use crate::matrix::Crossword;
use crate::word::Word;

/// A word `x` with `x ∧ A0 = y`, built as `⋁_{a∈y} ⋀_{b∈A0-{a}} x_{a,b}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    pub word: Word,
    /// `(a, b, x_{a,b})`: the first member containing `a` but not `b`.
    pub choices: Vec<(usize, usize, Word)>,
}

pub fn separating_word(w: &Family, a0: &Word, y: &Word) -> Result<Separation> {
    w.check_word(a0)?;
    w.check_word(y)?;
    if !y.leq(a0) {
        return Err(Error::NotOrdered { lower: y.to_bits(), upper: a0.to_bits() });
    }
    let n = w.size();
    let mut choices = Vec::new();
    let mut x = Word::empty(n);
    for a in y.iter() {
        let mut xa = Word::full(n);
        for b in a0.iter().filter(|&b| b != a) {
            let sep = w.iter().find(|v| v.contains(a) && !v.contains(b)).ok_or(Error::NotT1 { a, b })?;
            xa = xa.meet(sep);
            choices.push((a, b, sep.clone()));
        }
        x = x.join(&xa);
    }
    assert_eq!(x.meet(a0), *y, "separating word must cut out y");
    Ok(Separation { word: x, choices })
}

/// Fills a crossword with diagonal `z` one element at a time. Row `n` and
/// column `n` are separating words over `{0..n}` in the lattice generated by
/// `w`, matching the entries already fixed by earlier columns and rows.
pub fn back_and_forth(w: &Family, z: &Word) -> Result<Crossword> {
    w.check_word(z)?;
    let l = lattice_close(w);
    let n = w.size();
    let mut rows: Vec<Word> = Vec::with_capacity(n);
    let mut cols: Vec<Word> = Vec::with_capacity(n);
    for k in 0..n {
        let a0 = Word::from_fn(n, |m| m <= k);
        let want_row = Word::from_fn(n, |m| if m < k { cols[m].contains(k) } else { m == k && z.contains(k) });
        let want_col = Word::from_fn(n, |m| if m < k { rows[m].contains(k) } else { m == k && z.contains(k) });
        rows.push(separating_word(&l, &a0, &want_row)?.word);
        cols.push(separating_word(&l, &a0, &want_col)?.word);
    }
    let c = Crossword::from_rows(rows)?;
    assert_eq!(c.cols(), cols, "columns must agree with the chosen words");
    assert_eq!(c.diagonal(), *z);
    Ok(c)
}
