use crate::error::{Error, Result};
use crate::family::Family;
use crate::matrix::Crossword;
use crate::word::Word;

/// Membership report for the rows, columns and diagonal of a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Validation {
    pub rows_ok: bool,
    pub cols_ok: bool,
    pub diag_in_w: bool,
    pub first_bad_row: Option<usize>,
    pub first_bad_col: Option<usize>,
    pub diagonal: Word,
}

impl Validation {
    /// Every row and column lies in the family.
    pub fn is_crossword(&self) -> bool {
        self.rows_ok && self.cols_ok
    }
}

pub fn validate(c: &Crossword, w: &Family) -> Result<Validation> {
    if c.size() != w.size() {
        return Err(Error::GroundMismatch { expected: w.size(), found: c.size() });
    }
    let first_bad_row = (0..c.size()).find(|&a| !w.contains(c.row(a)));
    let first_bad_col = (0..c.size()).find(|&a| !w.contains(&c.col(a)));
    let diagonal = c.diagonal();
    Ok(Validation {
        rows_ok: first_bad_row.is_none(),
        cols_ok: first_bad_col.is_none(),
        diag_in_w: w.contains(&diagonal),
        first_bad_row,
        first_bad_col,
        diagonal,
    })
}
