use std::fmt;

use crate::error::{Error, Result};
use crate::word::Word;

/// Which slice of a crossword to read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Row,
    Col,
}

/// A square 0/1 matrix indexed by `A x A`.
///
/// Row `a` is `{b | (a,b) in C}` and column `a` is `{b | (b,a) in C}`
/// (matrix convention, not cartesian).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Crossword {
    rows: Vec<Word>,
}

impl Crossword {
    pub fn zeros(n: usize) -> Self {
        Crossword { rows: vec![Word::empty(n); n] }
    }

    pub fn ones(n: usize) -> Self {
        Crossword { rows: vec![Word::full(n); n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |a, b| a == b)
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        Crossword { rows: (0..n).map(|a| Word::from_fn(n, |b| f(a, b))).collect() }
    }

    /// Builds a crossword from its rows; there must be as many rows as each
    /// row has bits.
    pub fn from_rows(rows: Vec<Word>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::GroundMismatch { expected: n, found: bad.len() });
        }
        Ok(Crossword { rows })
    }

    /// `x × y`: cell `(a,b)` is set iff `a ∈ x` and `b ∈ y`.
    pub fn product(x: &Word, y: &Word) -> Self {
        assert_eq!(x.len(), y.len(), "words over different ground sets");
        let n = x.len();
        let zero = Word::empty(n);
        Crossword { rows: (0..n).map(|a| if x.contains(a) { y.clone() } else { zero.clone() }).collect() }
    }

    /// Cellwise union.
    pub fn union(&self, other: &Crossword) -> Crossword {
        assert_eq!(self.size(), other.size());
        Crossword { rows: self.rows.iter().zip(&other.rows).map(|(a, b)| a.join(b)).collect() }
    }

    /// Cellwise complement.
    pub fn complement(&self) -> Crossword {
        Crossword { rows: self.rows.iter().map(Word::negate).collect() }
    }

    pub fn transpose(&self) -> Crossword {
        let n = self.size();
        Self::from_fn(n, |a, b| self.get(b, a))
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }

    pub fn set(&mut self, a: usize, b: usize, value: bool) {
        self.rows[a].set(b, value);
    }

    pub fn rows(&self) -> &[Word] {
        &self.rows
    }

    pub fn row(&self, a: usize) -> &Word {
        &self.rows[a]
    }

    pub fn col(&self, a: usize) -> Word {
        Word::from_fn(self.size(), |b| self.get(b, a))
    }

    pub fn cols(&self) -> Vec<Word> {
        (0..self.size()).map(|a| self.col(a)).collect()
    }

    /// Row or column `a`.
    pub fn slice(&self, a: usize, axis: Axis) -> Result<Word> {
        if a >= self.size() {
            return Err(Error::IndexOutOfRange { index: a, size: self.size() });
        }
        Ok(match axis {
            Axis::Row => self.rows[a].clone(),
            Axis::Col => self.col(a),
        })
    }

    /// The diagonal word `{b | (b,b) in C}`.
    pub fn diagonal(&self) -> Word {
        Word::from_fn(self.size(), |a| self.get(a, a))
    }
}

impl fmt::Display for Crossword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}
