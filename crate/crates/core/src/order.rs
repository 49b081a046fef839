use crate::error::{Error, Result};
use crate::word::Word;

/// A reflexive, transitive relation on `{0, .., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preorder {
    // above[a] = { b | a ≼ b }
    above: Vec<Word>,
}

impl Preorder {
    /// Validates a relation given as a matrix, `rel[a][b] = (a ≼ b)`.
    pub fn from_matrix(rel: &[Vec<bool>]) -> Result<Self> {
        let n = rel.len();
        if let Some(r) = rel.iter().find(|r| r.len() != n) {
            return Err(Error::GroundMismatch { expected: n, found: r.len() });
        }
        for (a, row) in rel.iter().enumerate() {
            if !row[a] {
                return Err(Error::NotPreorder(format!("{a} is not related to itself")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if !rel[a][b] {
                    continue;
                }
                for c in 0..n {
                    if rel[b][c] && !rel[a][c] {
                        return Err(Error::NotPreorder(format!("{a} ≼ {b} ≼ {c} but not {a} ≼ {c}")));
                    }
                }
            }
        }
        let above = rel.iter().map(|row| Word::from_fn(n, |b| row[b])).collect();
        Ok(Preorder { above })
    }

    /// Reflexive-transitive closure of the given pairs `(a, b)` meaning `a ≼ b`.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut above: Vec<Word> = (0..n).map(|a| Word::from_indices(n, [a])).collect::<Result<_>>()?;
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::IndexOutOfRange { index: a.max(b), size: n });
            }
            above[a].insert(b);
        }
        // Warshall
        for k in 0..n {
            for a in 0..n {
                if above[a].contains(k) {
                    let via = above[k].clone();
                    above[a] = above[a].join(&via);
                }
            }
        }
        Ok(Preorder { above })
    }

    /// Trusts the caller that `above` is reflexive and transitive.
    pub(crate) fn from_above_unchecked(above: Vec<Word>) -> Self {
        Preorder { above }
    }

    /// The chain `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Self {
        Preorder { above: (0..n).map(|a| Word::from_fn(n, |b| a <= b)).collect() }
    }

    /// The discrete order (only reflexive pairs).
    pub fn antichain(n: usize) -> Self {
        Preorder { above: (0..n).map(|a| Word::from_fn(n, |b| a == b)).collect() }
    }

    pub fn size(&self) -> usize {
        self.above.len()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.above[a].contains(b)
    }

    /// `{ b | a ≼ b }`
    pub fn up(&self, a: usize) -> &Word {
        &self.above[a]
    }

    /// `{ b | b ≼ a }`
    pub fn down(&self, a: usize) -> Word {
        Word::from_fn(self.size(), |b| self.leq(b, a))
    }

    /// The opposite preorder.
    pub fn reversed(&self) -> Preorder {
        Preorder { above: (0..self.size()).map(|a| self.down(a)).collect() }
    }

    pub fn is_down_set(&self, x: &Word) -> bool {
        x.iter().all(|b| self.down(b).leq(x))
    }

    pub fn is_up_set(&self, x: &Word) -> bool {
        x.iter().all(|a| self.above[a].leq(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_pairs() {
        let p = Preorder::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p, Preorder::chain(3));
        assert!(p.leq(0, 2));
        assert!(!p.leq(2, 0));
    }

    #[test]
    fn cyclic_pairs_give_preorder() {
        let p = Preorder::from_pairs(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(p.leq(1, 0) && p.leq(0, 1));
    }

    #[test]
    fn rejects_non_transitive_matrix() {
        let rel = vec![
            vec![true, true, false],
            vec![false, true, true],
            vec![false, false, true],
        ];
        assert!(matches!(Preorder::from_matrix(&rel), Err(Error::NotPreorder(_))));
    }

    #[test]
    fn rejects_irreflexive_matrix() {
        let rel = vec![vec![false]];
        assert!(Preorder::from_matrix(&rel).is_err());
    }

    #[test]
    fn down_and_up_sets() {
        let p = Preorder::chain(3);
        let x = Word::from_indices(3, [0, 1]).unwrap();
        assert!(p.is_down_set(&x));
        assert!(!p.is_up_set(&x));
        assert!(p.reversed().is_up_set(&x));
    }
}
