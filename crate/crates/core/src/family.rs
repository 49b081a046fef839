use std::fmt;

use crate::error::{Error, Result};
use crate::word::{GroundSet, Word};

/// A duplicate-free set of words over one ground set, kept in canonical
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Family {
    ground: GroundSet,
    words: Vec<Word>,
}

impl Family {
    /// Sorts and deduplicates `words`. Every word must have the ground set's
    /// length.
    pub fn canonicalize<I>(ground: GroundSet, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = Word>,
    {
        let mut v: Vec<Word> = Vec::new();
        for w in words {
            if w.len() != ground.size() {
                return Err(Error::GroundMismatch { expected: ground.size(), found: w.len() });
            }
            v.push(w);
        }
        v.sort_unstable();
        v.dedup();
        Ok(Family { ground, words: v })
    }

    /// Family over an unlabelled ground set of `size` elements.
    pub fn from_words<I>(size: usize, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = Word>,
    {
        Self::canonicalize(GroundSet::new(size), words)
    }

    /// Builds a family from lists of member indices.
    pub fn from_index_sets(size: usize, sets: &[&[usize]]) -> Result<Self> {
        let words = sets
            .iter()
            .map(|s| Word::from_indices(size, s.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_words(size, words)
    }

    pub fn empty(ground: GroundSet) -> Self {
        Family { ground, words: Vec::new() }
    }

    /// The full power set.
    pub fn power_set(size: usize) -> Result<Self> {
        Ok(Family { ground: GroundSet::new(size), words: Word::enumerate(size)?.collect() })
    }

    /// Internal constructor for already-sorted, deduplicated words.
    pub(crate) fn from_sorted(ground: GroundSet, words: Vec<Word>) -> Self {
        debug_assert!(words.windows(2).all(|p| p[0] < p[1]));
        Family { ground, words }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn size(&self) -> usize {
        self.ground.size()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Word> {
        self.words.iter()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.index_of(w).is_some()
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.words.binary_search(w).ok()
    }

    pub fn contains_bounds(&self) -> bool {
        self.contains(&self.ground.empty_word()) && self.contains(&self.ground.full_word())
    }

    pub fn is_subset(&self, other: &Family) -> bool {
        self.words.iter().all(|w| other.contains(w))
    }

    /// Family with `extra` words added.
    pub fn with<I: IntoIterator<Item = Word>>(&self, extra: I) -> Result<Family> {
        Family::canonicalize(self.ground.clone(), self.words.iter().cloned().chain(extra))
    }

    /// Whether the power set has been reached.
    pub fn is_power_set(&self) -> bool {
        self.size() < usize::BITS as usize && self.words.len() == 1usize << self.size()
    }

    pub(crate) fn check_word(&self, w: &Word) -> Result<()> {
        if w.len() != self.size() {
            return Err(Error::GroundMismatch { expected: self.size(), found: w.len() });
        }
        Ok(())
    }

    pub(crate) fn check_same_ground(&self, other: &Family) -> Result<()> {
        if other.size() != self.size() {
            return Err(Error::GroundMismatch { expected: self.size(), found: other.size() });
        }
        Ok(())
    }
}

impl<'a> IntoIterator for &'a Family {
    type Item = &'a Word;
    type IntoIter = std::slice::Iter<'a, Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.words.iter()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}
