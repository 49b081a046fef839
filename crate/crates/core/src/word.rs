//! Ground sets and words.
//!
//! A word is a subset of a finite ground set `{0, .., n-1}` stored as a bit
//! vector. Bit `k` is the membership of element `k`. The canonical order on
//! words reads the bit vector as an unsigned integer with element 0 as the
//! least significant bit.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

const BITS: usize = 64;

/// A finite ground set. Elements are addressed by index; labels are only used
/// for presentation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroundSet {
    size: usize,
    labels: Option<Vec<String>>,
}

impl GroundSet {
    pub fn new(size: usize) -> Self {
        GroundSet { size, labels: None }
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidLabels(format!("duplicate label {l:?}")));
            }
        }
        Ok(GroundSet { size: labels.len(), labels: Some(labels) })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of element `a`, falling back to its index.
    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn empty_word(&self) -> Word {
        Word::empty(self.size)
    }

    pub fn full_word(&self) -> Word {
        Word::full(self.size)
    }

    /// Every subset of the ground set in canonical order.
    pub fn all_words(&self) -> Result<impl Iterator<Item = Word>> {
        Word::enumerate(self.size)
    }
}

/// Largest ground set whose power set may be enumerated.
pub const MAX_ENUMERATION: usize = 24;

/// A subset of a ground set of fixed size.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    len: usize,
    blocks: SmallVec<[u64; 2]>,
}

impl Word {
    pub fn empty(len: usize) -> Self {
        Word { len, blocks: SmallVec::from_elem(0, len.div_ceil(BITS)) }
    }

    pub fn full(len: usize) -> Self {
        let mut w = Word { len, blocks: SmallVec::from_elem(!0, len.div_ceil(BITS)) };
        w.trim();
        w
    }

    /// Word over `len` elements whose members are given by index.
    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Result<Self> {
        let mut w = Word::empty(len);
        for i in indices {
            if i >= len {
                return Err(Error::IndexOutOfRange { index: i, size: len });
            }
            w.insert(i);
        }
        Ok(w)
    }

    /// Word from the low `len` bits of `bits` (`len <= 64`).
    pub fn from_u64(len: usize, bits: u64) -> Self {
        assert!(len <= BITS, "from_u64 needs len <= 64");
        let mut w = Word::empty(len);
        if len > 0 {
            w.blocks[0] = bits;
        }
        w.trim();
        w
    }

    /// The word as an integer when it fits into 64 bits.
    pub fn as_u64(&self) -> Option<u64> {
        match self.blocks.len() {
            0 => Some(0),
            1 => Some(self.blocks[0]),
            _ => None,
        }
    }

    pub fn from_fn(len: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut w = Word::empty(len);
        for i in 0..len {
            if f(i) {
                w.insert(i);
            }
        }
        w
    }

    /// Parses a bitstring whose leftmost character is element 0.
    pub fn parse_bits(s: &str) -> Option<Self> {
        let mut w = Word::empty(s.chars().count());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => w.insert(i),
                _ => return None,
            }
        }
        Some(w)
    }

    /// Bitstring with element 0 leftmost.
    pub fn to_bits(&self) -> String {
        (0..self.len).map(|i| if self.contains(i) { '1' } else { '0' }).collect()
    }

    /// All words of length `len` in canonical order.
    pub fn enumerate(len: usize) -> Result<impl Iterator<Item = Word>> {
        if len > MAX_ENUMERATION {
            return Err(Error::TooLarge { what: "power set enumeration", actual: len, limit: MAX_ENUMERATION });
        }
        Ok((0..1u64 << len).map(move |bits| Word::from_u64(len, bits)))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.blocks[i / BITS] >> (i % BITS) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "index {i} out of range {}", self.len);
        self.blocks[i / BITS] |= 1 << (i % BITS);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.len, "index {i} out of range {}", self.len);
        self.blocks[i / BITS] &= !(1 << (i % BITS));
    }

    pub fn set(&mut self, i: usize, value: bool) {
        if value {
            self.insert(i)
        } else {
            self.remove(i)
        }
    }

    pub fn count(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn is_full(&self) -> bool {
        *self == Word::full(self.len)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(bi, &block)| {
            let mut b = block;
            std::iter::from_fn(move || {
                if b == 0 {
                    return None;
                }
                let t = b.trailing_zeros() as usize;
                b &= b - 1;
                Some(bi * BITS + t)
            })
        })
    }

    /// Least member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    fn check_len(&self, other: &Word) {
        assert_eq!(self.len, other.len, "words over different ground sets");
    }

    fn zip_with(&self, other: &Word, f: impl Fn(u64, u64) -> u64) -> Word {
        self.check_len(other);
        let mut w = Word {
            len: self.len,
            blocks: self.blocks.iter().zip(&other.blocks).map(|(&a, &b)| f(a, b)).collect(),
        };
        w.trim();
        w
    }

    /// Intersection. Panics when the lengths differ; see
    /// [`crate::lattice::word_algebra`] for the checked form.
    pub fn meet(&self, other: &Word) -> Word {
        self.zip_with(other, |a, b| a & b)
    }

    /// Union.
    pub fn join(&self, other: &Word) -> Word {
        self.zip_with(other, |a, b| a | b)
    }

    /// Relative complement `self - other`.
    pub fn minus(&self, other: &Word) -> Word {
        self.zip_with(other, |a, b| a & !b)
    }

    /// Complement within the ground set.
    pub fn negate(&self) -> Word {
        let mut w = Word { len: self.len, blocks: self.blocks.iter().map(|b| !b).collect() };
        w.trim();
        w
    }

    /// Inclusion test.
    pub fn leq(&self, other: &Word) -> bool {
        self.check_len(other);
        self.blocks.iter().zip(&other.blocks).all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Word) -> bool {
        self.check_len(other);
        self.blocks.iter().zip(&other.blocks).all(|(&a, &b)| a & b == 0)
    }

    fn trim(&mut self) {
        let r = self.len % BITS;
        if r != 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= (1u64 << r) - 1;
            }
        }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.blocks.iter().rev().cmp(other.blocks.iter().rev()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bits())
    }
}
