use crate::error::{Error, Result};
use crate::family::Family;
use crate::word::Word;

/// Largest family accepted by the freeness checks (they enumerate all
/// disjoint pairs of subfamilies).
pub const MAX_FREENESS_FAMILY: usize = 16;

/// A relation `⋁ joinands ≥ ⋀ meetands` between disjoint subfamilies,
/// identified by their indices in the family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub joinands: Vec<usize>,
    pub meetands: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Freeness {
    Free,
    Relation(Relation),
}

impl Freeness {
    pub fn is_free(&self) -> bool {
        matches!(self, Freeness::Free)
    }
}

/// True when no join of one nonempty subfamily majorizes the meet of a
/// disjoint nonempty subfamily. On failure the reported relation is the one
/// with the fewest words, ties broken by the joinand and then the meetand
/// index sets read as bitmasks.
pub fn is_free_family(s: &Family) -> Result<Freeness> {
    search(s, |_| true)
}

/// The weakened freeness condition: no relation `⋁ T ≥ ⋀ S` (with `T`, `S`
/// disjoint) holds whose meetands lie, all but at most one, inside a single
/// block. `blocks` partitions the indices `0..s.len()`.
pub fn partitioned_freeness(s: &Family, blocks: &[Vec<usize>]) -> Result<Freeness> {
    let k = s.len();
    let mut owner = vec![usize::MAX; k];
    for (bi, block) in blocks.iter().enumerate() {
        for &i in block {
            if i >= k {
                return Err(Error::NotPartition(format!("index {i} is not a family member")));
            }
            if owner[i] != usize::MAX {
                return Err(Error::NotPartition(format!("index {i} appears in two blocks")));
            }
            owner[i] = bi;
        }
    }
    if let Some(i) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(Error::NotPartition(format!("index {i} is in no block")));
    }
    let block_masks: Vec<u32> = blocks.iter().map(|b| b.iter().fold(0u32, |m, &i| m | 1 << i)).collect();
    search(s, |meet_mask| block_masks.iter().any(|&b| (meet_mask & !b).count_ones() <= 1))
}

fn search(s: &Family, counts: impl Fn(u32) -> bool) -> Result<Freeness> {
    let k = s.len();
    if k > MAX_FREENESS_FAMILY {
        return Err(Error::TooLarge { what: "freeness family", actual: k, limit: MAX_FREENESS_FAMILY });
    }
    let n = s.size();
    let words = s.words();
    let total = 1usize << k;
    // joins[m] and meets[m] for every index mask m
    let mut joins = vec![Word::empty(n); total];
    let mut meets = vec![Word::full(n); total];
    for m in 1..total {
        let low = m.trailing_zeros() as usize;
        let rest = m & (m - 1);
        joins[m] = joins[rest].join(&words[low]);
        meets[m] = meets[rest].meet(&words[low]);
    }
    let all = (total - 1) as u32;
    let mut best: Option<(u32, u32, u32)> = None;
    for j in 1..=all {
        let free = all & !j;
        let mut kmask = free;
        while kmask != 0 {
            let key = (j.count_ones() + kmask.count_ones(), j, kmask);
            if best.is_none_or(|b| (key.0, key.1, key.2) < b)
                && counts(kmask)
                && meets[kmask as usize].leq(&joins[j as usize])
            {
                best = Some(key);
            }
            kmask = (kmask - 1) & free;
        }
    }
    Ok(match best {
        None => Freeness::Free,
        Some((_, j, kmask)) => Freeness::Relation(Relation { joinands: bits(j), meetands: bits(kmask) }),
    })
}

fn bits(m: u32) -> Vec<usize> {
    (0..32).filter(|i| m >> i & 1 == 1).collect()
}
