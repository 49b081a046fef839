use std::collections::HashSet;
use std::hash::Hash;

use crate::error::{Error, Result};

/// A sunflower inside a set of `j`-tuples: after permuting coordinates by
/// `perm`, every picked tuple is `core ++ tail`, and no entry of a tail
/// occurs in any other picked tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sunflower<T> {
    /// `perm[k]` is the original coordinate placed at position `k`.
    pub perm: Vec<usize>,
    pub split: usize,
    pub core: Vec<T>,
    pub tails: Vec<Vec<T>>,
    /// Indices into the input of the picked tuples, in pick order.
    pub picked: Vec<usize>,
}

/// Finds the largest split `i < j` for which at least `t` tuples agree on
/// some `i` coordinates, then greedily picks tuples with mutually disjoint
/// tails from those agreeing tuples. Coordinate sets are tried in
/// lexicographic order and shared values in order of first occurrence; if
/// the greedy pass stops short of `t`, the next candidate is tried.
pub fn sunflower_extract<T: Clone + Eq + Hash>(tuples: &[Vec<T>], t: usize) -> Result<Sunflower<T>> {
    if t < 2 {
        return Err(Error::InvalidTuples(format!("threshold must be at least 2, got {t}")));
    }
    let j = tuples.first().map(Vec::len).ok_or(Error::EmptyInput("tuple set"))?;
    if j == 0 {
        return Err(Error::InvalidTuples("tuples must be nonempty".into()));
    }
    for (k, tup) in tuples.iter().enumerate() {
        if tup.len() != j {
            return Err(Error::InvalidTuples(format!("tuple {k} has length {}, expected {j}", tup.len())));
        }
        let distinct: HashSet<&T> = tup.iter().collect();
        if distinct.len() != j {
            return Err(Error::InvalidTuples(format!("tuple {k} repeats an entry")));
        }
    }

    for i in (0..j).rev() {
        for coords in combinations(j, i) {
            let rest: Vec<usize> = (0..j).filter(|c| !coords.contains(c)).collect();
            let mut seen: Vec<Vec<T>> = Vec::new();
            for tup in tuples {
                let key: Vec<T> = coords.iter().map(|&c| tup[c].clone()).collect();
                if seen.contains(&key) {
                    continue;
                }
                let agreeing: Vec<usize> =
                    (0..tuples.len()).filter(|&k| coords.iter().zip(&key).all(|(&c, v)| tuples[k][c] == *v)).collect();
                seen.push(key.clone());
                if agreeing.len() < t {
                    continue;
                }
                let mut used: HashSet<&T> = HashSet::new();
                let mut picked = Vec::new();
                for k in agreeing {
                    let tail: Vec<&T> = rest.iter().map(|&c| &tuples[k][c]).collect();
                    if tail.iter().all(|v| !used.contains(v)) {
                        used.extend(tail);
                        picked.push(k);
                        if picked.len() == t {
                            break;
                        }
                    }
                }
                if picked.len() == t {
                    let perm: Vec<usize> = coords.iter().chain(&rest).copied().collect();
                    let tails = picked.iter().map(|&k| rest.iter().map(|&c| tuples[k][c].clone()).collect()).collect();
                    let s = Sunflower { perm, split: i, core: key, tails, picked };
                    check_shape(tuples, &s);
                    return Ok(s);
                }
            }
        }
    }
    Err(Error::NoSunflower { threshold: t })
}

fn check_shape<T: Clone + Eq + Hash>(tuples: &[Vec<T>], s: &Sunflower<T>) {
    for (&k, tail) in s.picked.iter().zip(&s.tails) {
        let permuted: Vec<&T> = s.perm.iter().map(|&c| &tuples[k][c]).collect();
        let expected: Vec<&T> = s.core.iter().chain(tail).collect();
        assert!(permuted == expected, "picked tuple must be core followed by tail");
    }
    let mut all: HashSet<&T> = HashSet::new();
    for tail in &s.tails {
        for v in tail {
            assert!(all.insert(v), "tails must be pairwise disjoint");
            assert!(!s.core.contains(v), "tails must avoid the core");
        }
    }
}

/// `k`-subsets of `{0..n-1}` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}
