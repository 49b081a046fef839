use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::word::{GroundSet, Word};

/// The chain `0 < 1 < .. < n-1 < ∞` with every down-set except `{0..n-1}`.
pub fn omega_infty(n: usize) -> Result<Family> {
    if n == 0 {
        return Err(Error::InvalidParams("omega_infty needs n >= 1".into()));
    }
    let labels = (0..n).map(|i| i.to_string()).chain(["∞".to_string()]).collect();
    let ground = GroundSet::with_labels(labels)?;
    let words = (0..n).map(|k| Word::from_fn(n + 1, |a| a < k)).chain([Word::full(n + 1)]);
    Family::canonicalize(ground, words)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    EOnly,
    WithComplements,
}

fn set_label(bits: usize, width: usize) -> String {
    let inner: Vec<String> = (0..width).filter(|i| bits >> i & 1 == 1).map(|i| i.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// Ground set: the `2^m` subsets of `{0..m-1}`, point `p` being the subset
/// with bit `i` of `p` set for each member `i`. Words: `e_i`, the points
/// containing `i`, and optionally their complements.
pub fn coordinate_family(m: usize, flavor: Flavor) -> Result<Family> {
    if !(1..=5).contains(&m) {
        return Err(Error::InvalidParams(format!("coordinate family needs 1 <= m <= 5, got {m}")));
    }
    let points = 1usize << m;
    let ground = GroundSet::with_labels((0..points).map(|p| set_label(p, m)).collect())?;
    let mut words = Vec::new();
    for i in 0..m {
        let e = Word::from_fn(points, |p| p >> i & 1 == 1);
        if flavor == Flavor::WithComplements {
            words.push(e.negate());
        }
        words.push(e);
    }
    Family::canonicalize(ground, words)
}

/// Ground set: the antichain members. Words: for each `n` in some member,
/// the members containing `n`, skipping `∅` and the whole ground.
pub fn antichain_family(members: &[Vec<usize>]) -> Result<Family> {
    let sets: Vec<BTreeSet<usize>> = members.iter().map(|m| m.iter().copied().collect()).collect();
    for (i, a) in sets.iter().enumerate() {
        for (j, b) in sets.iter().enumerate() {
            if i != j && a.is_subset(b) {
                return Err(Error::NotAntichain(format!("member {i} is contained in member {j}")));
            }
        }
    }
    let labels = sets
        .iter()
        .map(|s| format!("{{{}}}", s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    let ground = GroundSet::with_labels(labels)?;
    let universe: BTreeSet<usize> = sets.iter().flatten().copied().collect();
    let size = sets.len();
    let words = universe
        .into_iter()
        .map(|n| Word::from_fn(size, |a| sets[a].contains(&n)))
        .filter(|w| !w.is_empty() && !w.is_full());
    Family::canonicalize(ground, words)
}

/// Chains on an `r × c` grid of points, point `(row, col)` at index
/// `row * c + col`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridChains {
    pub rows: usize,
    pub cols: usize,
    /// `x_m` = points with row `>= m`, for `m = 0..=r`.
    pub xs: Vec<Word>,
    /// `y_n` = points with col `< n`, for `n = 0..=c`.
    pub ys: Vec<Word>,
}

impl GridChains {
    pub fn ground(&self) -> GroundSet {
        let labels = (0..self.rows * self.cols).map(|p| format!("({},{})", p / self.cols, p % self.cols)).collect();
        GroundSet::with_labels(labels).expect("grid labels are distinct")
    }

    pub fn point(&self, row: usize, col: usize) -> usize {
        row * self.cols + col
    }
}

pub fn grid_chains(r: usize, c: usize) -> Result<GridChains> {
    if r < 2 || c < 2 {
        return Err(Error::InvalidParams(format!("grid needs at least 2 rows and 2 columns, got {r}x{c}")));
    }
    let size = r * c;
    let xs = (0..=r).map(|m| Word::from_fn(size, |p| p / c >= m)).collect();
    let ys = (0..=c).map(|n| Word::from_fn(size, |p| p % c < n)).collect();
    Ok(GridChains { rows: r, cols: c, xs, ys })
}
