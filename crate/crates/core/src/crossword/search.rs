//! Exhaustive search for crosswords over a family.
//!
//! Rows are assigned top-down from the family in canonical order, keeping
//! only rows whose diagonal bit matches the target. For every column the
//! search keeps the set of family words still consistent with the rows
//! filled so far (a bitset over family indices, which plays the role of a
//! prefix trie over the columns). A row is admissible only if each of its
//! bits leaves the corresponding column set nonempty.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::matrix::Crossword;
use crate::word::{Word, MAX_ENUMERATION};

/// Default node budget for one search.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Largest ground set the search accepts.
pub const MAX_SEARCH_GROUND: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    /// The canonically first crossword with the requested diagonal.
    Found(Crossword),
    /// The search was exhaustive and found nothing.
    Unsat,
    /// The node budget ran out before the search finished.
    BudgetExceeded,
}

/// Finds a crossword over `w` whose diagonal is `z`. One node is one row
/// placement.
pub fn solve_diagonal(w: &Family, z: &Word, budget: u64) -> Result<SolveOutcome> {
    w.check_word(z)?;
    let p = Prepared::new(w)?;
    Ok(p.solve(z, budget))
}

/// Every diagonal reachable by a crossword over a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalStep {
    pub family: Family,
    /// False when some target exhausted its budget; the family is then a
    /// lower bound.
    pub complete: bool,
}

/// The diagonals of all crosswords whose rows and columns lie in `w`. Each
/// target diagonal gets its own search with the given budget.
pub fn diagonal_step(w: &Family, budget: u64) -> Result<DiagonalStep> {
    let targets: Vec<Word> = w.ground().all_words()?.collect();
    let outcomes = reachable_diagonals(w, &targets, budget)?;
    let mut complete = true;
    let mut words = Vec::new();
    for (z, o) in targets.into_iter().zip(outcomes) {
        match o {
            SolveOutcome::Found(_) => words.push(z),
            SolveOutcome::Unsat => {}
            SolveOutcome::BudgetExceeded => complete = false,
        }
    }
    Ok(DiagonalStep { family: Family::from_sorted(w.ground().clone(), words), complete })
}

/// Runs the search for every target in parallel; results come back in
/// target order. Members of a family containing `∅` and `A` are reached by
/// `z × A` without searching.
pub(crate) fn reachable_diagonals(w: &Family, targets: &[Word], budget: u64) -> Result<Vec<SolveOutcome>> {
    if w.size() > MAX_ENUMERATION {
        return Err(Error::TooLarge { what: "diagonal sweep ground", actual: w.size(), limit: MAX_ENUMERATION });
    }
    for z in targets {
        w.check_word(z)?;
    }
    let p = Prepared::new(w)?;
    let bounded = w.contains_bounds();
    let full = Word::full(w.size());
    Ok(targets
        .par_iter()
        .map(|z| {
            if bounded && w.contains(z) {
                SolveOutcome::Found(Crossword::product(z, &full))
            } else {
                p.solve(z, budget)
            }
        })
        .collect())
}

struct Prepared {
    n: usize,
    words: Vec<u64>,
    /// u64 blocks per family-index bitset
    blocks: usize,
    /// masks[2k + v]: family indices whose bit k equals v
    masks: Vec<Vec<u64>>,
    /// cands[2k + v]: family indices whose bit k equals v, in family order
    cands: Vec<Vec<usize>>,
}

impl Prepared {
    fn new(w: &Family) -> Result<Self> {
        let n = w.size();
        if n > MAX_SEARCH_GROUND {
            return Err(Error::TooLarge { what: "crossword search ground", actual: n, limit: MAX_SEARCH_GROUND });
        }
        let words: Vec<u64> = w.iter().map(|x| x.as_u64().expect("n <= 64")).collect();
        let blocks = words.len().div_ceil(64).max(1);
        let mut masks = vec![vec![0u64; blocks]; 2 * n];
        let mut cands = vec![Vec::new(); 2 * n];
        for (i, &x) in words.iter().enumerate() {
            for k in 0..n {
                let v = (x >> k & 1) as usize;
                masks[2 * k + v][i / 64] |= 1 << (i % 64);
                cands[2 * k + v].push(i);
            }
        }
        Ok(Prepared { n, words, blocks, masks, cands })
    }

    fn solve(&self, z: &Word, budget: u64) -> SolveOutcome {
        let n = self.n;
        let zb = z.as_u64().expect("n <= 64");
        let stride = n * self.blocks;
        let mut cols = vec![0u64; (n + 1) * stride];
        for b in 0..n {
            let v = (zb >> b & 1) as usize;
            cols[b * self.blocks..(b + 1) * self.blocks].copy_from_slice(&self.masks[2 * b + v]);
        }
        let mut state = State { rows: vec![0u64; n], nodes: 0, budget };
        match self.descend(0, zb, &mut cols, &mut state) {
            Step::Found => {
                let rows = state.rows.iter().map(|&r| Word::from_u64(n, r)).collect();
                SolveOutcome::Found(Crossword::from_rows(rows).expect("square"))
            }
            Step::Unsat => SolveOutcome::Unsat,
            Step::Budget => SolveOutcome::BudgetExceeded,
        }
    }

    /// `levels` starts with the column sets for row `k`, followed by scratch
    /// space for the deeper rows.
    fn descend(&self, k: usize, z: u64, levels: &mut [u64], st: &mut State) -> Step {
        let n = self.n;
        if k == n {
            return Step::Found;
        }
        let bl = self.blocks;
        let stride = n * bl;
        let (cur, rest) = levels.split_at_mut(stride);

        let (m0, m1) = (&self.masks[2 * k], &self.masks[2 * k + 1]);
        let mut poss0 = 0u64;
        let mut poss1 = 0u64;
        for b in 0..n {
            let col = &cur[b * bl..(b + 1) * bl];
            if intersects(col, m0) {
                poss0 |= 1 << b;
            }
            if intersects(col, m1) {
                poss1 |= 1 << b;
            }
        }
        let full = if n == 64 { !0 } else { (1u64 << n) - 1 };
        let zk = (z >> k & 1) as usize;
        for &i in &self.cands[2 * k + zk] {
            let row = self.words[i];
            if row & !poss1 != 0 || !row & full & !poss0 != 0 {
                continue;
            }
            st.nodes += 1;
            if st.nodes > st.budget {
                return Step::Budget;
            }
            for b in 0..n {
                let m = if row >> b & 1 == 1 { m1 } else { m0 };
                for q in 0..bl {
                    rest[b * bl + q] = cur[b * bl + q] & m[q];
                }
            }
            st.rows[k] = row;
            match self.descend(k + 1, z, rest, st) {
                Step::Unsat => {}
                other => return other,
            }
        }
        Step::Unsat
    }
}

struct State {
    rows: Vec<u64>,
    nodes: u64,
    budget: u64,
}

enum Step {
    Found,
    Unsat,
    Budget,
}

fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{order_comonoid, Direction};
    use crate::crossword::validate;
    use crate::order::Preorder;

    fn w(len: usize, idx: &[usize]) -> Word {
        Word::from_indices(len, idx.iter().copied()).unwrap()
    }

    #[test]
    fn unreachable_diagonal_on_two_chain() {
        let d = order_comonoid(&Preorder::chain(2), Direction::Down).unwrap();
        assert_eq!(solve_diagonal(&d, &w(2, &[1]), DEFAULT_BUDGET).unwrap(), SolveOutcome::Unsat);
        match solve_diagonal(&d, &w(2, &[0]), DEFAULT_BUDGET).unwrap() {
            SolveOutcome::Found(c) => {
                assert_eq!(c.diagonal(), w(2, &[0]));
                assert!(validate(&c, &d).unwrap().is_crossword());
            }
            other => panic!("expected a crossword, got {other:?}"),
        }
    }

    #[test]
    fn power_set_reaches_everything() {
        let p = Family::power_set(3).unwrap();
        for z in Word::enumerate(3).unwrap() {
            match solve_diagonal(&p, &z, DEFAULT_BUDGET).unwrap() {
                SolveOutcome::Found(c) => assert_eq!(c.diagonal(), z),
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn first_solution_is_canonical() {
        // rows tried in canonical order: row 0 = {0} is the first word with bit 0 set
        let p = Family::power_set(2).unwrap();
        match solve_diagonal(&p, &w(2, &[0]), DEFAULT_BUDGET).unwrap() {
            SolveOutcome::Found(c) => assert_eq!(c, Crossword::from_rows(vec![w(2, &[0]), w(2, &[])]).unwrap()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn diagonal_step_examples() {
        let b = Family::from_index_sets(3, &[&[], &[0, 1, 2]]).unwrap();
        assert_eq!(diagonal_step(&b, DEFAULT_BUDGET).unwrap().family, b);

        let p = Family::power_set(2).unwrap();
        assert_eq!(diagonal_step(&p, DEFAULT_BUDGET).unwrap().family, p);

        let chain = Preorder::chain(3);
        let down = order_comonoid(&chain, Direction::Down).unwrap();
        let up = order_comonoid(&chain, Direction::Up).unwrap();
        let union = down.with(up.words().iter().cloned()).unwrap();
        let step = diagonal_step(&union, DEFAULT_BUDGET).unwrap();
        assert!(step.complete);
        assert!(step.family.contains(&w(3, &[1])));
    }

    #[test]
    fn budget_is_distinct_from_unsat() {
        let p = Family::power_set(3).unwrap();
        let z = w(3, &[1]);
        assert_eq!(solve_diagonal(&p, &z, 0).unwrap(), SolveOutcome::BudgetExceeded);
        assert!(matches!(solve_diagonal(&p, &z, 3).unwrap(), SolveOutcome::Found(_)));
        let singles = Family::from_index_sets(2, &[&[0], &[1]]).unwrap();
        let step = diagonal_step(&singles, 0).unwrap();
        assert!(!step.complete);
        assert!(step.family.is_empty());
    }

    #[test]
    fn empty_ground() {
        let f = Family::power_set(0).unwrap();
        assert!(matches!(solve_diagonal(&f, &Word::empty(0), 10).unwrap(), SolveOutcome::Found(_)));
    }

    #[test]
    fn mismatched_target() {
        let f = Family::power_set(2).unwrap();
        assert!(solve_diagonal(&f, &Word::empty(3), 10).is_err());
    }
}
