//! Deciding the comonoid condition and computing the least comonoid
//! containing a set of words.

use std::collections::HashSet;

use crate::crossword::{reachable_diagonals, SolveOutcome};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::lattice::lattice_close_words;
use crate::matrix::Crossword;
use crate::word::{Word, MAX_ENUMERATION};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComonoidCheck {
    Ok,
    /// `∅` or `A` is absent; carries the first missing one.
    MissingBound(Word),
    /// A crossword over the family whose diagonal is not a member.
    Counterexample(Crossword),
    BudgetExceeded,
}

impl ComonoidCheck {
    pub fn is_ok(&self) -> bool {
        matches!(self, ComonoidCheck::Ok)
    }
}

/// Exhaustive check: every crossword over `w` has its diagonal in `w`. Target
/// diagonals outside `w` are searched in canonical order and the first one
/// reached is reported. `budget` bounds each target's search.
pub fn is_comonoid(w: &Family, budget: u64) -> Result<ComonoidCheck> {
    let n = w.size();
    for bound in [Word::empty(n), Word::full(n)] {
        if !w.contains(&bound) {
            return Ok(ComonoidCheck::MissingBound(bound));
        }
    }
    let targets = outside(w)?;
    let outcomes = reachable_diagonals(w, &targets, budget)?;
    let mut exhausted = false;
    for o in outcomes {
        match o {
            SolveOutcome::Found(c) => return Ok(ComonoidCheck::Counterexample(c)),
            SolveOutcome::BudgetExceeded => exhausted = true,
            SolveOutcome::Unsat => {}
        }
    }
    Ok(if exhausted { ComonoidCheck::BudgetExceeded } else { ComonoidCheck::Ok })
}

fn outside(w: &Family) -> Result<Vec<Word>> {
    if w.size() > MAX_ENUMERATION {
        return Err(Error::TooLarge { what: "closure ground", actual: w.size(), limit: MAX_ENUMERATION });
    }
    Ok(w.ground().all_words()?.filter(|z| !w.contains(z)).collect())
}

/// How a word entered the closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rule {
    Seed,
    Bound,
    DisjointUnion(Word, Word),
    Meet(Word, Word),
    Join(Word, Word),
    Diagonal(Crossword),
}

impl Rule {
    pub fn name(&self) -> &'static str {
        match self {
            Rule::Seed => "seed",
            Rule::Bound => "bound",
            Rule::DisjointUnion(..) => "disjoint-union",
            Rule::Meet(..) => "meet",
            Rule::Join(..) => "join",
            Rule::Diagonal(_) => "diagonal",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub word: Word,
    pub rule: Rule,
    /// 0 for seeds and bounds.
    pub round: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Closure {
    pub family: Family,
    pub trace: Vec<TraceEntry>,
    /// The last sweep was exhaustive and added nothing, so the family is a
    /// comonoid.
    pub certified: bool,
    pub rounds: usize,
}

impl Closure {
    pub fn rule_for(&self, w: &Word) -> Option<&Rule> {
        self.trace.iter().find(|e| &e.word == w).map(|e| &e.rule)
    }
}

/// Least comonoid containing `s`. Each round first adds unions of disjoint
/// pairs, then closes under meet and join, then runs a full diagonal sweep;
/// rounds repeat until a sweep adds nothing.
pub fn close(s: &Family, budget: u64) -> Result<Closure> {
    let n = s.size();
    let ground = s.ground().clone();
    let mut present: HashSet<Word> = HashSet::new();
    let mut trace = Vec::new();
    for w in s.iter() {
        present.insert(w.clone());
        trace.push(TraceEntry { word: w.clone(), rule: Rule::Seed, round: 0 });
    }
    for b in [Word::empty(n), Word::full(n)] {
        if present.insert(b.clone()) {
            trace.push(TraceEntry { word: b, rule: Rule::Bound, round: 0 });
        }
    }

    let mut round = 0;
    loop {
        round += 1;
        let current: Vec<Word> = trace.iter().map(|e| e.word.clone()).collect();
        for (i, x) in current.iter().enumerate() {
            for y in &current[i + 1..] {
                if x.is_disjoint(y) {
                    let u = x.join(y);
                    if present.insert(u.clone()) {
                        trace.push(TraceEntry { word: u, rule: Rule::DisjointUnion(x.clone(), y.clone()), round });
                    }
                }
            }
        }

        let seeds: Vec<Word> = trace.iter().map(|e| e.word.clone()).collect();
        lattice_close_words(seeds, |z, x, y| {
            if present.insert(z.clone()) {
                let rule = if *z == x.meet(y) { Rule::Meet(x.clone(), y.clone()) } else { Rule::Join(x.clone(), y.clone()) };
                trace.push(TraceEntry { word: z.clone(), rule, round });
            }
        });

        let family = Family::canonicalize(ground.clone(), present.iter().cloned())?;
        let targets = outside(&family)?;
        let outcomes = reachable_diagonals(&family, &targets, budget)?;
        let mut complete = true;
        let mut added = false;
        for (z, o) in targets.into_iter().zip(outcomes) {
            match o {
                SolveOutcome::Found(c) => {
                    present.insert(z.clone());
                    trace.push(TraceEntry { word: z, rule: Rule::Diagonal(c), round });
                    added = true;
                }
                SolveOutcome::BudgetExceeded => complete = false,
                SolveOutcome::Unsat => {}
            }
        }
        if !added {
            return Ok(Closure { family, trace, certified: complete, rounds: round });
        }
    }
}
