use crate::analysis::classify;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::word::Word;

/// Strongly indecomposable members above a base, grouped into classes of
/// pairwise non-disjoint elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Indecomposables {
    pub base: Word,
    pub elements: Vec<Word>,
    pub classes: Vec<Vec<Word>>,
}

/// Works in the meet-semilattice `{y ∈ W | y ≥ base}` with `base` as zero;
/// two elements are disjoint when their meet is `base`. An element is
/// strongly indecomposable when no two disjoint nonzero elements lie
/// strictly below it.
pub fn strongly_indecomposable(w: &Family, base: &Word) -> Result<Indecomposables> {
    w.check_word(base)?;
    if !w.contains(base) {
        return Err(Error::NotMember(base.to_bits()));
    }
    let above: Vec<&Word> = w.iter().filter(|y| base.leq(y)).collect();
    for (i, x) in above.iter().enumerate() {
        for y in &above[i + 1..] {
            if !w.contains(&x.meet(y)) {
                return Err(Error::NotMeetClosed(format!("{x} ∧ {y}")));
            }
        }
    }
    let disjoint = |x: &Word, y: &Word| x.meet(y) == *base;
    let nonzero: Vec<&Word> = above.iter().copied().filter(|y| *y != base).collect();
    let elements: Vec<Word> = nonzero
        .iter()
        .filter(|x| {
            let below: Vec<&&Word> = nonzero.iter().filter(|u| u.leq(x) && u != x).collect();
            !below.iter().enumerate().any(|(i, u)| below[i + 1..].iter().any(|v| disjoint(u, v)))
        })
        .map(|x| (*x).clone())
        .collect();

    let mut classes: Vec<Vec<Word>> = Vec::new();
    for x in &elements {
        match classes.iter_mut().find(|c| !disjoint(&c[0], x)) {
            Some(c) => c.push(x.clone()),
            None => classes.push(vec![x.clone()]),
        }
    }
    for (i, c) in classes.iter().enumerate() {
        assert!(
            c.iter().all(|x| c.iter().all(|y| !disjoint(x, y))),
            "non-disjointness must be transitive on strongly indecomposable elements"
        );
        assert!(
            classes[i + 1..].iter().all(|d| d.iter().all(|y| c.iter().all(|x| disjoint(x, y)))),
            "distinct classes must be disjoint"
        );
    }
    Ok(Indecomposables { base: base.clone(), elements, classes })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominatedClass {
    pub members: Vec<Word>,
    /// Meet of the members.
    pub meet: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dominated {
    pub element: usize,
    pub classes: Vec<DominatedClass>,
    /// The family is T1, so each meet was checked to be `∅` or `{a}`.
    pub dichotomy_checked: bool,
}

/// Classes `E` (relative to `∅`) such that every member containing `a`
/// majorizes some member of `E`.
pub fn dominated_classes(a: usize, w: &Family) -> Result<Dominated> {
    let n = w.size();
    if a >= n {
        return Err(Error::IndexOutOfRange { index: a, size: n });
    }
    let si = strongly_indecomposable(w, &Word::empty(n))?;
    let containing: Vec<&Word> = w.iter().filter(|x| x.contains(a)).collect();
    let classes: Vec<DominatedClass> = si
        .classes
        .iter()
        .filter(|e| containing.iter().all(|x| e.iter().any(|m| m.leq(x))))
        .map(|e| DominatedClass {
            members: e.clone(),
            meet: e.iter().fold(Word::full(n), |acc, m| acc.meet(m)),
        })
        .collect();
    let t1 = classify(w).t1;
    if t1 {
        let single = Word::from_indices(n, [a])?;
        for c in &classes {
            assert!(c.meet.is_empty() || c.meet == single, "meet of a dominated class must be empty or {{a}}");
            if c.meet == single {
                let with_a: Vec<Word> = si.elements.iter().filter(|x| x.contains(a)).cloned().collect();
                assert_eq!(c.members, with_a, "class meeting in {{a}} is every indecomposable containing a");
                assert_eq!(classes.len(), 1, "a class meeting in {{a}} is the only one a dominates");
            }
        }
    }
    Ok(Dominated { element: a, classes, dichotomy_checked: t1 })
}
