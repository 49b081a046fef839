use crate::family::Family;
use crate::lattice::dual_family;
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub t1: bool,
    /// First ordered pair `(a, b)` with no member containing `a` but not `b`.
    pub t1_failure: Option<(usize, usize)>,
    pub discrete: bool,
    pub complement_closed: bool,
}

pub fn classify(w: &Family) -> Classification {
    let t1_failure = first_unseparated(w);
    Classification {
        t1: t1_failure.is_none(),
        t1_failure,
        discrete: w.is_power_set(),
        complement_closed: dual_family(w) == *w,
    }
}

fn first_unseparated(w: &Family) -> Option<(usize, usize)> {
    let n = w.size();
    (0..n).find_map(|a| {
        // elements left out by some member containing a
        let missed = w.iter().filter(|x| x.contains(a)).fold(Word::empty(n), |acc, x| acc.join(&x.negate()));
        (0..n).find(|&b| b != a && !missed.contains(b)).map(|b| (a, b))
    })
}
