use crate::error::{Error, Result};
use crate::family::Family;
use crate::word::{GroundSet, Word};

/// The family of complements.
pub fn dual_family(w: &Family) -> Family {
    Family::canonicalize(w.ground().clone(), w.iter().map(Word::negate))
        .expect("complements keep the ground set")
}

/// Words present in every family of the list.
pub fn intersect_families(families: &[Family]) -> Result<Family> {
    let (first, rest) = families.split_first().ok_or(Error::EmptyInput("family list"))?;
    for f in rest {
        first.check_same_ground(f)?;
    }
    let words = first.iter().filter(|w| rest.iter().all(|f| f.contains(w))).cloned().collect();
    Ok(Family::from_sorted(first.ground().clone(), words))
}

/// `{ w ⊆ A' | f⁻¹(w) ∈ W }` for a map `f: A → A'` given as `f[a]`.
///
/// A preimage is a union of fibres, so the result is the set of images of
/// the saturated members of `W`, each extended by any subset of `A'` outside
/// the image of `f`.
pub fn pullback_family(f: &[usize], target: &GroundSet, w: &Family) -> Result<Family> {
    if f.len() != w.size() {
        return Err(Error::GroundMismatch { expected: w.size(), found: f.len() });
    }
    let m = target.size();
    if let Some(&bad) = f.iter().find(|&&b| b >= m) {
        return Err(Error::IndexOutOfRange { index: bad, size: m });
    }
    let image = Word::from_indices(m, f.iter().copied())?;
    let outside: Vec<usize> = image.negate().iter().collect();
    if outside.len() > crate::word::MAX_ENUMERATION {
        return Err(Error::TooLarge {
            what: "elements outside the image",
            actual: outside.len(),
            limit: crate::word::MAX_ENUMERATION,
        });
    }
    let mut out = Vec::new();
    for x in w {
        let img = Word::from_indices(m, x.iter().map(|a| f[a]))?;
        let preimage = Word::from_fn(w.size(), |a| img.contains(f[a]));
        if preimage != *x {
            continue;
        }
        for mask in 0u64..1 << outside.len() {
            let mut y = img.clone();
            for (k, &b) in outside.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    y.insert(b);
                }
            }
            out.push(y);
        }
    }
    Family::canonicalize(target.clone(), out)
}

/// Result of [`interval_family`]: the new family together with the original
/// index of each new element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub elements: Vec<usize>,
    pub family: Family,
}

/// `{ x - u | x ∈ W, u ≤ x ≤ v }` on the ground set `v - u`, re-indexed in
/// increasing order of the original elements.
pub fn interval_family(w: &Family, u: &Word, v: &Word) -> Result<Interval> {
    w.check_word(u)?;
    w.check_word(v)?;
    if !w.contains(u) {
        return Err(Error::NotMember(u.to_bits()));
    }
    if !w.contains(v) {
        return Err(Error::NotMember(v.to_bits()));
    }
    if !u.leq(v) {
        return Err(Error::NotOrdered { lower: u.to_bits(), upper: v.to_bits() });
    }
    let elements: Vec<usize> = v.minus(u).iter().collect();
    let ground = match w.ground().labels() {
        Some(_) => GroundSet::with_labels(elements.iter().map(|&a| w.ground().label(a)).collect())?,
        None => GroundSet::new(elements.len()),
    };
    let words = w
        .iter()
        .filter(|x| u.leq(x) && x.leq(v))
        .map(|x| Word::from_fn(elements.len(), |k| x.contains(elements[k])));
    let family = Family::canonicalize(ground, words)?;
    Ok(Interval { elements, family })
}
