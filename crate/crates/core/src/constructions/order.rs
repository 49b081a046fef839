use crate::error::Result;
use crate::family::Family;
use crate::order::Preorder;
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Down,
    Up,
}

/// All down-sets (or up-sets) of a preorder.
pub fn order_comonoid(p: &Preorder, direction: Direction) -> Result<Family> {
    let p = match direction {
        Direction::Down => p.clone(),
        Direction::Up => p.reversed(),
    };
    let n = p.size();
    let mut out = Vec::new();
    extend(&p, 0, Word::empty(n), Word::empty(n), &mut out);
    Family::from_words(n, out)
}

// Elements below `k` are decided; `inside` and `outside` carry the forced
// memberships.
fn extend(p: &Preorder, k: usize, inside: Word, outside: Word, out: &mut Vec<Word>) {
    if k == p.size() {
        out.push(inside);
        return;
    }
    if inside.contains(k) || outside.contains(k) {
        extend(p, k + 1, inside, outside, out);
        return;
    }
    let with = inside.join(&p.down(k));
    if with.is_disjoint(&outside) {
        extend(p, k + 1, with, outside.clone(), out);
    }
    let without = outside.join(p.up(k));
    if without.is_disjoint(&inside) {
        extend(p, k + 1, inside, without, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_down_sets() {
        let f = order_comonoid(&Preorder::chain(3), Direction::Down).unwrap();
        assert_eq!(f, Family::from_index_sets(3, &[&[], &[0], &[0, 1], &[0, 1, 2]]).unwrap());
        let g = order_comonoid(&Preorder::chain(3), Direction::Up).unwrap();
        assert_eq!(g, Family::from_index_sets(3, &[&[], &[2], &[1, 2], &[0, 1, 2]]).unwrap());
    }

    #[test]
    fn antichain_gives_power_set() {
        assert!(order_comonoid(&Preorder::antichain(4), Direction::Down).unwrap().is_power_set());
    }

    #[test]
    fn matches_brute_force() {
        let p = Preorder::from_pairs(5, &[(0, 2), (1, 2), (2, 3), (4, 3), (3, 4)]).unwrap();
        for d in [Direction::Down, Direction::Up] {
            let f = order_comonoid(&p, d).unwrap();
            let expect = Word::enumerate(5)
                .unwrap()
                .filter(|x| if d == Direction::Down { p.is_down_set(x) } else { p.is_up_set(x) });
            assert_eq!(f, Family::from_words(5, expect).unwrap());
        }
    }
}
