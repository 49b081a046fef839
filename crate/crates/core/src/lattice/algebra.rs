use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordOp {
    Meet,
    Join,
    Negate,
    Leq,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraValue {
    Word(Word),
    Bool(bool),
}

/// Checked word algebra. `Negate` ignores `y`; the binary operations require
/// it and reject words over different ground sets.
pub fn word_algebra(op: WordOp, x: &Word, y: Option<&Word>) -> Result<AlgebraValue> {
    if op == WordOp::Negate {
        return Ok(AlgebraValue::Word(x.negate()));
    }
    let y = y.ok_or(Error::EmptyInput("second operand"))?;
    if x.len() != y.len() {
        return Err(Error::GroundMismatch { expected: x.len(), found: y.len() });
    }
    Ok(match op {
        WordOp::Meet => AlgebraValue::Word(x.meet(y)),
        WordOp::Join => AlgebraValue::Word(x.join(y)),
        WordOp::Leq => AlgebraValue::Bool(x.leq(y)),
        WordOp::Negate => unreachable!(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(len: usize, idx: &[usize]) -> Word {
        Word::from_indices(len, idx.iter().copied()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            word_algebra(WordOp::Meet, &w(3, &[0, 1]), Some(&w(3, &[1, 2]))).unwrap(),
            AlgebraValue::Word(w(3, &[1]))
        );
        assert_eq!(
            word_algebra(WordOp::Join, &w(3, &[0]), Some(&w(3, &[]))).unwrap(),
            AlgebraValue::Word(w(3, &[0]))
        );
        assert_eq!(
            word_algebra(WordOp::Leq, &w(2, &[0]), Some(&w(2, &[0, 1]))).unwrap(),
            AlgebraValue::Bool(true)
        );
        assert_eq!(
            word_algebra(WordOp::Negate, &w(3, &[0]), None).unwrap(),
            AlgebraValue::Word(w(3, &[1, 2]))
        );
    }

    #[test]
    fn mismatched_ground() {
        assert_eq!(
            word_algebra(WordOp::Meet, &w(2, &[0]), Some(&w(3, &[0]))),
            Err(Error::GroundMismatch { expected: 2, found: 3 })
        );
        assert!(word_algebra(WordOp::Join, &w(2, &[0]), None).is_err());
    }
}
