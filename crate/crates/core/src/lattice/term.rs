use std::fmt;

use crate::error::{Error, Result};

/// Largest arity supported by the bitmask clause representation.
pub const MAX_ARITY: usize = 32;

/// A raw lattice expression over variables `v0, v1, ..`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Var(usize),
    Const(bool),
    Meet(Vec<Expr>),
    Join(Vec<Expr>),
}

impl Expr {
    pub fn var(i: usize) -> Expr {
        Expr::Var(i)
    }

    pub fn meet(a: Expr, b: Expr) -> Expr {
        Expr::Meet(vec![a, b])
    }

    pub fn join(a: Expr, b: Expr) -> Expr {
        Expr::Join(vec![a, b])
    }

    /// Direct evaluation; bit `i` of `assignment` is the value of `v_i`.
    pub fn eval(&self, assignment: u64) -> bool {
        match self {
            Expr::Var(i) => assignment >> i & 1 == 1,
            Expr::Const(c) => *c,
            Expr::Meet(xs) => xs.iter().all(|x| x.eval(assignment)),
            Expr::Join(xs) => xs.iter().any(|x| x.eval(assignment)),
        }
    }
}

/// A monotone term in antichain normal form: a join of meets, where each
/// meet is a nonempty set of variables (a bitmask) and no meet contains
/// another. The constants 0 and 1 are represented separately.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonotoneTerm {
    arity: usize,
    clauses: Vec<u32>,
    constant: Option<bool>,
}

impl MonotoneTerm {
    pub fn constant(arity: usize, value: bool) -> Self {
        MonotoneTerm { arity, clauses: Vec::new(), constant: Some(value) }
    }

    /// Normalizes a join of meets given as variable lists.
    pub fn from_clauses(arity: usize, clauses: &[&[usize]]) -> Result<Self> {
        check_arity(arity)?;
        let mut masks = Vec::new();
        for c in clauses {
            let mut m = 0u32;
            for &v in *c {
                if v >= arity {
                    return Err(Error::MalformedTerm(format!("variable v{v} exceeds arity {arity}")));
                }
                m |= 1 << v;
            }
            masks.push(m);
        }
        Ok(Self::from_masks(arity, masks))
    }

    fn from_masks(arity: usize, masks: Vec<u32>) -> Self {
        let clauses = absorb(masks);
        match clauses.as_slice() {
            [] => Self::constant(arity, false),
            [0] => Self::constant(arity, true),
            _ => MonotoneTerm { arity, clauses, constant: None },
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// The meets as bitmasks over the variables, in increasing order.
    pub fn clauses(&self) -> &[u32] {
        &self.clauses
    }

    /// Clauses as sorted variable lists.
    pub fn clause_lists(&self) -> Vec<Vec<usize>> {
        self.clauses.iter().map(|&m| (0..self.arity).filter(|v| m >> v & 1 == 1).collect()).collect()
    }

    pub fn as_constant(&self) -> Option<bool> {
        self.constant
    }

    pub fn eval(&self, assignment: u64) -> bool {
        if let Some(c) = self.constant {
            return c;
        }
        let a = assignment as u32;
        self.clauses.iter().any(|&c| a & c == c)
    }

    pub fn eval_bits(&self, values: &[bool]) -> bool {
        let a = values.iter().enumerate().fold(0u64, |m, (i, &b)| m | (b as u64) << i);
        self.eval(a)
    }

    /// Whether the term depends on variable `v`. In an irredundant monotone
    /// join of meets this is the case exactly when `v` occurs in a meet.
    pub fn depends_on(&self, v: usize) -> bool {
        self.constant.is_none() && self.clauses.iter().any(|&c| c >> v & 1 == 1)
    }

    pub fn depends_on_all(&self) -> bool {
        (0..self.arity).all(|v| self.depends_on(v))
    }
}

impl fmt::Display for MonotoneTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.constant {
            return write!(f, "{}", c as u8);
        }
        let parts: Vec<String> = self
            .clause_lists()
            .iter()
            .map(|c| c.iter().map(|v| format!("v{v}")).collect::<Vec<_>>().join("∧"))
            .collect();
        write!(f, "{}", parts.join(" ∨ "))
    }
}

fn check_arity(arity: usize) -> Result<()> {
    if arity > MAX_ARITY {
        return Err(Error::TooLarge { what: "term arity", actual: arity, limit: MAX_ARITY });
    }
    Ok(())
}

/// Drops duplicate and non-minimal clauses.
fn absorb(mut masks: Vec<u32>) -> Vec<u32> {
    masks.sort_unstable_by_key(|m| (m.count_ones(), *m));
    masks.dedup();
    let mut kept: Vec<u32> = Vec::new();
    for m in masks {
        if !kept.iter().any(|&k| k & m == k) {
            kept.push(m);
        }
    }
    kept.sort_unstable();
    kept
}

fn to_dnf(e: &Expr, arity: usize) -> Result<Vec<u32>> {
    Ok(match e {
        Expr::Var(v) => {
            if *v >= arity {
                return Err(Error::MalformedTerm(format!("variable v{v} exceeds arity {arity}")));
            }
            vec![1 << v]
        }
        Expr::Const(true) => vec![0],
        Expr::Const(false) => vec![],
        Expr::Join(xs) => {
            if xs.is_empty() {
                return Err(Error::MalformedTerm("join with no operands".into()));
            }
            let mut acc = Vec::new();
            for x in xs {
                acc.extend(to_dnf(x, arity)?);
            }
            absorb(acc)
        }
        Expr::Meet(xs) => {
            if xs.is_empty() {
                return Err(Error::MalformedTerm("meet with no operands".into()));
            }
            let mut acc = vec![0u32];
            for x in xs {
                let d = to_dnf(x, arity)?;
                let mut next = Vec::with_capacity(acc.len() * d.len());
                for &a in &acc {
                    for &b in &d {
                        next.push(a | b);
                    }
                }
                acc = absorb(next);
            }
            acc
        }
    })
}

/// Antichain normal form of an expression in `arity` variables. Two
/// expressions denote the same monotone function iff their normal forms are
/// equal.
pub fn term_normalize(e: &Expr, arity: usize) -> Result<MonotoneTerm> {
    check_arity(arity)?;
    Ok(MonotoneTerm::from_masks(arity, to_dnf(e, arity)?))
}

/// First prefix `c_0 .. c_{i-1}` in lexicographic order (with `c_0` most
/// significant) such that `t(c, 0, .., 0) = 0` and `t(c, 1, .., 1) = 1`.
/// The term must depend on all its arguments and `i < arity`.
pub fn pinning_assignment(t: &MonotoneTerm, split: usize) -> Result<Vec<bool>> {
    let j = t.arity();
    if split >= j {
        return Err(Error::InvalidSplit { split, arity: j });
    }
    if let Some(v) = (0..j).find(|&v| !t.depends_on(v)) {
        return Err(Error::NonEssentialVariable(v));
    }
    let tail_ones: u64 = ((1u64 << j) - 1) & !((1u64 << split) - 1);
    for rank in 0u64..1 << split {
        // c_0 is the most significant position of the lexicographic rank
        let prefix: Vec<bool> = (0..split).map(|p| rank >> (split - 1 - p) & 1 == 1).collect();
        let base = prefix.iter().enumerate().fold(0u64, |m, (i, &b)| m | (b as u64) << i);
        if !t.eval(base) && t.eval(base | tail_ones) {
            return Ok(prefix);
        }
    }
    Err(Error::PinningNotFound)
}
