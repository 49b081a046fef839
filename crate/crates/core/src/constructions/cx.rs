//! Finite-parameter evaluator for the generators `w_{n,γ}` of the
//! non-discrete T1 example.
//!
//! A point is `(a', a'')`: `a'` an injective list of pairs `(n, γ)` and `a''`
//! an island bit vector. Its encoding concatenates, for each pair in order,
//! `n` and then `γ` as little-endian fields of fixed width, followed by the
//! bits of `a''`. The countable T1 family is `u_{2j}` = bit `j` of the
//! encoding (0 past its end) and `u_{2j+1}` = its negation.

use std::collections::HashSet;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CxParams {
    /// Length of every `a'`.
    pub prefix_len: usize,
    /// Exclusive bound on the first coordinate `n`.
    pub n_bound: usize,
    /// Exclusive bound on `γ`, standing in for the first uncountable ordinal.
    pub gamma_max: usize,
    /// Length of `a''`.
    pub island_bits: usize,
}

fn width(bound: usize) -> usize {
    (usize::BITS - bound.saturating_sub(1).leading_zeros()).max(1) as usize
}

impl CxParams {
    pub fn new(prefix_len: usize, n_bound: usize, gamma_max: usize, island_bits: usize) -> Result<Self> {
        if n_bound == 0 || gamma_max == 0 {
            return Err(Error::InvalidParams("n_bound and gamma_max must be positive".into()));
        }
        if prefix_len > n_bound.saturating_mul(gamma_max) {
            return Err(Error::InvalidParams("prefix longer than the number of distinct pairs".into()));
        }
        Ok(CxParams { prefix_len, n_bound, gamma_max, island_bits })
    }

    pub fn n_width(&self) -> usize {
        width(self.n_bound)
    }

    pub fn gamma_width(&self) -> usize {
        width(self.gamma_max)
    }

    /// Length of the encoding of a point.
    pub fn encoding_len(&self) -> usize {
        self.prefix_len * (self.n_width() + self.gamma_width()) + self.island_bits
    }

    fn check_pair(&self, n: usize, gamma: usize) -> Result<()> {
        if n >= self.n_bound {
            return Err(Error::GeneratorOutOfRange { index: n, bound: self.n_bound });
        }
        if gamma >= self.gamma_max {
            return Err(Error::GeneratorOutOfRange { index: gamma, bound: self.gamma_max });
        }
        Ok(())
    }

    fn check_point(&self, a: &CxPoint) -> Result<()> {
        if a.aprime.len() != self.prefix_len {
            return Err(Error::InvalidPoint(format!("a' has {} pairs, expected {}", a.aprime.len(), self.prefix_len)));
        }
        if a.adoubleprime.len() != self.island_bits {
            return Err(Error::InvalidPoint(format!(
                "a'' has {} bits, expected {}",
                a.adoubleprime.len(),
                self.island_bits
            )));
        }
        let mut seen = HashSet::new();
        for &(n, g) in &a.aprime {
            if n >= self.n_bound || g >= self.gamma_max {
                return Err(Error::InvalidPoint(format!("pair ({n},{g}) out of bounds")));
            }
            if !seen.insert((n, g)) {
                return Err(Error::InvalidPoint(format!("pair ({n},{g}) repeated in a'")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CxPoint {
    pub aprime: Vec<(usize, usize)>,
    pub adoubleprime: Vec<bool>,
}

impl CxPoint {
    pub fn new(aprime: Vec<(usize, usize)>, adoubleprime: Vec<bool>) -> Self {
        CxPoint { aprime, adoubleprime }
    }

    /// Smallest `β` with every `γ` of `a'` below `β`.
    pub fn stratum(&self) -> usize {
        self.aprime.iter().map(|&(_, g)| g + 1).max().unwrap_or(0)
    }
}

pub fn cx_encode(p: &CxParams, a: &CxPoint) -> Result<Vec<bool>> {
    p.check_point(a)?;
    let (nw, gw) = (p.n_width(), p.gamma_width());
    let mut bits = Vec::with_capacity(p.encoding_len());
    for &(n, g) in &a.aprime {
        bits.extend((0..nw).map(|k| n >> k & 1 == 1));
        bits.extend((0..gw).map(|k| g >> k & 1 == 1));
    }
    bits.extend(&a.adoubleprime);
    Ok(bits)
}

/// `u_k` of the point.
pub fn cx_u(p: &CxParams, k: usize, a: &CxPoint) -> Result<bool> {
    let enc = cx_encode(p, a)?;
    let bit = enc.get(k / 2).copied().unwrap_or(false);
    Ok(if k.is_multiple_of(2) { bit } else { !bit })
}

/// `w_{n,γ}(a)`: `a''(i)` when `a'(i) = (n, γ)`, otherwise `u_n(a)`.
pub fn cx_evaluate(p: &CxParams, n: usize, gamma: usize, a: &CxPoint) -> Result<bool> {
    p.check_pair(n, gamma)?;
    p.check_point(a)?;
    match a.aprime.iter().position(|&pair| pair == (n, gamma)) {
        Some(i) => a
            .adoubleprime
            .get(i)
            .copied()
            .ok_or(Error::UnderSpecifiedPoint { position: i, island_bits: p.island_bits }),
        None => cx_u(p, n, a),
    }
}

/// Whether the point lies in the stratum `A_β`.
pub fn cx_stratum(p: &CxParams, a: &CxPoint, beta: usize) -> Result<bool> {
    if beta > p.gamma_max {
        return Err(Error::InvalidParams(format!("beta {beta} exceeds gamma_max {}", p.gamma_max)));
    }
    p.check_point(a)?;
    Ok(a.stratum() <= beta)
}

/// A generator `w_{n,β}` containing `a1` but not `a2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CxSeparation {
    pub n: usize,
    pub beta: usize,
    /// First encoding bit where the points differ.
    pub bit: usize,
    pub strata: (usize, usize),
}

/// Picks `u_n` separating the encodings at their first differing bit and
/// `β` just above both strata, so `w_{n,β}` acts as `u_n` on both points.
pub fn cx_separate(p: &CxParams, a1: &CxPoint, a2: &CxPoint) -> Result<CxSeparation> {
    let (e1, e2) = (cx_encode(p, a1)?, cx_encode(p, a2)?);
    let bit = e1.iter().zip(&e2).position(|(x, y)| x != y).ok_or(Error::IdenticalPoints)?;
    let n = if e1[bit] { 2 * bit } else { 2 * bit + 1 };
    if n >= p.n_bound {
        return Err(Error::GeneratorOutOfRange { index: n, bound: p.n_bound });
    }
    let strata = (a1.stratum(), a2.stratum());
    let beta = strata.0.max(strata.1);
    if beta >= p.gamma_max {
        return Err(Error::GammaTooSmall { gamma_max: p.gamma_max, needed: beta });
    }
    assert!(cx_evaluate(p, n, beta, a1)?, "separating generator must contain the first point");
    assert!(!cx_evaluate(p, n, beta, a2)?, "separating generator must omit the second point");
    Ok(CxSeparation { n, beta, bit, strata })
}
