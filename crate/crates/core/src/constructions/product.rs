use crate::error::{Error, Result};
use crate::family::Family;
use crate::lattice::lattice_close;
use crate::order::Preorder;
use crate::word::Word;

/// Largest product the up-set checks accept.
pub const MAX_PRODUCT: usize = 4096;

/// A finite product of bounded posets, with the lattices generated by the
/// principal up-sets of `S` and the principal down-sets of `S'`.
///
/// `S` holds the points whose coordinates are all least except at most one;
/// `S'` the points whose coordinates are all greatest except at most one.
/// Point indices are mixed radix with coordinate 0 varying fastest.
#[derive(Debug, Clone)]
pub struct ProductUpsets {
    factors: Vec<Preorder>,
    bottoms: Vec<usize>,
    tops: Vec<usize>,
    size: usize,
    order: Preorder,
    up_lattice: Family,
    down_lattice: Family,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpsetReport {
    /// The up-set is the preimage of an up-set of the sub-product on
    /// `support`.
    pub cond_ii: bool,
    /// Minimal set of coordinates the up-set depends on.
    pub support: Vec<usize>,
    /// In the lattice generated by `{↑s | s ∈ S}` and `∅`.
    pub cond_iii: bool,
    /// The complement is in the lattice generated by `{↓s | s ∈ S'}` and `∅`.
    pub cond_iv: bool,
}

impl ProductUpsets {
    pub fn new(factors: &[Preorder]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::EmptyInput("product factors"));
        }
        let mut bottoms = Vec::new();
        let mut tops = Vec::new();
        for (i, f) in factors.iter().enumerate() {
            let k = f.size();
            for a in 0..k {
                for b in 0..a {
                    if f.leq(a, b) && f.leq(b, a) {
                        return Err(Error::InvalidPoset(format!("factor {i}: {a} and {b} are equivalent")));
                    }
                }
            }
            let bottom = (0..k).find(|&a| f.up(a).is_full());
            let top = (0..k).find(|&a| f.down(a).is_full());
            match (bottom, top) {
                (Some(b), Some(t)) => {
                    bottoms.push(b);
                    tops.push(t);
                }
                _ => return Err(Error::InvalidPoset(format!("factor {i} lacks a least or greatest element"))),
            }
        }
        let size = factors.iter().try_fold(1usize, |acc, f| acc.checked_mul(f.size())).unwrap_or(usize::MAX);
        if size > MAX_PRODUCT {
            return Err(Error::TooLarge { what: "poset product", actual: size, limit: MAX_PRODUCT });
        }
        let mut p = ProductUpsets {
            factors: factors.to_vec(),
            bottoms,
            tops,
            size,
            order: Preorder::chain(0),
            up_lattice: Family::power_set(0)?,
            down_lattice: Family::power_set(0)?,
        };
        let above = (0..size).map(|a| Word::from_fn(size, |b| p.point_leq(a, b))).collect();
        p.order = Preorder::from_above_unchecked(above);
        let near = |ends: &[usize]| -> Vec<usize> {
            (0..size).filter(|&q| p.coords(q).iter().zip(ends).filter(|(c, e)| c != e).count() <= 1).collect()
        };
        let (s, s_prime) = (near(&p.bottoms), near(&p.tops));
        let ups = s.into_iter().map(|q| p.order.up(q).clone());
        let up_lattice = lattice_close(&Family::from_words(size, ups)?);
        let downs = s_prime.into_iter().map(|q| p.order.down(q));
        let down_lattice = lattice_close(&Family::from_words(size, downs)?);
        p.up_lattice = up_lattice;
        p.down_lattice = down_lattice;
        Ok(p)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn coords(&self, point: usize) -> Vec<usize> {
        let mut rest = point;
        self.factors
            .iter()
            .map(|f| {
                let c = rest % f.size();
                rest /= f.size();
                c
            })
            .collect()
    }

    pub fn point(&self, coords: &[usize]) -> usize {
        coords.iter().zip(&self.factors).rev().fold(0, |acc, (&c, f)| acc * f.size() + c)
    }

    fn point_leq(&self, a: usize, b: usize) -> bool {
        let (ca, cb) = (self.coords(a), self.coords(b));
        self.factors.iter().enumerate().all(|(i, f)| f.leq(ca[i], cb[i]))
    }

    /// The product order.
    pub fn order(&self) -> &Preorder {
        &self.order
    }

    pub fn up_lattice(&self) -> &Family {
        &self.up_lattice
    }

    pub fn down_lattice(&self) -> &Family {
        &self.down_lattice
    }

    pub fn check(&self, x: &Word) -> Result<UpsetReport> {
        if x.len() != self.size {
            return Err(Error::GroundMismatch { expected: self.size, found: x.len() });
        }
        if !self.order.is_up_set(x) {
            return Err(Error::NotUpSet(x.to_bits()));
        }
        let support: Vec<usize> = (0..self.factors.len()).filter(|&i| self.depends_on(x, i)).collect();
        let cond_ii = (0..self.size).all(|q| {
            let mut c = self.coords(q);
            for (i, v) in c.iter_mut().enumerate() {
                if !support.contains(&i) {
                    *v = self.bottoms[i];
                }
            }
            x.contains(q) == x.contains(self.point(&c))
        });
        Ok(UpsetReport {
            cond_ii,
            support,
            cond_iii: self.up_lattice.contains(x),
            cond_iv: self.down_lattice.contains(&x.negate()),
        })
    }

    fn depends_on(&self, x: &Word, i: usize) -> bool {
        (0..self.size).any(|q| {
            let mut c = self.coords(q);
            (0..self.factors[i].size()).any(|v| {
                c[i] = v;
                x.contains(self.point(&c)) != x.contains(q)
            })
        })
    }
}

/// Conditions (ii), (iii), (iv) for one up-set of the product.
pub fn product_upset_check(factors: &[Preorder], x: &Word) -> Result<UpsetReport> {
    ProductUpsets::new(factors)?.check(x)
}
