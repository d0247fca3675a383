use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num::Zero;
use serde::Serialize;

use crate::rational::{int, Q};

/// A basis vector of _target A _source: one labeling of the circles of
/// W(target)·source. Bit i of `mask` is set when circle i carries X.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BasisVector {
    pub target: usize,
    pub source: usize,
    pub mask: u64,
}

impl BasisVector {
    pub fn new(target: usize, source: usize, mask: u64) -> BasisVector {
        BasisVector {
            target,
            source,
            mask,
        }
    }

    pub fn x_count(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn is_diagonal(&self) -> bool {
        self.target == self.source
    }
}

/// A finite rational linear combination of basis vectors. Zero
/// coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgElem {
    terms: BTreeMap<BasisVector, Q>,
}

impl AlgElem {
    pub fn zero() -> AlgElem {
        AlgElem::default()
    }

    pub fn basis(v: BasisVector) -> AlgElem {
        AlgElem::term(v, int(1))
    }

    pub fn term(v: BasisVector, c: Q) -> AlgElem {
        let mut e = AlgElem::zero();
        e.add_term(v, c);
        e
    }

    pub fn add_term(&mut self, v: BasisVector, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(v).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, v: &BasisVector) -> Q {
        self.terms.get(v).cloned().unwrap_or_else(Q::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisVector, &Q)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Q) -> AlgElem {
        if c.is_zero() {
            return AlgElem::zero();
        }
        AlgElem {
            terms: self.terms.iter().map(|(v, x)| (*v, x * c)).collect(),
        }
    }

    /// Keeps only the terms accepted by `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&BasisVector) -> bool) -> AlgElem {
        AlgElem {
            terms: self
                .terms
                .iter()
                .filter(|(v, _)| keep(v))
                .map(|(v, c)| (*v, c.clone()))
                .collect(),
        }
    }

    /// The (target, source) spaces touched by this element.
    pub fn spaces(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> =
            self.terms.keys().map(|v| (v.target, v.source)).collect();
        out.dedup();
        out
    }
}

impl FromIterator<(BasisVector, Q)> for AlgElem {
    fn from_iter<I: IntoIterator<Item = (BasisVector, Q)>>(iter: I) -> Self {
        let mut e = AlgElem::zero();
        for (v, c) in iter {
            e.add_term(v, c);
        }
        e
    }
}

impl AddAssign<&AlgElem> for AlgElem {
    fn add_assign(&mut self, rhs: &AlgElem) {
        for (v, c) in &rhs.terms {
            self.add_term(*v, c.clone());
        }
    }
}

impl SubAssign<&AlgElem> for AlgElem {
    fn sub_assign(&mut self, rhs: &AlgElem) {
        for (v, c) in &rhs.terms {
            self.add_term(*v, -c.clone());
        }
    }
}

impl Add<&AlgElem> for &AlgElem {
    type Output = AlgElem;

    fn add(self, rhs: &AlgElem) -> AlgElem {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&AlgElem> for &AlgElem {
    type Output = AlgElem;

    fn sub(self, rhs: &AlgElem) -> AlgElem {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for AlgElem {
    type Output = AlgElem;

    fn add(mut self, rhs: AlgElem) -> AlgElem {
        self += &rhs;
        self
    }
}

impl Sub for AlgElem {
    type Output = AlgElem;

    fn sub(mut self, rhs: AlgElem) -> AlgElem {
        self -= &rhs;
        self
    }
}

impl Neg for &AlgElem {
    type Output = AlgElem;

    fn neg(self) -> AlgElem {
        AlgElem {
            terms: self.terms.iter().map(|(v, c)| (*v, -c.clone())).collect(),
        }
    }
}
