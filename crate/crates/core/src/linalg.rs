//! Exact sparse row reduction over ℚ.

use std::collections::BTreeMap;

use num::Zero;

use crate::algebra::{AlgElem, FiniteAlgebra};
use crate::rational::{int, Q};

pub type SparseVec = BTreeMap<usize, Q>;

fn axpy(target: &mut SparseVec, c: &Q, row: &SparseVec) {
    for (&j, x) in row {
        let slot = target.entry(j).or_insert_with(Q::zero);
        *slot -= c * x;
        if slot.is_zero() {
            target.remove(&j);
        }
    }
}

/// Reduced row echelon form, grown one row at a time.
#[derive(Clone, Debug, Default)]
pub struct Rref {
    rows: BTreeMap<usize, SparseVec>,
}

impl Rref {
    pub fn new() -> Rref {
        Rref::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// The remainder of `v` after clearing every pivot column.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let pivots: Vec<usize> = v
            .keys()
            .copied()
            .filter(|j| self.rows.contains_key(j))
            .collect();
        for p in pivots {
            if let Some(c) = v.get(&p).cloned() {
                axpy(&mut v, &c, &self.rows[&p]);
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Adds a row; returns whether it raised the rank.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut v = self.reduce(v);
        let Some((&p, lead)) = v.iter().next() else {
            return false;
        };
        let inv = int(1) / lead.clone();
        for x in v.values_mut() {
            *x *= &inv;
        }
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&p).cloned() {
                axpy(row, &c, &v);
            }
        }
        self.rows.insert(p, v);
        true
    }

    /// A basis of {x : row · x = 0 for every row}, over columns `0..cols`.
    pub fn nullspace(&self, cols: usize) -> Vec<SparseVec> {
        (0..cols)
            .filter(|j| !self.rows.contains_key(j))
            .map(|free| {
                let mut x = SparseVec::new();
                x.insert(free, int(1));
                for (&p, row) in &self.rows {
                    if let Some(c) = row.get(&free) {
                        x.insert(p, -c.clone());
                    }
                }
                x
            })
            .collect()
    }
}

/// Coordinates of an element in the algebra's basis order.
pub fn coordinates<A: FiniteAlgebra + ?Sized>(alg: &A, e: &AlgElem) -> SparseVec {
    e.iter()
        .map(|(v, c)| {
            (
                alg.index().position(v).expect("element outside the basis"),
                c.clone(),
            )
        })
        .collect()
}

pub fn from_coordinates<A: FiniteAlgebra + ?Sized>(alg: &A, x: &SparseVec) -> AlgElem {
    x.iter()
        .map(|(&i, c)| (alg.basis()[i], c.clone()))
        .collect()
}

/// Dimension of the smallest subspace containing `gens` and closed under
/// right multiplication by them, i.e. the span of all nonempty products.
pub fn product_closure<A: FiniteAlgebra + ?Sized>(alg: &A, gens: &[AlgElem]) -> usize {
    let mut span = Rref::new();
    let mut queue: Vec<AlgElem> = Vec::new();
    for g in gens {
        if span.insert(coordinates(alg, g)) {
            queue.push(g.clone());
        }
    }
    while let Some(s) = queue.pop() {
        for g in gens {
            let p = alg.mul(&s, g);
            if !p.is_zero() && span.insert(coordinates(alg, &p)) {
                queue.push(p);
            }
        }
    }
    span.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn row(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(j, c)| (j, int(c))).collect()
    }

    #[test]
    fn rank_and_membership() {
        let mut r = Rref::new();
        assert!(r.insert(row(&[(0, 1), (1, 2)])));
        assert!(r.insert(row(&[(1, 1), (2, 1)])));
        assert!(!r.insert(row(&[(0, 1), (1, 3), (2, 1)])));
        assert_eq!(r.rank(), 2);
        assert!(r.contains(&row(&[(0, 2), (1, 4)])));
        assert!(!r.contains(&row(&[(2, 1)])));
    }

    #[test]
    fn nullspace_is_annihilated() {
        let rows = [
            row(&[(0, 1), (1, 2), (3, -1)]),
            row(&[(1, 3), (2, 1)]),
            row(&[(0, 2), (1, 7), (2, 1), (3, -2)]),
        ];
        let mut r = Rref::new();
        for x in &rows {
            r.insert(x.clone());
        }
        let null = r.nullspace(4);
        assert_eq!(null.len(), 4 - r.rank());
        for x in &null {
            for a in &rows {
                let dot: Q = a.iter().filter_map(|(j, c)| x.get(j).map(|y| c * y)).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn fractions_survive() {
        let mut r = Rref::new();
        r.insert([(0, int(2)), (1, int(1))].into_iter().collect());
        let null = r.nullspace(2);
        assert_eq!(null[0][&0], frac(-1, 2));
    }
}
