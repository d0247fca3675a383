//! Finite-dimensional algebras with a basis indexed by idempotent pairs.

mod element;
mod series;
mod surgery;

use std::collections::HashMap;
use std::ops::Range;

pub use element::{AlgElem, BasisVector};
pub use series::{inverse_unipotent, log_unipotent, nilpotency_index};
pub use surgery::{SurgeryPlan, SurgeryStep};

use crate::rational::Q;

/// A basis sorted by (target, source, mask) with block ranges.
#[derive(Clone, Debug, Default)]
pub struct BasisIndex {
    vectors: Vec<BasisVector>,
    blocks: Vec<Vec<Range<usize>>>,
    position: HashMap<BasisVector, usize>,
}

impl BasisIndex {
    pub fn new(idempotents: usize, mut vectors: Vec<BasisVector>) -> BasisIndex {
        vectors.sort();
        vectors.dedup();
        let mut blocks = vec![vec![0..0; idempotents]; idempotents];
        let mut start = 0;
        while start < vectors.len() {
            let (t, s) = (vectors[start].target, vectors[start].source);
            let end = start
                + vectors[start..]
                    .iter()
                    .take_while(|v| v.target == t && v.source == s)
                    .count();
            blocks[t][s] = start..end;
            start = end;
        }
        let position = vectors.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        BasisIndex {
            vectors,
            blocks,
            position,
        }
    }

    pub fn vectors(&self) -> &[BasisVector] {
        &self.vectors
    }

    pub fn block(&self, target: usize, source: usize) -> &[BasisVector] {
        &self.vectors[self.blocks[target][source].clone()]
    }

    pub fn position(&self, v: &BasisVector) -> Option<usize> {
        self.position.get(v).copied()
    }
}

/// Multiplication follows path-algebra conventions: a basis vector of
/// _target A _source times one of _target′ A _source′ vanishes unless
/// source = target′.
pub trait FiniteAlgebra: Sync {
    fn idempotent_count(&self) -> usize;

    fn index(&self) -> &BasisIndex;

    /// Product of two basis vectors with matching middle index.
    fn mul_basis(&self, f: &BasisVector, g: &BasisVector) -> AlgElem;

    fn degree(&self, v: &BasisVector) -> i32;

    fn basis(&self) -> &[BasisVector] {
        self.index().vectors()
    }

    fn dim(&self) -> usize {
        self.basis().len()
    }

    fn block(&self, target: usize, source: usize) -> &[BasisVector] {
        self.index().block(target, source)
    }

    fn idempotent(&self, i: usize) -> BasisVector {
        BasisVector::new(i, i, 0)
    }

    fn unit(&self) -> AlgElem {
        (0..self.idempotent_count())
            .map(|i| (self.idempotent(i), crate::rational::int(1)))
            .collect()
    }

    fn mul(&self, f: &AlgElem, g: &AlgElem) -> AlgElem {
        let mut out = AlgElem::zero();
        for (u, cu) in f.iter() {
            for (v, cv) in g.iter() {
                if u.source != v.target {
                    continue;
                }
                let coeff: Q = cu * cv;
                for (w, cw) in self.mul_basis(u, v).iter() {
                    out.add_term(*w, cw * &coeff);
                }
            }
        }
        out
    }

    /// The degree of a homogeneous element; `None` for zero or mixed degrees.
    fn homogeneous_degree(&self, e: &AlgElem) -> Option<i32> {
        let mut degrees = e.iter().map(|(v, _)| self.degree(v));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Basis vectors of a given degree.
    fn graded_piece(&self, degree: i32) -> Vec<BasisVector> {
        self.basis()
            .iter()
            .copied()
            .filter(|v| self.degree(v) == degree)
            .collect()
    }

    fn max_degree(&self) -> i32 {
        self.basis()
            .iter()
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }
}
