//! Khovanov's arc algebra: labelings of glued cup diagrams multiplied by
//! surgery.

use std::collections::HashMap;
use std::sync::{Arc as Shared, OnceLock, RwLock};

use crate::algebra::{AlgElem, BasisIndex, BasisVector, FiniteAlgebra, SurgeryPlan};
use crate::diagram::{enumerate_cup_diagrams, CupDiagram};
use crate::error::{Error, Result};
use crate::frobenius::FrobLabel;
use crate::gluing::{glue, GluedDiagram};
use crate::rational::int;

type PlanKey = (usize, usize, usize);

/// ⊕ over pairs of diagrams of R^{⊗ circles of W(b)a}, for any fixed list
/// of cup diagrams on the same points.
///
/// `new(m)` takes all of Cup(m); `from_diagrams` allows an idempotent
/// truncation, which is how the colored algebra sits inside it.
pub struct ArcAlgebra {
    diagrams: Vec<CupDiagram>,
    glued: Vec<Vec<GluedDiagram>>,
    plans: RwLock<HashMap<PlanKey, Shared<SurgeryPlan>>>,
    index: OnceLock<BasisIndex>,
}

impl ArcAlgebra {
    pub fn new(m: usize) -> Result<ArcAlgebra> {
        ArcAlgebra::from_diagrams(enumerate_cup_diagrams(m)?)
    }

    pub fn from_diagrams(diagrams: Vec<CupDiagram>) -> Result<ArcAlgebra> {
        let points = diagrams
            .first()
            .ok_or_else(|| Error::Degenerate("no cup diagrams".into()))?
            .points();
        if let Some(d) = diagrams.iter().find(|d| d.points() != points) {
            return Err(Error::SizeMismatch(format!(
                "{} vs {} points",
                d.points(),
                points
            )));
        }
        let glued = diagrams
            .iter()
            .map(|b| {
                diagrams
                    .iter()
                    .map(|a| glue(b, a))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ArcAlgebra {
            diagrams,
            glued,
            plans: RwLock::new(HashMap::new()),
            index: OnceLock::new(),
        })
    }

    /// Number of cups per diagram; also the grading shift.
    pub fn m(&self) -> usize {
        self.diagrams[0].m()
    }

    pub fn diagrams(&self) -> &[CupDiagram] {
        &self.diagrams
    }

    pub fn diagram_index(&self, d: &CupDiagram) -> Option<usize> {
        self.diagrams.iter().position(|x| x == d)
    }

    /// W(target)·source.
    pub fn glued(&self, target: usize, source: usize) -> &GluedDiagram {
        &self.glued[target][source]
    }

    /// Σ over pairs of 2^{circles}, without building the basis.
    pub fn dim_formula(&self) -> usize {
        self.glued
            .iter()
            .flatten()
            .map(|g| 1usize << g.circle_count())
            .sum()
    }

    /// The cached schedule for _cH_b × _bH_a, cutting cups left to right.
    pub fn plan(&self, c: usize, b: usize, a: usize) -> Shared<SurgeryPlan> {
        let key = (c, b, a);
        if let Some(p) = self.plans.read().expect("plan cache poisoned").get(&key) {
            return p.clone();
        }
        let order: Vec<usize> = (0..self.diagrams[b].arcs().len()).collect();
        let plan = Shared::new(self.plan_with_order(c, b, a, &order));
        self.plans
            .write()
            .expect("plan cache poisoned")
            .entry(key)
            .or_insert(plan)
            .clone()
    }

    /// An uncached schedule cutting the cups of b in the given order.
    pub fn plan_with_order(&self, c: usize, b: usize, a: usize, order: &[usize]) -> SurgeryPlan {
        SurgeryPlan::build(
            &self.glued[c][b],
            &self.glued[b][a],
            &self.glued[c][a],
            order,
        )
    }

    /// Labels of a basis vector in circle order.
    pub fn labels(&self, v: &BasisVector) -> Vec<FrobLabel> {
        let circles = self.glued[v.target][v.source].circle_count();
        (0..circles)
            .map(|i| FrobLabel::from_bit(v.mask >> i & 1 == 1))
            .collect()
    }

    /// Like `mul`, but with an explicit surgery order for every product.
    pub fn mul_with_order(&self, f: &BasisVector, g: &BasisVector, order: &[usize]) -> AlgElem {
        if f.source != g.target {
            return AlgElem::zero();
        }
        let plan = self.plan_with_order(f.target, f.source, g.source, order);
        collect(f.target, g.source, plan.apply(f.mask, g.mask))
    }
}

fn collect(target: usize, source: usize, terms: Vec<(u64, i64)>) -> AlgElem {
    terms
        .into_iter()
        .map(|(mask, c)| (BasisVector::new(target, source, mask), int(c)))
        .collect()
}

impl FiniteAlgebra for ArcAlgebra {
    fn idempotent_count(&self) -> usize {
        self.diagrams.len()
    }

    fn index(&self) -> &BasisIndex {
        self.index.get_or_init(|| {
            let k = self.diagrams.len();
            let mut vectors = Vec::new();
            for t in 0..k {
                for s in 0..k {
                    let circles = self.glued[t][s].circle_count();
                    vectors.extend((0..1u64 << circles).map(|mask| BasisVector::new(t, s, mask)));
                }
            }
            BasisIndex::new(k, vectors)
        })
    }

    fn mul_basis(&self, f: &BasisVector, g: &BasisVector) -> AlgElem {
        if f.source != g.target {
            return AlgElem::zero();
        }
        let plan = self.plan(f.target, f.source, g.source);
        collect(f.target, g.source, plan.apply(f.mask, g.mask))
    }

    /// 2·#X − #circles + m.
    fn degree(&self, v: &BasisVector) -> i32 {
        let circles = self.glued[v.target][v.source].circle_count() as i32;
        2 * v.x_count() as i32 - circles + self.m() as i32
    }
}
