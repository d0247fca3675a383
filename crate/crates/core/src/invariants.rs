//! Centers, commutator quotients, dimension tables and the comparison of
//! the colored algebra's corner with the arc algebra.

use std::collections::BTreeMap;

use num::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{AlgElem, BasisVector, FiniteAlgebra};
use crate::arc_algebra::ArcAlgebra;
use crate::colored_algebra::ColoredAlgebra;
use crate::diagram::lambda_pairs;
use crate::error::Result;
use crate::gluing::CircleColor;
use crate::linalg::{coordinates, product_closure, Rref, SparseVec};
use crate::rational::{int, Q};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CenterBasis {
    pub basis: Vec<AlgElem>,
    pub graded_dims: BTreeMap<i32, usize>,
}

impl CenterBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Highest degree with a nonzero piece, and that piece's dimension.
    pub fn top_degree(&self) -> Option<(i32, usize)> {
        self.graded_dims.iter().next_back().map(|(d, n)| (*d, *n))
    }
}

/// Central elements spanned by the given unknowns (diagonal basis vectors).
fn central_span<A: FiniteAlgebra>(alg: &A, unknowns: &[BasisVector]) -> Vec<AlgElem> {
    let column: BTreeMap<BasisVector, usize> =
        unknowns.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let rows: Vec<SparseVec> = alg
        .basis()
        .par_iter()
        .flat_map_iter(|v| {
            // z·v − v·z, collected per output basis vector.
            let mut eqs: BTreeMap<BasisVector, SparseVec> = BTreeMap::new();
            let mut push = |u: &BasisVector, prod: AlgElem, sign: i64| {
                let col = column[u];
                for (w, c) in prod.iter() {
                    let slot = eqs
                        .entry(*w)
                        .or_default()
                        .entry(col)
                        .or_insert_with(Q::zero);
                    *slot += c * int(sign);
                }
            };
            for u in unknowns.iter().filter(|u| u.target == v.target) {
                push(u, alg.mul_basis(u, v), 1);
            }
            for u in unknowns.iter().filter(|u| u.target == v.source) {
                push(u, alg.mul_basis(v, u), -1);
            }
            eqs.into_values().map(|mut row| {
                row.retain(|_, c| !c.is_zero());
                row
            })
        })
        .collect();
    let mut rref = Rref::new();
    for row in rows.into_iter().filter(|r| !r.is_empty()) {
        rref.insert(row);
    }
    rref.nullspace(unknowns.len())
        .into_iter()
        .map(|x| x.iter().map(|(&i, c)| (unknowns[i], c.clone())).collect())
        .collect()
}

fn diagonal<A: FiniteAlgebra>(alg: &A) -> Vec<BasisVector> {
    alg.basis()
        .iter()
        .copied()
        .filter(BasisVector::is_diagonal)
        .collect()
}

/// The center, solved one degree at a time.
///
/// A central element lies in ⊕ e_a A e_a, so only diagonal basis vectors
/// are unknowns; homogeneous multiplication keeps degrees apart.
pub fn center<A: FiniteAlgebra>(alg: &A) -> CenterBasis {
    let mut by_degree: BTreeMap<i32, Vec<BasisVector>> = BTreeMap::new();
    for v in diagonal(alg) {
        by_degree.entry(alg.degree(&v)).or_default().push(v);
    }
    let mut out = CenterBasis::default();
    for (d, unknowns) in by_degree {
        let piece = central_span(alg, &unknowns);
        if !piece.is_empty() {
            out.graded_dims.insert(d, piece.len());
        }
        out.basis.extend(piece);
    }
    out
}

/// The center solved in one system, ignoring the grading.
pub fn center_ungraded<A: FiniteAlgebra>(alg: &A) -> Vec<AlgElem> {
    central_span(alg, &diagonal(alg))
}

/// Whether z commutes with every basis vector.
pub fn is_central<A: FiniteAlgebra>(alg: &A, z: &AlgElem) -> bool {
    alg.basis().par_iter().all(|v| {
        let v = AlgElem::basis(*v);
        alg.mul(z, &v) == alg.mul(&v, z)
    })
}

/// dim A − dim [A, A].
pub fn commutator_quotient_dim<A: FiniteAlgebra>(alg: &A) -> usize {
    let basis = alg.basis();
    let k = alg.idempotent_count();
    let rows: Vec<SparseVec> = basis
        .par_iter()
        .flat_map_iter(|v| {
            let partners: Vec<BasisVector> = (0..k)
                .flat_map(|s| alg.block(v.source, s).iter().copied())
                .chain((0..k).flat_map(|t| alg.block(t, v.target).iter().copied()))
                .filter(|w| w > v)
                .collect();
            partners.into_iter().filter_map(move |w| {
                let vw = alg.mul_basis(v, &w);
                let wv = alg.mul_basis(&w, v);
                let c = coordinates(alg, &(vw - wv));
                (!c.is_empty()).then_some(c)
            })
        })
        .collect();
    let mut rref = Rref::new();
    for row in rows {
        rref.insert(row);
    }
    alg.dim() - rref.rank()
}

/// dim _b𝒦_a for every pair, in enumeration order.
pub fn dim_table(k: &ColoredAlgebra) -> Vec<Vec<usize>> {
    let m = k.idempotent_count();
    (0..m)
        .map(|t| (0..m).map(|s| k.k_space(t, s).len()).collect())
        .collect()
}

/// Graded dimension of the whole algebra.
pub fn hilbert_series<A: FiniteAlgebra>(alg: &A) -> BTreeMap<i32, usize> {
    let mut out = BTreeMap::new();
    for v in alg.basis() {
        *out.entry(alg.degree(v)).or_insert(0) += 1;
    }
    out
}

/// Dimension of the span of products of basis vectors of degree ≤ `max_degree`.
pub fn generated_dim<A: FiniteAlgebra>(alg: &A, max_degree: i32) -> usize {
    let gens: Vec<AlgElem> = alg
        .basis()
        .iter()
        .filter(|v| alg.degree(v) <= max_degree)
        .map(|v| AlgElem::basis(*v))
        .collect();
    product_closure(alg, &gens)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn catalan(n: u64) -> u64 {
    binomial(2 * n, n) / (n + 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CornerReport {
    pub n: usize,
    pub corner_dim: usize,
    pub arc_algebra_dim: usize,
    /// Per-degree dimensions agree.
    pub graded_match: bool,
    /// `None` when only dimensions were compared.
    pub structure_constants_match: Option<bool>,
    pub mismatches: Vec<String>,
}

impl CornerReport {
    pub fn holds(&self) -> bool {
        self.corner_dim == self.arc_algebra_dim
            && self.graded_match
            && self.structure_constants_match != Some(false)
    }
}

/// Compares the corner of 𝒦ⁿ at cup sequences with the arc algebra on n cups.
///
/// A cup sequence a corresponds to the diagram closing it; black circles of
/// W(b̃)ã sit on inner points and match circles of the smaller gluing after
/// shifting points down by n.
pub fn corner_isomorphism_check(k: &ColoredAlgebra, full: bool) -> Result<CornerReport> {
    let n = k.n();
    let h = ArcAlgebra::new(n)?;
    let mut mismatches = Vec::new();
    // corner index → arc algebra idempotent
    let mut to_h: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, s) in k
        .sequences()
        .iter()
        .enumerate()
        .filter(|(_, s)| s.is_cup_sequence())
    {
        let d = lambda_pairs(s)?;
        match h.diagram_index(&d) {
            Some(j) => {
                to_h.insert(i, j);
            }
            None => mismatches.push(format!("{s} has no matching cup diagram")),
        }
    }
    let translate = |v: &BasisVector| -> Option<BasisVector> {
        let (t, s) = (*to_h.get(&v.target)?, *to_h.get(&v.source)?);
        let g = k.glued(v.target, v.source);
        let small = h.glued(t, s);
        let mut mask = 0u64;
        for (i, circle) in g.circles().iter().enumerate() {
            if g.colors()?[i] != CircleColor::Black {
                continue;
            }
            let c = small.circle_of_point(circle[0] - n);
            if v.mask >> i & 1 == 1 {
                mask |= 1 << c;
            }
        }
        Some(BasisVector::new(t, s, mask))
    };
    let corner: Vec<BasisVector> = k
        .basis()
        .iter()
        .copied()
        .filter(|v| to_h.contains_key(&v.target) && to_h.contains_key(&v.source))
        .collect();
    for (i, &j) in &to_h {
        for (i2, &j2) in &to_h {
            let g = k.glued(*i, *i2);
            let black = g.colors().map_or(0, |c| {
                c.iter().filter(|&&c| c == CircleColor::Black).count()
            });
            if g.red() > 0 || g.green() != n || black != h.glued(j, j2).circle_count() {
                mismatches.push(format!("circle structure differs at ({i},{i2})"));
            }
        }
    }
    let mut corner_graded: BTreeMap<i32, usize> = BTreeMap::new();
    for v in &corner {
        *corner_graded.entry(k.degree(v)).or_insert(0) += 1;
        if let Some(w) = translate(v) {
            if h.degree(&w) != k.degree(v) {
                mismatches.push(format!("degree differs at {v:?}"));
            }
        }
    }
    let graded_match = corner_graded == hilbert_series(&h);
    let structure_constants_match = full.then(|| {
        let image = |e: &AlgElem| -> AlgElem {
            e.iter()
                .map(|(v, c)| (translate(v).expect("corner vector"), c.clone()))
                .collect()
        };
        let (h, translate, image) = (&h, &translate, &image);
        let bad: Vec<String> = corner
            .par_iter()
            .flat_map_iter(|f| {
                corner
                    .iter()
                    .filter(move |g| g.target == f.source)
                    .filter_map(move |g| {
                        let lhs = image(&k.mul_basis(f, g));
                        let rhs = h.mul_basis(&translate(f)?, &translate(g)?);
                        (lhs != rhs).then(|| format!("{f:?} * {g:?}"))
                    })
            })
            .collect();
        let ok = bad.is_empty();
        mismatches.extend(bad);
        ok
    });
    Ok(CornerReport {
        n,
        corner_dim: corner.len(),
        arc_algebra_dim: h.dim(),
        graded_match,
        structure_constants_match,
        mismatches,
    })
}
