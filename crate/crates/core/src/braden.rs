//! Braden's generators e, t, p, μ, their images in the colored algebra,
//! and exhaustive checks of the defining relations.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{inverse_unipotent, log_unipotent, nilpotency_index, AlgElem, FiniteAlgebra};
use crate::colored_algebra::ColoredAlgebra;
use crate::diagram::{
    arrow, diamonds, eta, ext_diagram, lambda_pairs_of, neighbours, Arc, CupDiagram, ExtSeq,
    HalfIndex,
};
use crate::error::{Error, Result};
use crate::linalg::product_closure;
use crate::rational::{frac, int, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BradenGen {
    Idempotent(ExtSeq),
    T {
        point: HalfIndex,
        vertex: ExtSeq,
    },
    /// p(x, y), living in e_x · 𝒦 · e_y.
    P(ExtSeq, ExtSeq),
    Mu(ExtSeq, ExtSeq),
}

impl fmt::Display for BradenGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BradenGen::Idempotent(x) => write!(f, "e({x})"),
            BradenGen::T { point, vertex } => write!(f, "t({point},{vertex})"),
            BradenGen::P(x, y) => write!(f, "p({x},{y})"),
            BradenGen::Mu(x, y) => write!(f, "mu({x},{y})"),
        }
    }
}

/// λ →(α,β) ν inside the box, with the parent (α′,β′) of (α,β).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub lambda: usize,
    pub nu: usize,
    pub pair: Arc,
    pub parent: Arc,
}

/// Checks of one relation family.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub instances: usize,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub n: usize,
    pub families: BTreeMap<String, FamilyReport>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.families.values().all(|f| f.failures.is_empty())
    }

    fn record(&mut self, family: &str, checks: Vec<(String, bool)>) {
        let entry = self.families.entry(family.to_string()).or_default();
        entry.instances += checks.len();
        entry.failures.extend(
            checks
                .into_iter()
                .filter(|(_, ok)| !ok)
                .map(|(label, _)| label),
        );
    }
}

/// Coefficients c₀ = 1, c_k = ½((−1)ᵏ/(k+1) − Σ_{l+m=k, 0<l,m<k} c_l c_m).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CkTable {
    coeffs: Vec<Q>,
}

impl CkTable {
    pub fn new(depth: usize) -> CkTable {
        let mut coeffs = vec![int(1)];
        for k in 1..=depth {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let cross: Q = (1..k).map(|l| &coeffs[l] * &coeffs[k - l]).sum();
            coeffs.push((frac(sign, k as i64 + 1) - cross) / int(2));
        }
        CkTable { coeffs }
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn get(&self, k: usize) -> &Q {
        &self.coeffs[k]
    }

    /// Σ_{k+m=j} c_k c_m = (−1)ʲ/(j+1) for every j in the table.
    pub fn convolution_holds(&self) -> bool {
        (0..self.coeffs.len()).all(|j| {
            let s: Q = (0..=j).map(|k| &self.coeffs[k] * &self.coeffs[j - k]).sum();
            s == frac(if j % 2 == 0 { 1 } else { -1 }, j as i64 + 1)
        })
    }
}

/// Images of the regraded generators along one edge, with their checks.
#[derive(Clone, Debug)]
pub struct RegradedEdge {
    pub edge: Edge,
    pub p_tilde: AlgElem,
    pub q_tilde: AlgElem,
    pub ln_mu_nu_lambda: AlgElem,
    pub ln_mu_lambda_nu: AlgElem,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RegradedReport {
    pub n: usize,
    pub edges: usize,
    pub ck: Vec<String>,
    /// Degrees found for (e, ln t, p̃, ln μ); `None` when not homogeneous.
    pub degrees: BTreeMap<String, Vec<Option<i32>>>,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuiverReport {
    pub labels: Vec<String>,
    pub adjacency: Vec<Vec<u8>>,
    pub degree_one_dims: Vec<Vec<usize>>,
    pub consistent: bool,
}

/// The evaluation map from Braden's generators into 𝒦ⁿ.
pub struct BradenMap<'a> {
    k: &'a ColoredAlgebra,
    vertices: Vec<ExtSeq>,
    diagrams: Vec<CupDiagram>,
    edges: Vec<Edge>,
}

impl<'a> BradenMap<'a> {
    pub fn new(k: &'a ColoredAlgebra) -> Result<BradenMap<'a>> {
        let vertices: Vec<ExtSeq> = k.sequences().iter().map(|s| s.extend()).collect();
        let diagrams = vertices
            .iter()
            .map(ext_diagram)
            .collect::<Result<Vec<_>>>()?;
        let mut map = BradenMap {
            k,
            vertices,
            diagrams,
            edges: Vec::new(),
        };
        for (i, lambda) in map.vertices.iter().enumerate() {
            for nu in neighbours(lambda).into_iter().filter(ExtSeq::in_box) {
                let Some(pair) = arrow(lambda, &nu)? else {
                    continue;
                };
                let parent = map.diagrams[i].parent(&pair)?.ok_or_else(|| {
                    Error::InvalidGenerator(format!("{lambda} -> {nu} has no parent pair"))
                })?;
                let j = map.index(&nu)?;
                map.edges.push(Edge {
                    lambda: i,
                    nu: j,
                    pair,
                    parent,
                });
            }
        }
        Ok(map)
    }

    pub fn algebra(&self) -> &ColoredAlgebra {
        self.k
    }

    pub fn vertices(&self) -> &[ExtSeq] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn index(&self, x: &ExtSeq) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == x)
            .ok_or_else(|| Error::InvalidGenerator(format!("{x} is not in the box")))
    }

    fn n(&self) -> usize {
        self.k.n()
    }

    fn half(&self, pos: usize) -> HalfIndex {
        HalfIndex::new(pos, self.n()).expect("window position")
    }

    /// The edge joining two vertex indices, in whichever direction it points.
    pub fn edge_between(&self, x: usize, y: usize) -> Option<&Edge> {
        self.edges
            .iter()
            .find(|e| (e.lambda, e.nu) == (x, y) || (e.lambda, e.nu) == (y, x))
    }

    fn x_at(&self, target: usize, source: usize, pos: usize) -> AlgElem {
        self.k
            .x_alpha(target, source, self.half(pos))
            .expect("left endpoint of an arc")
    }

    fn e(&self, i: usize) -> AlgElem {
        AlgElem::basis(self.k.k_idempotent(i))
    }

    /// t_{γ,λ} = e_λ − η(γ)·X on the circle of γ's arc.
    fn t(&self, pos: usize, i: usize) -> AlgElem {
        let partner = self.diagrams[i].partner(pos);
        let x = self.x_at(i, i, pos.min(partner));
        let e = self.e(i);
        &e - &x.scale(&int(eta(self.half(pos)) as i64))
    }

    fn p(&self, x: usize, y: usize) -> Result<AlgElem> {
        let edge = self
            .edge_between(x, y)
            .ok_or_else(|| Error::InvalidGenerator(format!("p({x},{y}) without an edge")))?;
        // Toward ν the X sits on the circle of (α,β); toward λ on its parent.
        let left = if edge.lambda == x {
            edge.parent.left
        } else {
            edge.pair.left
        };
        let half_x = self.x_at(x, y, left).scale(&frac(1, 2));
        Ok(&self.k.ones(x, y) + &half_x)
    }

    fn mu(&self, x: usize, y: usize) -> Result<AlgElem> {
        let edge = self
            .edge_between(x, y)
            .ok_or_else(|| Error::InvalidGenerator(format!("mu({x},{y}) without an edge")))?;
        // At λ: the λ-pairs (α,β), (α′,β′). At ν they become (α′,α), (β,β′).
        let (first, second) = if edge.lambda == x {
            (edge.pair.left, edge.parent.left)
        } else {
            (edge.parent.left, edge.pair.right)
        };
        let u = self.x_at(x, x, first);
        let w = self.x_at(x, x, second);
        let uw = self.k.star(&u, &w)?;
        Ok(&(&(&self.e(x) + &u) + &w) + &uw)
    }

    pub fn eval(&self, g: &BradenGen) -> Result<AlgElem> {
        match g {
            BradenGen::Idempotent(x) => Ok(self.e(self.index(x)?)),
            BradenGen::T { point, vertex } => {
                if point.n() != self.n() {
                    return Err(Error::InvalidGenerator(format!(
                        "{point} is not a window point for n = {}",
                        self.n()
                    )));
                }
                Ok(self.t(point.pos(), self.index(vertex)?))
            }
            BradenGen::P(x, y) => self.p(self.index(x)?, self.index(y)?),
            BradenGen::Mu(x, y) => self.mu(self.index(x)?, self.index(y)?),
        }
    }

    fn points(&self) -> std::ops::RangeInclusive<usize> {
        1..=4 * self.n()
    }

    fn label(&self, i: usize) -> String {
        self.vertices[i].to_string()
    }

    fn mul(&self, f: &AlgElem, g: &AlgElem) -> AlgElem {
        self.k.mul(f, g)
    }

    /// Both directed orderings of every edge.
    fn ordered_edges(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .flat_map(|e| [(e.lambda, e.nu), (e.nu, e.lambda)])
            .collect()
    }

    /// Evaluates every instance of every relation family.
    pub fn check_relations(&self) -> Result<RelationReport> {
        let k = self.k;
        let m = self.vertices.len();
        let mut report = RelationReport {
            n: self.n(),
            ..Default::default()
        };

        let sum = (0..m).fold(AlgElem::zero(), |acc, i| acc + self.e(i));
        report.record(
            "idempotents_sum_to_unit",
            vec![("sum of e".into(), sum == k.unit())],
        );

        let orth = (0..m)
            .flat_map(|i| (0..m).map(move |j| (i, j)))
            .map(|(i, j)| {
                let expected = if i == j { self.e(i) } else { AlgElem::zero() };
                (
                    format!("e({})e({})", self.label(i), self.label(j)),
                    self.mul(&self.e(i), &self.e(j)) == expected,
                )
            })
            .collect();
        report.record("idempotents_orthogonal", orth);

        let ordered = self.ordered_edges();
        let mu_p = ordered
            .par_iter()
            .map(|&(x, y)| {
                let lhs = self.mu(x, y)?;
                let rhs = &self.e(x) + &self.mul(&self.p(x, y)?, &self.p(y, x)?);
                Ok((
                    format!("mu({},{})", self.label(x), self.label(y)),
                    lhs == rhs,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        report.record("mu_from_p", mu_p);

        let t_p = ordered
            .par_iter()
            .map(|&(x, y)| {
                let p = self.p(x, y)?;
                Ok(self
                    .points()
                    .map(|g| {
                        let lhs = self.mul(&self.t(g, x), &p);
                        let rhs = self.mul(&p, &self.t(g, y));
                        (
                            format!("t({}) p({},{})", self.half(g), self.label(x), self.label(y)),
                            lhs == rhs,
                        )
                    })
                    .collect::<Vec<_>>())
            })
            .collect::<Result<Vec<_>>>()?;
        report.record("t_p_commute", t_p.into_iter().flatten().collect());

        let t_blocks = (0..m)
            .into_par_iter()
            .flat_map_iter(|x| {
                (0..m).filter(move |&y| y != x).flat_map(move |y| {
                    self.points().flat_map(move |a| {
                        self.points().map(move |b| {
                            let ok = self.mul(&self.t(a, x), &self.t(b, y)).is_zero();
                            (
                                format!(
                                    "t({},{}) t({},{})",
                                    self.half(a),
                                    self.label(x),
                                    self.half(b),
                                    self.label(y)
                                ),
                                ok,
                            )
                        })
                    })
                })
            })
            .collect();
        report.record("t_different_vertices_vanish", t_blocks);

        let t_comm = (0..m)
            .into_par_iter()
            .flat_map_iter(|x| {
                self.points().flat_map(move |a| {
                    self.points().filter(move |&b| b > a).map(move |b| {
                        let (ta, tb) = (self.t(a, x), self.t(b, x));
                        (
                            format!(
                                "t({}) t({}) at {}",
                                self.half(a),
                                self.half(b),
                                self.label(x)
                            ),
                            self.mul(&ta, &tb) == self.mul(&tb, &ta),
                        )
                    })
                })
            })
            .collect();
        report.record("t_commute", t_comm);

        let t_pairs = (0..m)
            .flat_map(|x| {
                self.diagrams[x].arcs().iter().map(move |arc| {
                    let prod = self.mul(&self.t(arc.left, x), &self.t(arc.right, x));
                    (
                        format!("t t on pair {arc} of {}", self.label(x)),
                        prod == self.e(x),
                    )
                })
            })
            .collect();
        report.record("t_pair_inverse", t_pairs);

        let n = self.n();
        let outer = (0..m)
            .flat_map(|x| {
                self.points()
                    .filter(move |&g| g <= n || g > 3 * n)
                    .map(move |g| {
                        (
                            format!("t({},{})", self.half(g), self.label(x)),
                            self.t(g, x) == self.e(x),
                        )
                    })
            })
            .collect();
        report.record("t_outer_trivial", outer);

        let mu_t = self
            .edges
            .par_iter()
            .map(|edge| {
                let (l, v) = (edge.lambda, edge.nu);
                let sign = eta(self.half(edge.pair.right));
                let power = |x: usize, y: usize| -> Result<AlgElem> {
                    let mu = self.mu(x, y)?;
                    if sign > 0 {
                        Ok(mu)
                    } else {
                        inverse_unipotent(k, &self.e(x), &mu)
                    }
                };
                let at_nu = self.mul(&self.t(edge.pair.left, v), &self.t(edge.parent.right, v));
                let at_lambda = self.mul(&self.t(edge.pair.left, l), &self.t(edge.parent.right, l));
                Ok(vec![
                    (
                        format!("mu({},{})^eta", self.label(v), self.label(l)),
                        power(v, l)? == at_nu,
                    ),
                    (
                        format!("mu({},{})^eta", self.label(l), self.label(v)),
                        power(l, v)? == at_lambda,
                    ),
                ])
            })
            .collect::<Result<Vec<_>>>()?;
        report.record("mu_as_t_product", mu_t.into_iter().flatten().collect());

        let mut square = Vec::new();
        let mut zero = Vec::new();
        for d in diamonds(n)? {
            let outside = d.vertices.iter().position(|v| !v.in_box());
            match outside {
                None => {
                    let idx = d
                        .vertices
                        .iter()
                        .map(|v| self.index(v))
                        .collect::<Result<Vec<_>>>()?;
                    for r in 0..4 {
                        // Paths from idx[r] to the opposite vertex, through either side.
                        let (from, side1, to, side2) =
                            (idx[r], idx[(r + 1) % 4], idx[(r + 2) % 4], idx[(r + 3) % 4]);
                        let lhs = self.mul(&self.p(to, side1)?, &self.p(side1, from)?);
                        let rhs = self.mul(&self.p(to, side2)?, &self.p(side2, from)?);
                        square.push((
                            format!("diamond {} -> {}", self.label(from), self.label(to)),
                            lhs == rhs,
                        ));
                    }
                }
                Some(o) => {
                    let at = |s: usize| self.index(&d.vertices[(o + s) % 4]);
                    let (first, opposite, last) = (at(1)?, at(2)?, at(3)?);
                    let forward = self.mul(&self.p(first, opposite)?, &self.p(opposite, last)?);
                    let backward = self.mul(&self.p(last, opposite)?, &self.p(opposite, first)?);
                    let tag = format!(
                        "{} via {} to {}",
                        self.label(first),
                        self.label(opposite),
                        self.label(last)
                    );
                    zero.push((format!("forward {tag}"), forward.is_zero()));
                    zero.push((format!("backward {tag}"), backward.is_zero()));
                }
            }
        }
        report.record("diamond_commutes", square);
        report.record("diamond_out_of_box_vanishes", zero);
        Ok(report)
    }

    /// All ℰ-images of the generators e, t, p, μ.
    pub fn generator_images(&self) -> Result<Vec<AlgElem>> {
        let m = self.vertices.len();
        let mut out: Vec<AlgElem> = (0..m).map(|i| self.e(i)).collect();
        for i in 0..m {
            out.extend(self.points().map(|g| self.t(g, i)));
        }
        for (x, y) in self.ordered_edges() {
            out.push(self.p(x, y)?);
            out.push(self.mu(x, y)?);
        }
        Ok(out)
    }

    /// Whether products of generator images span 𝒦ⁿ.
    pub fn generation_check(&self) -> Result<(usize, usize)> {
        let gens = self.generator_images()?;
        Ok((product_closure(self.k, &gens), self.k.dim()))
    }

    /// x = qp and y = pq along every edge, with their nilpotency indices.
    pub fn nilpotency(&self) -> Result<Vec<(usize, usize)>> {
        self.edges
            .iter()
            .map(|e| {
                let p = self.p(e.nu, e.lambda)?;
                let q = self.p(e.lambda, e.nu)?;
                let x = self.mul(&q, &p);
                let y = self.mul(&p, &q);
                let mu_minus_e = &self.mu(e.lambda, e.nu)? - &self.e(e.lambda);
                let ix = nilpotency_index(self.k, &x)?;
                nilpotency_index(self.k, &mu_minus_e)?;
                Ok((ix, nilpotency_index(self.k, &y)?))
            })
            .collect()
    }

    /// p̃, q̃ and the logarithms of μ for one edge.
    pub fn regraded_edge(&self, edge: &Edge) -> Result<RegradedEdge> {
        let (l, v) = (edge.lambda, edge.nu);
        let p = self.p(v, l)?;
        let q = self.p(l, v)?;
        let x = self.mul(&q, &p);
        let bound = self.k.dim() + 1;
        let mut powers = vec![self.e(l)];
        loop {
            let next = self.mul(powers.last().expect("nonempty"), &x);
            if next.is_zero() {
                break;
            }
            if powers.len() > bound {
                return Err(Error::NonTerminating(bound));
            }
            powers.push(next);
        }
        let table = CkTable::new(powers.len());
        let mut p_tilde = AlgElem::zero();
        let mut q_tilde = AlgElem::zero();
        for (k, power) in powers.iter().enumerate() {
            p_tilde += &self.mul(&p, power).scale(table.get(k));
            q_tilde += &self.mul(power, &q).scale(table.get(k));
        }
        let ln_mu_nu_lambda = log_unipotent(self.k, &self.e(v), &self.mu(v, l)?)?;
        let ln_mu_lambda_nu = log_unipotent(self.k, &self.e(l), &self.mu(l, v)?)?;
        Ok(RegradedEdge {
            edge: *edge,
            p_tilde,
            q_tilde,
            ln_mu_nu_lambda,
            ln_mu_lambda_nu,
        })
    }

    /// ln t, the regraded p̃, and ln μ; checks p̃q̃ = ln μ(ν,λ), q̃p̃ = ln μ(λ,ν)
    /// and homogeneity.
    pub fn regraded_generators(&self) -> Result<(RegradedReport, Vec<AlgElem>)> {
        let k = self.k;
        let table = CkTable::new(3);
        let mut report = RegradedReport {
            n: self.n(),
            edges: self.edges.len(),
            ..Default::default()
        };
        report.ck = table
            .coeffs()
            .iter()
            .take(4)
            .map(crate::rational::to_string)
            .collect();
        let mut gens = Vec::new();
        let mut degrees: BTreeMap<String, Vec<Option<i32>>> = BTreeMap::new();
        for i in 0..self.vertices.len() {
            let e = self.e(i);
            degrees
                .entry("e".into())
                .or_default()
                .push(k.homogeneous_degree(&e));
            gens.push(e.clone());
            for g in self.points() {
                let ln_t = log_unipotent(k, &e, &self.t(g, i))?;
                if !ln_t.is_zero() {
                    degrees
                        .entry("ln_t".into())
                        .or_default()
                        .push(k.homogeneous_degree(&ln_t));
                    gens.push(ln_t);
                }
            }
        }
        for edge in &self.edges {
            let r = self.regraded_edge(edge)?;
            let tag = format!("{} -> {}", self.label(edge.lambda), self.label(edge.nu));
            if self.mul(&r.p_tilde, &r.q_tilde) != r.ln_mu_nu_lambda {
                report
                    .failures
                    .push(format!("p~q~ != ln mu(nu,lambda) on {tag}"));
            }
            if self.mul(&r.q_tilde, &r.p_tilde) != r.ln_mu_lambda_nu {
                report
                    .failures
                    .push(format!("q~p~ != ln mu(lambda,nu) on {tag}"));
            }
            let d = degrees.entry("p_tilde".into()).or_default();
            d.push(k.homogeneous_degree(&r.p_tilde));
            d.push(k.homogeneous_degree(&r.q_tilde));
            // ln μ vanishes when both of its circles are green.
            let d = degrees.entry("ln_mu".into()).or_default();
            for ln_mu in [&r.ln_mu_nu_lambda, &r.ln_mu_lambda_nu]
                .into_iter()
                .filter(|x| !x.is_zero())
            {
                d.push(k.homogeneous_degree(ln_mu));
            }
            gens.extend([r.p_tilde, r.q_tilde, r.ln_mu_nu_lambda, r.ln_mu_lambda_nu]);
        }
        for (name, expected) in [("e", 0), ("ln_t", 2), ("p_tilde", 1), ("ln_mu", 2)] {
            let found = degrees.get(name).map(Vec::as_slice).unwrap_or_default();
            if found.iter().any(|d| *d != Some(expected)) {
                report
                    .failures
                    .push(format!("{name} is not homogeneous of degree {expected}"));
            }
        }
        for (name, found) in &degrees {
            let mut distinct = found.clone();
            distinct.sort();
            distinct.dedup();
            report.degrees.insert(name.clone(), distinct);
        }
        Ok((report, gens))
    }

    /// Adjacency of ↔ on the box, against degree-1 dimensions of each _b𝒦_a.
    pub fn ext_quiver(&self) -> QuiverReport {
        let m = self.vertices.len();
        let mut adjacency = vec![vec![0u8; m]; m];
        for e in &self.edges {
            adjacency[e.lambda][e.nu] = 1;
            adjacency[e.nu][e.lambda] = 1;
        }
        let degree_one_dims: Vec<Vec<usize>> = (0..m)
            .map(|t| {
                (0..m)
                    .map(|s| {
                        self.k
                            .block(t, s)
                            .iter()
                            .filter(|v| self.k.degree(v) == 1)
                            .count()
                    })
                    .collect()
            })
            .collect();
        let consistent =
            (0..m).all(|t| (0..m).all(|s| degree_one_dims[t][s] == adjacency[t][s] as usize));
        QuiverReport {
            labels: self.vertices.iter().map(|v| v.to_string()).collect(),
            adjacency,
            degree_one_dims,
            consistent,
        }
    }
}

/// For every arrow λ →(α,β) ν out of the box vertices whose pair has a parent
/// (α′,β′): ν has pairs (α′,α), (β,β′) and η(β) = −η(β′).
/// Returns (arrows checked, failures).
pub fn parent_swap_check(n: usize) -> Result<(usize, Vec<String>)> {
    let mut checked = 0;
    let mut failures = Vec::new();
    for s in crate::diagram::enumerate_sequences(n)? {
        let lambda = s.extend();
        let diagram = ext_diagram(&lambda)?;
        for nu in neighbours(&lambda) {
            let Some(pair) = arrow(&lambda, &nu)? else {
                continue;
            };
            let Some(parent) = diagram.parent(&pair)? else {
                continue;
            };
            checked += 1;
            let (nu_pairs, _) = lambda_pairs_of(nu.signs());
            let swapped = nu_pairs.contains(&Arc::new(parent.left, pair.left))
                && nu_pairs.contains(&Arc::new(pair.right, parent.right));
            let h = |p| HalfIndex::new(p, n).expect("window point");
            if !swapped || eta(h(pair.right)) != -eta(h(parent.right)) {
                failures.push(format!("{lambda} -> {nu} via {pair}"));
            }
        }
    }
    Ok((checked, failures))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ck_table_values() {
        let t = CkTable::new(8);
        assert_eq!(t.get(0), &int(1));
        assert_eq!(t.get(1), &frac(-1, 4));
        assert_eq!(t.get(2), &frac(13, 96));
        assert!(t.convolution_holds());
        assert!(!num::Zero::is_zero(t.get(3)));
    }
}
