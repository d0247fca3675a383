//! Tanisaki's ideal of elementary symmetric polynomials in variable subsets,
//! for a composition μ of N, with the interpolating polynomials f_{k,l}
//! built by long division. The quotient ring presents the cohomology of
//! the Springer fibre; we compute its graded dimensions.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Rref, SparseVec};
use crate::rational::{int, Q};

type Exponents = Vec<u32>;

/// A polynomial with rational coefficients in a fixed number of variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    vars: usize,
    terms: BTreeMap<Exponents, Q>,
}

impl Poly {
    pub fn zero(vars: usize) -> Poly {
        Poly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: Q) -> Poly {
        Poly::monomial(vec![0; vars], c)
    }

    pub fn var(vars: usize, i: usize) -> Poly {
        let mut e = vec![0; vars];
        e[i] = 1;
        Poly::monomial(e, int(1))
    }

    pub fn monomial(exponents: Exponents, c: Q) -> Poly {
        let mut p = Poly::zero(exponents.len());
        p.add_term(exponents, c);
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Q)> {
        self.terms.iter()
    }

    fn add_term(&mut self, e: Exponents, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, c: &Q) -> Poly {
        let mut out = Poly::zero(self.vars);
        for (e, d) in &self.terms {
            out.add_term(e.clone(), d * c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.vars);
        for (e, c) in &self.terms {
            for (f, d) in &other.terms {
                let sum = e.iter().zip(f).map(|(a, b)| a + b).collect();
                out.add_term(sum, c * d);
            }
        }
        out
    }

    /// Total degree of a homogeneous polynomial; `None` for zero or mixed.
    pub fn degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(point).fold(c.clone(), |acc, (&k, x)| {
                    acc * num::pow(x.clone(), k as usize)
                })
            })
            .fold(Q::zero(), |a, b| a + b)
    }

    /// Substitutes zero for every variable at index ≥ `keep` and drops them.
    pub fn truncate_vars(&self, keep: usize) -> Poly {
        let mut out = Poly::zero(keep);
        for (e, c) in &self.terms {
            if e[keep..].iter().all(|&k| k == 0) {
                out.add_term(e[..keep].to_vec(), c.clone());
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let negative = *c < Q::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{k}", i + 1)
                    }
                })
                .collect();
            if vars.is_empty() || !abs.is_one() {
                write!(f, "{abs}")?;
                if !vars.is_empty() {
                    write!(f, "*")?;
                }
            }
            write!(f, "{}", vars.join("*"))?;
        }
        Ok(())
    }
}

/// e_l of the given variables.
pub fn elementary(vars: usize, subset: &[usize], l: usize) -> Poly {
    let mut out = Poly::zero(vars);
    for combo in subsets(subset.len(), l) {
        let mut e = vec![0; vars];
        for i in combo {
            e[subset[i]] = 1;
        }
        out.add_term(e, int(1));
    }
    out
}

/// All k-subsets of 0..n in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// A composition of N with positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Composition> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?}: parts must be positive"
            )));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// N! / Π μ_i!
    pub fn multinomial(&self) -> u128 {
        let fact = |k: usize| (1..=k as u128).product::<u128>();
        self.0
            .iter()
            .fold(fact(self.total()), |acc, &m| acc / fact(m))
    }
}

impl std::str::FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Composition> {
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("{p:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Conjugate of the partition obtained by sorting the parts.
pub fn dual_partition(mu: &Composition) -> Vec<usize> {
    let largest = mu.parts().iter().copied().max().unwrap_or(0);
    (1..=largest)
        .map(|i| mu.parts().iter().filter(|&&m| m >= i).count())
        .collect()
}

/// μ′_{N−k+1} + … + μ′_{r′}: the columns of the dual partition from N−k+1 on.
fn dual_tail(dual: &[usize], n: usize, k: usize) -> usize {
    dual.iter().skip(n - k).sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub k: usize,
    pub l: usize,
    pub subset: Vec<usize>,
    #[serde(serialize_with = "serialize_poly")]
    pub poly: Poly,
}

fn serialize_poly<S: serde::Serializer>(p: &Poly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealBasis {
    pub mu: Composition,
    pub dual: Vec<usize>,
    pub generators: Vec<Generator>,
}

impl IdealBasis {
    pub fn vars(&self) -> usize {
        self.mu.total()
    }

    /// The (k, l) pairs that occur, each once.
    pub fn kinds(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self.generators.iter().map(|g| (g.k, g.l)).collect();
        out.dedup();
        out
    }
}

/// Pairs (k, l) with k ≥ l > k − (μ′_{N−k+1} + … + μ′_{r′}) and l > 0.
pub fn allowed_pairs(mu: &Composition) -> Vec<(usize, usize)> {
    let n = mu.total();
    let dual = dual_partition(mu);
    (1..=n)
        .flat_map(|k| {
            let tail = dual_tail(&dual, n, k);
            let lowest = (k + 1).saturating_sub(tail).max(1);
            (lowest..=k).map(move |l| (k, l))
        })
        .collect()
}

pub fn tanisaki_generators(mu: &Composition) -> IdealBasis {
    let n = mu.total();
    let generators = allowed_pairs(mu)
        .into_iter()
        .flat_map(|(k, l)| {
            subsets(n, k).into_iter().map(move |subset| Generator {
                k,
                l,
                poly: elementary(n, &subset, l),
                subset,
            })
        })
        .collect();
    IdealBasis {
        mu: mu.clone(),
        dual: dual_partition(mu),
        generators,
    }
}

/// Polynomials in t, coefficient i multiplying tⁱ.
type TPoly = Vec<Poly>;

fn tpoly_mul(a: &TPoly, b: &TPoly, vars: usize) -> TPoly {
    let mut out = vec![Poly::zero(vars); a.len() + b.len() - 1];
    for (i, p) in a.iter().enumerate() {
        for (j, q) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&p.mul(q));
        }
    }
    out
}

/// Remainder of division by a monic divisor.
fn tpoly_rem(mut num: TPoly, divisor: &TPoly) -> TPoly {
    let d = divisor.len() - 1;
    while num.len() > d {
        let lead = num.pop().expect("nonempty");
        let shift = num.len() - d;
        for (i, c) in divisor[..d].iter().enumerate() {
            num[shift + i] = num[shift + i].sub(&lead.mul(c));
        }
    }
    num
}

/// The interpolating polynomial for a pair (k, l), in variables
/// x₁..x_N followed by y₁..y_r.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interpolant {
    pub k: usize,
    pub l: usize,
    /// Multiplicity of each (t + y_i) in the divisor.
    pub multiplicities: Vec<usize>,
    pub poly: Poly,
}

impl Interpolant {
    pub fn x_vars(&self) -> usize {
        self.poly.vars() - self.multiplicities.len()
    }

    /// f(x, 0) = e_l(x₁..x_k).
    pub fn reduces_to_generator(&self) -> bool {
        let n = self.x_vars();
        let subset: Vec<usize> = (0..self.k).collect();
        self.poly.truncate_vars(n) == elementary(n, &subset, self.l)
    }
}

/// Divides Π_{i≤k}(t + x_i) by Π_i (t + y_i)^{m_i} with m_i = max(μ_i − N + k, 0)
/// and keeps the coefficient of t^{k−l} in the remainder.
pub fn f_construction(k: usize, l: usize, mu: &Composition) -> Result<Interpolant> {
    if !allowed_pairs(mu).contains(&(k, l)) {
        return Err(Error::InvalidGenerator(format!(
            "(k, l) = ({k}, {l}) is outside the allowed range for {mu}"
        )));
    }
    let n = mu.total();
    let r = mu.parts().len();
    let vars = n + r;
    let multiplicities: Vec<usize> = mu
        .parts()
        .iter()
        .map(|&m| (m + k).saturating_sub(n))
        .collect();
    let one = Poly::constant(vars, int(1));
    let linear = |var: usize| vec![Poly::var(vars, var), one.clone()];
    let numerator = (0..k).fold(vec![one.clone()], |acc, i| {
        tpoly_mul(&acc, &linear(i), vars)
    });
    let divisor = multiplicities
        .iter()
        .enumerate()
        .flat_map(|(i, &m)| std::iter::repeat_n(n + i, m))
        .fold(vec![one.clone()], |acc, y| {
            tpoly_mul(&acc, &linear(y), vars)
        });
    let remainder = tpoly_rem(numerator, &divisor);
    let poly = remainder
        .get(k - l)
        .cloned()
        .unwrap_or_else(|| Poly::zero(vars));
    Ok(Interpolant {
        k,
        l,
        multiplicities,
        poly,
    })
}

/// Evaluates f at random points where μ_i of the x-coordinates equal a_i
/// and y_i = a_i; returns the number of points where f does not vanish.
pub fn vanishing_failures(f: &Interpolant, mu: &Composition, points: usize, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = mu.parts().len();
    (0..points)
        .filter(|_| {
            // distinct values so no coordinate equals a second a_j by accident
            let mut values: Vec<i64> = Vec::with_capacity(r);
            while values.len() < r {
                let v = rng.gen_range(-50..=50);
                if !values.contains(&v) {
                    values.push(v);
                }
            }
            let mut xs: Vec<i64> = mu
                .parts()
                .iter()
                .zip(&values)
                .flat_map(|(&m, &a)| std::iter::repeat_n(a, m))
                .collect();
            xs.shuffle(&mut rng);
            let point: Vec<Q> = xs.into_iter().chain(values).map(int).collect();
            !f.poly.eval(&point).is_zero()
        })
        .count()
}

/// Exponent vectors of total degree d in `vars` variables.
pub fn monomials(vars: usize, d: u32) -> Vec<Exponents> {
    if vars == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    (0..=d)
        .rev()
        .flat_map(|first| {
            monomials(vars - 1, d - first)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientDims {
    /// Dimension of each degree slice, starting at degree 0, up to the top.
    pub hilbert: Vec<usize>,
    pub total: usize,
    pub top: usize,
}

impl QuotientDims {
    pub fn top_dim(&self) -> usize {
        self.hilbert[self.top]
    }

    pub fn is_palindromic(&self) -> bool {
        self.hilbert.iter().eq(self.hilbert.iter().rev())
    }
}

/// Dimension of degree d of S/I, with deg x_i = 1.
fn slice_dim(ideal: &IdealBasis, d: u32) -> usize {
    let vars = ideal.vars();
    let basis = monomials(vars, d);
    let column: BTreeMap<&Exponents, usize> =
        basis.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let rows: Vec<SparseVec> = ideal
        .generators
        .par_iter()
        .filter(|g| g.l as u32 <= d)
        .flat_map_iter(|g| {
            monomials(vars, d - g.l as u32).into_iter().map(|m| {
                Poly::monomial(m, int(1))
                    .mul(&g.poly)
                    .terms()
                    .map(|(e, c)| (column[e], c.clone()))
                    .collect()
            })
        })
        .collect();
    let mut rref = Rref::new();
    for row in rows {
        rref.insert(row);
    }
    basis.len() - rref.rank()
}

/// Graded dimensions of S/I up to the first zero slice.
///
/// Once a slice vanishes every higher one does too, since the ideal then
/// contains all monomials of that degree.
pub fn graded_quotient_dims(ideal: &IdealBasis, cutoff: usize) -> Result<QuotientDims> {
    let mut hilbert = Vec::new();
    for d in 0..=cutoff {
        let dim = slice_dim(ideal, d as u32);
        if dim == 0 {
            let top = hilbert
                .len()
                .checked_sub(1)
                .ok_or_else(|| Error::Degenerate("quotient is zero".into()))?;
            let total = hilbert.iter().sum();
            return Ok(QuotientDims {
                hilbert,
                total,
                top,
            });
        }
        hilbert.push(dim);
    }
    let dim = *hilbert.last().expect("cutoff slice");
    Err(Error::NonzeroTail {
        degree: cutoff,
        dim,
    })
}

/// A cutoff that is always large enough: the top degree of the coinvariant
/// algebra plus one.
pub fn default_cutoff(mu: &Composition) -> usize {
    let n = mu.total();
    n * (n - 1) / 2 + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_arithmetic() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let s = x.add(&y);
        let sq = s.mul(&s);
        assert_eq!(sq.degree(), Some(2));
        assert_eq!(sq.eval(&[int(2), int(3)]), int(25));
        assert!(s.sub(&s).is_zero());
        assert_eq!(sq.to_string(), "x1^2 + 2*x1*x2 + x2^2");
        assert_eq!(Poly::zero(1).degree(), None);
    }

    #[test]
    fn subsets_and_monomials() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(2, 3).len(), 0);
        assert_eq!(monomials(3, 2).len(), 6);
        assert_eq!(monomials(2, 0), vec![vec![0, 0]]);
        assert_eq!(elementary(3, &[0, 1, 2], 2).terms().count(), 3);
    }

    #[test]
    fn remainder_by_monic() {
        // (t + x)² ÷ (t + x) leaves nothing
        let vars = 1;
        let lin = vec![Poly::var(vars, 0), Poly::constant(vars, int(1))];
        let sq = tpoly_mul(&lin, &lin, vars);
        let rem = tpoly_rem(sq, &lin);
        assert!(rem.iter().all(Poly::is_zero));
    }

    #[test]
    fn composition_parsing() {
        let mu: Composition = "2, 2".parse().unwrap();
        assert_eq!(mu.parts(), &[2, 2]);
        assert_eq!(mu.multinomial(), 6);
        assert!("2,0".parse::<Composition>().is_err());
        assert!("".parse::<Composition>().is_err());
    }
}
