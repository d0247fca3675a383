//! The arrow relation λ → ν between window sequences and the diamonds it spans.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::cup::{lambda_pairs_of, Arc};
use super::sequence::{enumerate_sequences, ExtSeq, Sign};
use crate::error::{Error, Result};

/// The λ-pair (α, β) with λ →(α,β) ν, if any.
///
/// The sequences must differ exactly at {α, β}, with φ_ν(α) = + and
/// φ_ν(β) = −, and (α, β) must be a λ-pair.
pub fn arrow(lambda: &ExtSeq, nu: &ExtSeq) -> Result<Option<Arc>> {
    if lambda.len() != nu.len() {
        return Err(Error::SizeMismatch(format!(
            "{} vs {} positions",
            lambda.len(),
            nu.len()
        )));
    }
    let diff: Vec<usize> = (1..=lambda.len())
        .filter(|&p| lambda.at(p) != nu.at(p))
        .collect();
    if diff.len() != 2 {
        return Ok(None);
    }
    let (a, b) = (diff[0], diff[1]);
    if nu.at(a) != Sign::Plus || nu.at(b) != Sign::Minus {
        return Ok(None);
    }
    let pair = Arc::new(a, b);
    let (pairs, _) = lambda_pairs_of(lambda.signs());
    Ok(pairs.contains(&pair).then_some(pair))
}

/// λ ↔ ν.
pub fn adjacent(lambda: &ExtSeq, nu: &ExtSeq) -> Result<bool> {
    Ok(arrow(lambda, nu)?.is_some() || arrow(nu, lambda)?.is_some())
}

/// Every window sequence ν with λ ↔ ν, in or out of the box.
pub fn neighbours(lambda: &ExtSeq) -> Vec<ExtSeq> {
    let mut out = BTreeSet::new();
    let (pairs, _) = lambda_pairs_of(lambda.signs());
    for p in &pairs {
        out.insert(lambda.flipped(p.left, p.right));
    }
    // ν → λ: a ν-pair (i, j) with λ(i) = +, λ(j) = −.
    for i in 1..=lambda.len() {
        if lambda.at(i) != Sign::Plus {
            continue;
        }
        for j in i + 1..=lambda.len() {
            if lambda.at(j) != Sign::Minus {
                continue;
            }
            let nu = lambda.flipped(i, j);
            if arrow(&nu, lambda).expect("same length").is_some() {
                out.insert(nu);
            }
        }
    }
    out.into_iter().collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diamond {
    /// A 4-cycle λ ↔ λ′ ↔ λ″ ↔ λ‴ ↔ λ.
    pub vertices: [ExtSeq; 4],
    pub in_box: bool,
}

impl Diamond {
    pub fn out_of_box_count(&self) -> usize {
        self.vertices.iter().filter(|v| !v.in_box()).count()
    }

    /// Positions where the four vertices do not all agree.
    pub fn support(&self) -> Vec<usize> {
        let first = &self.vertices[0];
        (1..=first.len())
            .filter(|&p| self.vertices.iter().any(|v| v.at(p) != first.at(p)))
            .collect()
    }
}

/// All diamonds with at least three vertices in the box, each reported once.
///
/// The graph searched is the ↔ graph on the in-box extended sequences and
/// their window neighbours; a 4-cycle is identified by its vertex set.
pub fn diamonds(n: usize) -> Result<Vec<Diamond>> {
    let inside: Vec<ExtSeq> = enumerate_sequences(n)?.iter().map(|s| s.extend()).collect();
    let mut adj: BTreeMap<ExtSeq, BTreeSet<ExtSeq>> = BTreeMap::new();
    for v in &inside {
        for w in neighbours(v) {
            adj.entry(v.clone()).or_default().insert(w.clone());
            adj.entry(w).or_default().insert(v.clone());
        }
    }
    let vertices: Vec<ExtSeq> = adj.keys().cloned().collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (i, u) in vertices.iter().enumerate() {
        for w in &vertices[i + 1..] {
            if adj[u].contains(w) {
                continue;
            }
            let common: Vec<&ExtSeq> = adj[u].intersection(&adj[w]).collect();
            for (k, v1) in common.iter().enumerate() {
                for v2 in &common[k + 1..] {
                    let cycle = [u.clone(), (*v1).clone(), w.clone(), (*v2).clone()];
                    let outside = cycle.iter().filter(|v| !v.in_box()).count();
                    if outside > 1 {
                        continue;
                    }
                    let mut key: Vec<ExtSeq> = cycle.to_vec();
                    key.sort();
                    if seen.insert(key) {
                        out.push(Diamond {
                            in_box: outside == 0,
                            vertices: cycle,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ext(s: &str) -> ExtSeq {
        s.parse().unwrap()
    }

    #[test]
    fn arrow_examples() {
        assert_eq!(
            arrow(&ext("--++"), &ext("-+-+")).unwrap(),
            Some(Arc::new(2, 3))
        );
        assert_eq!(arrow(&ext("-+-+"), &ext("--++")).unwrap(), None);
        assert_eq!(arrow(&ext("--++"), &ext("--++")).unwrap(), None);
        assert_eq!(arrow(&ext("--++--++"), &ext("-+-++-+-")).unwrap(), None);
        assert!(arrow(&ext("--++"), &ext("--++--++")).is_err());
    }

    #[test]
    fn arrow_requires_a_lambda_pair() {
        // Positions 1 and 4 differ in the right pattern but (1,4) is not a pair of -+-+.
        assert_eq!(arrow(&ext("-+-+"), &ext("++--")).unwrap(), None);
    }

    #[test]
    fn n1_has_no_diamonds() {
        assert!(diamonds(1).unwrap().is_empty());
    }

    #[test]
    fn diamond_shape_n2_n3() {
        for n in 2..=3 {
            let all = diamonds(n).unwrap();
            assert!(!all.is_empty());
            for d in &all {
                for k in 0..4 {
                    assert!(adjacent(&d.vertices[k], &d.vertices[(k + 1) % 4]).unwrap());
                }
                let distinct: BTreeSet<&ExtSeq> = d.vertices.iter().collect();
                assert_eq!(distinct.len(), 4);
                let support = d.support();
                assert_eq!(support.len(), 4, "{d:?}");
                for v in &d.vertices {
                    let plus = support.iter().filter(|&&p| v.at(p) == Sign::Plus).count();
                    assert_eq!(plus, 2);
                }
                assert_eq!(d.in_box, d.out_of_box_count() == 0);
            }
            assert!(all.iter().any(|d| d.in_box));
            assert!(all.iter().any(|d| !d.in_box));
        }
    }

    #[test]
    fn neighbours_are_symmetric_and_irreflexive() {
        for s in enumerate_sequences(3).unwrap() {
            let lam = s.extend();
            for nu in neighbours(&lam) {
                assert_ne!(nu, lam);
                assert!(neighbours(&nu).contains(&lam));
            }
        }
    }
}
