use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::sequence::{enumerate_sequences, format_signs, ExtSeq, Sign, SignSeq};
use crate::error::{Error, Result};

/// A cup between two 1-based points, `left < right`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub left: usize,
    pub right: usize,
}

impl Arc {
    pub fn new(left: usize, right: usize) -> Arc {
        Arc {
            left: left.min(right),
            right: left.max(right),
        }
    }

    /// Strictly encloses `other`.
    pub fn encloses(&self, other: &Arc) -> bool {
        self.left < other.left && other.right < self.right
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.left, self.right)
    }
}

/// A crossingless perfect matching of the points 1..=2m.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CupDiagram {
    arcs: Vec<Arc>,
    partner: Vec<usize>,
}

impl CupDiagram {
    pub fn from_arcs(arcs: impl IntoIterator<Item = Arc>) -> Result<CupDiagram> {
        let mut arcs: Vec<Arc> = arcs.into_iter().collect();
        arcs.sort();
        let points = 2 * arcs.len();
        if points == 0 {
            return Err(Error::Degenerate("cup diagram without arcs".into()));
        }
        let mut partner = vec![0; points + 1];
        for arc in &arcs {
            if arc.left == 0 || arc.right > points || arc.left == arc.right {
                return Err(Error::InvalidSequence(format!(
                    "arc {arc} outside 1..={points}"
                )));
            }
            if partner[arc.left] != 0 || partner[arc.right] != 0 {
                return Err(Error::InvalidSequence(format!(
                    "point of {arc} matched twice"
                )));
            }
            partner[arc.left] = arc.right;
            partner[arc.right] = arc.left;
        }
        for (i, a) in arcs.iter().enumerate() {
            for b in &arcs[i + 1..] {
                if a.left < b.left && b.left < a.right && a.right < b.right {
                    return Err(Error::InvalidSequence(format!("arcs {a} and {b} cross")));
                }
            }
        }
        Ok(CupDiagram { arcs, partner })
    }

    /// Number of cups.
    pub fn m(&self) -> usize {
        self.arcs.len()
    }

    pub fn points(&self) -> usize {
        2 * self.arcs.len()
    }

    /// Arcs sorted by left endpoint.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn partner(&self, point: usize) -> usize {
        self.partner[point]
    }

    pub fn contains(&self, arc: &Arc) -> bool {
        arc.right <= self.points() && self.partner[arc.left] == arc.right
    }

    /// The innermost arc strictly enclosing `arc`, if any.
    pub fn parent(&self, arc: &Arc) -> Result<Option<Arc>> {
        if !self.contains(arc) {
            return Err(Error::ForeignArc(arc.left, arc.right));
        }
        Ok(self
            .arcs
            .iter()
            .filter(|a| a.encloses(arc))
            .max_by_key(|a| a.left)
            .copied())
    }

    /// The ±-word with − at every left endpoint.
    pub fn sequence(&self) -> Vec<Sign> {
        (1..=self.points())
            .map(|p| {
                if self.partner[p] > p {
                    Sign::Minus
                } else {
                    Sign::Plus
                }
            })
            .collect()
    }
}

impl fmt::Display for CupDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.arcs.iter().map(|a| a.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for CupDiagram {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[usize; 2]> = self.arcs.iter().map(|a| [a.left, a.right]).collect();
        pairs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CupDiagram {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<[usize; 2]>::deserialize(deserializer)?;
        CupDiagram::from_arcs(pairs.into_iter().map(|[l, r]| Arc::new(l, r)))
            .map_err(serde::de::Error::custom)
    }
}

/// λ-pairs of a finite ±-word: each − is matched with the first + to its
/// right closing a sign-balanced interval. Returns the arcs (1-based) and
/// the unmatched positions.
pub fn lambda_pairs_of(signs: &[Sign]) -> (Vec<Arc>, Vec<usize>) {
    let mut stack = Vec::new();
    let mut arcs = Vec::new();
    let mut unmatched = Vec::new();
    for (i, s) in signs.iter().enumerate() {
        let pos = i + 1;
        match s {
            Sign::Minus => stack.push(pos),
            Sign::Plus => match stack.pop() {
                Some(left) => arcs.push(Arc::new(left, pos)),
                None => unmatched.push(pos),
            },
        }
    }
    unmatched.extend(stack);
    unmatched.sort();
    arcs.sort();
    (arcs, unmatched)
}

fn close(signs: &[Sign]) -> Result<CupDiagram> {
    let (arcs, unmatched) = lambda_pairs_of(signs);
    if !unmatched.is_empty() {
        return Err(Error::NotClosable(format!(
            "{} leaves {unmatched:?} unmatched",
            format_signs(signs)
        )));
    }
    CupDiagram::from_arcs(arcs)
}

/// The cup diagram c_a of a sequence in 𝒮(n)′.
pub fn lambda_pairs(seq: &SignSeq) -> Result<CupDiagram> {
    close(seq.signs())
}

/// The extended 4n-point diagram ã.
pub fn ext_diagram(seq: &ExtSeq) -> Result<CupDiagram> {
    close(seq.signs())
}

/// Cup(m) in the order of their sequences.
pub fn enumerate_cup_diagrams(m: usize) -> Result<Vec<CupDiagram>> {
    enumerate_sequences(m)?
        .iter()
        .filter(|s| s.is_cup_sequence())
        .map(lambda_pairs)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::sequence::HalfIndex;

    fn arcs(d: &CupDiagram) -> Vec<(usize, usize)> {
        d.arcs().iter().map(|a| (a.left, a.right)).collect()
    }

    #[test]
    fn lambda_pair_examples() {
        let nested = ext_diagram(&"--++".parse().unwrap()).unwrap();
        assert_eq!(arcs(&nested), vec![(1, 4), (2, 3)]);
        let labels: Vec<String> = nested
            .arcs()
            .iter()
            .map(|a| {
                format!(
                    "({},{})",
                    HalfIndex::new(a.left, 1).unwrap(),
                    HalfIndex::new(a.right, 1).unwrap()
                )
            })
            .collect();
        assert_eq!(labels, vec!["(-3/2,3/2)", "(-1/2,1/2)"]);
        let adjacent = ext_diagram(&"-+-+".parse().unwrap()).unwrap();
        assert_eq!(arcs(&adjacent), vec![(1, 2), (3, 4)]);
        for k in 1..=5 {
            let s: SignSeq = "-+".repeat(k).parse().unwrap();
            let d = lambda_pairs(&s).unwrap();
            assert!(d.arcs().iter().all(|a| a.right == a.left + 1));
            assert_eq!(d.m(), k);
        }
    }

    #[test]
    fn not_closable() {
        let err = lambda_pairs(&"+-".parse().unwrap()).unwrap_err();
        assert!(matches!(err, Error::NotClosable(_)));
    }

    #[test]
    fn parents() {
        let d = CupDiagram::from_arcs([Arc::new(1, 4), Arc::new(2, 3)]).unwrap();
        assert_eq!(d.parent(&Arc::new(2, 3)).unwrap(), Some(Arc::new(1, 4)));
        assert_eq!(d.parent(&Arc::new(1, 4)).unwrap(), None);
        let d = CupDiagram::from_arcs([Arc::new(1, 2), Arc::new(3, 6), Arc::new(4, 5)]).unwrap();
        assert_eq!(d.parent(&Arc::new(4, 5)).unwrap(), Some(Arc::new(3, 6)));
        assert_eq!(d.parent(&Arc::new(1, 2)).unwrap(), None);
        assert_eq!(
            d.parent(&Arc::new(1, 3)).unwrap_err(),
            Error::ForeignArc(1, 3)
        );
    }

    #[test]
    fn rejects_crossing_and_imperfect() {
        assert!(CupDiagram::from_arcs([Arc::new(1, 3), Arc::new(2, 4)]).is_err());
        assert!(CupDiagram::from_arcs([Arc::new(1, 2), Arc::new(2, 3)]).is_err());
        assert!(CupDiagram::from_arcs([Arc::new(1, 5), Arc::new(2, 3)]).is_err());
    }

    #[test]
    fn catalan_counts() {
        let catalan = [1, 2, 5, 14, 42];
        for m in 1..=5 {
            assert_eq!(enumerate_cup_diagrams(m).unwrap().len(), catalan[m - 1]);
        }
    }

    #[test]
    fn json_form() {
        let d = CupDiagram::from_arcs([Arc::new(1, 4), Arc::new(2, 3)]).unwrap();
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(json, "[[1,4],[2,3]]");
        let back: CupDiagram = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
        assert!(serde_json::from_str::<CupDiagram>("[[1,3],[2,4]]").is_err());
    }

    #[test]
    fn parent_relation_is_a_forest() {
        for m in 1..=5 {
            for d in enumerate_cup_diagrams(m).unwrap() {
                // Each arc has at most one parent, and following parents terminates.
                for arc in d.arcs() {
                    let mut cur = *arc;
                    let mut steps = 0;
                    while let Some(p) = d.parent(&cur).unwrap() {
                        assert!(p.encloses(&cur));
                        cur = p;
                        steps += 1;
                        assert!(steps <= m);
                    }
                }
                assert_eq!(
                    d.sequence().iter().filter(|&&s| s == Sign::Minus).count(),
                    m
                );
                for a in d.arcs() {
                    assert_eq!(d.sequence()[a.left - 1], Sign::Minus);
                }
            }
        }
    }
}
