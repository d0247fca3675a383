use serde::Serialize;

use super::sequence::{Sign, SignSeq};
use crate::error::{Error, Result};

/// A Young diagram inside the n×n square, parts padded with zeros to length n.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BoxPartition {
    parts: Vec<usize>,
    n: usize,
}

impl BoxPartition {
    pub fn new(parts: &[usize], n: usize) -> Result<BoxPartition> {
        if n == 0 {
            return Err(Error::Degenerate("n must be positive".into()));
        }
        let nonzero: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
        if nonzero.len() > n {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has more than {n} parts"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        if parts.first().is_some_and(|&p| p > n) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} does not fit in the {n}x{n} box"
            )));
        }
        let mut padded = nonzero;
        padded.resize(n, 0);
        Ok(BoxPartition { parts: padded, n })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Fits under the staircase (n−1, n−2, …, 0).
    pub fn is_upper(&self) -> bool {
        self.parts.iter().enumerate().all(|(i, &p)| p + i < self.n)
    }

    /// Boundary path from the lower-left corner: minus = up, plus = right.
    pub fn to_sequence(&self) -> SignSeq {
        let mut signs = Vec::with_capacity(2 * self.n);
        let mut x = 0;
        for &row in self.parts.iter().rev() {
            while x < row {
                signs.push(Sign::Plus);
                x += 1;
            }
            signs.push(Sign::Minus);
        }
        while x < self.n {
            signs.push(Sign::Plus);
            x += 1;
        }
        SignSeq::new(signs).expect("boundary path of a box partition is balanced")
    }

    pub fn from_sequence(seq: &SignSeq) -> BoxPartition {
        let n = seq.n();
        let mut parts = vec![0; n];
        let mut row = n;
        let mut x = 0;
        for s in seq.signs() {
            match s {
                Sign::Plus => x += 1,
                Sign::Minus => {
                    row -= 1;
                    parts[row] = x;
                }
            }
        }
        BoxPartition { parts, n }
    }

    /// φ_λ on ℍ[−r, r]: minus exactly at the half-integers λ_i − i + 1/2.
    pub fn phi_window(&self, radius: usize) -> Vec<Sign> {
        let r = radius as i64;
        // index i (1-based, unbounded) ↦ 2(λ_i − i) + 1
        let minus_at: std::collections::BTreeSet<i64> = (1..=(self.n as i64 + 2 * r + 1))
            .map(|i| {
                let part = self.parts.get(i as usize - 1).copied().unwrap_or(0) as i64;
                2 * (part - i) + 1
            })
            .collect();
        (0..2 * r)
            .map(|k| {
                let twice = 2 * (k - r) + 1;
                if minus_at.contains(&twice) {
                    Sign::Minus
                } else {
                    Sign::Plus
                }
            })
            .collect()
    }
}

/// All partitions in the n×n box, in the order of their sequences.
pub fn enumerate_box_partitions(n: usize) -> Result<Vec<BoxPartition>> {
    Ok(super::sequence::enumerate_sequences(n)?
        .iter()
        .map(BoxPartition::from_sequence)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::sequence::{enumerate_sequences, format_signs};

    #[test]
    fn young_examples_n2() {
        let cases: [(&[usize], &str); 6] = [
            (&[2, 2], "++--"),
            (&[2, 1], "+-+-"),
            (&[1, 1], "+--+"),
            (&[2], "-++-"),
            (&[1], "-+-+"),
            (&[], "--++"),
        ];
        for (parts, s) in cases {
            let p = BoxPartition::new(parts, 2).unwrap();
            assert_eq!(p.to_sequence().to_string(), s, "{parts:?}");
            assert_eq!(BoxPartition::from_sequence(&s.parse().unwrap()), p);
        }
    }

    #[test]
    fn rejects_bad_partitions() {
        assert!(BoxPartition::new(&[1, 2], 2).is_err());
        assert!(BoxPartition::new(&[3], 2).is_err());
        assert!(BoxPartition::new(&[1, 1, 1], 2).is_err());
        assert!(BoxPartition::new(&[], 0).is_err());
    }

    #[test]
    fn round_trip_and_upper_flag() {
        for n in 1..=5 {
            for s in enumerate_sequences(n).unwrap() {
                let p = BoxPartition::from_sequence(&s);
                assert_eq!(p.to_sequence(), s);
                assert_eq!(p.is_upper(), s.is_cup_sequence(), "{s}");
            }
        }
    }

    #[test]
    fn phi_restriction_matches_extension() {
        for n in 1..=4 {
            for s in enumerate_sequences(n).unwrap() {
                let p = BoxPartition::from_sequence(&s);
                assert_eq!(format_signs(&p.phi_window(n)), s.to_string());
                assert_eq!(format_signs(&p.phi_window(2 * n)), s.extend().to_string());
            }
        }
    }
}
