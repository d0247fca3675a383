//! The Frobenius algebra R = ℚ[X]/(X²).

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FrobLabel {
    One,
    X,
}

impl FrobLabel {
    pub fn from_bit(bit: bool) -> FrobLabel {
        if bit {
            FrobLabel::X
        } else {
            FrobLabel::One
        }
    }

    pub fn is_x(self) -> bool {
        self == FrobLabel::X
    }

    /// Degree in R before any shift: 1 ↦ −1, X ↦ 1.
    pub fn degree(self) -> i32 {
        match self {
            FrobLabel::One => -1,
            FrobLabel::X => 1,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            FrobLabel::One => "1",
            FrobLabel::X => "X",
        }
    }
}

/// m: R ⊗ R → R. `None` is zero.
pub fn mult(a: FrobLabel, b: FrobLabel) -> Option<FrobLabel> {
    match (a, b) {
        (FrobLabel::X, FrobLabel::X) => None,
        (FrobLabel::One, FrobLabel::One) => Some(FrobLabel::One),
        _ => Some(FrobLabel::X),
    }
}

/// Δ: 1 ↦ X⊗1 + 1⊗X, X ↦ X⊗X.
pub fn comult(a: FrobLabel) -> Vec<(FrobLabel, FrobLabel)> {
    match a {
        FrobLabel::One => vec![
            (FrobLabel::X, FrobLabel::One),
            (FrobLabel::One, FrobLabel::X),
        ],
        FrobLabel::X => vec![(FrobLabel::X, FrobLabel::X)],
    }
}

pub fn unit() -> FrobLabel {
    FrobLabel::One
}

/// The trace δ: 1 ↦ 0, X ↦ 1.
pub fn counit(a: FrobLabel) -> i64 {
    match a {
        FrobLabel::One => 0,
        FrobLabel::X => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use FrobLabel::{One, X};

    #[test]
    fn table() {
        assert_eq!(mult(X, X), None);
        assert_eq!(mult(One, X), Some(X));
        assert_eq!(mult(X, One), Some(X));
        assert_eq!(mult(unit(), One), Some(One));
        assert_eq!(comult(One), vec![(X, One), (One, X)]);
        assert_eq!(comult(X), vec![(X, X)]);
        assert_eq!(counit(One), 0);
        assert_eq!(counit(X), 1);
        assert_eq!(counit(mult(One, X).unwrap()), 1);
    }

    #[test]
    fn frobenius_identity() {
        // (m ⊗ id)(id ⊗ Δ) = Δ ∘ m on basis pairs, compared as sorted term lists.
        for a in [One, X] {
            for b in [One, X] {
                let mut lhs: Vec<(FrobLabel, FrobLabel)> = Vec::new();
                for (c, d) in comult(b) {
                    if let Some(ac) = mult(a, c) {
                        lhs.push((ac, d));
                    }
                }
                let mut rhs = mult(a, b).map(comult).unwrap_or_default();
                lhs.sort();
                rhs.sort();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn counit_is_a_trace_form() {
        // δ(m(a, b)) is nondegenerate: pairs 1 with X.
        let pairing: Vec<i64> = [(One, One), (One, X), (X, One), (X, X)]
            .iter()
            .map(|&(a, b)| mult(a, b).map_or(0, counit))
            .collect();
        assert_eq!(pairing, vec![0, 1, 1, 0]);
    }
}
