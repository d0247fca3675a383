//! The colored algebra 𝒦ⁿ: labelings of W(b̃)ã with X allowed on black
//! circles only, multiplied inside the arc algebra on 4n points.

use serde_json::{json, Map, Value};

use crate::algebra::{AlgElem, BasisIndex, BasisVector, FiniteAlgebra};
use crate::arc_algebra::ArcAlgebra;
use crate::diagram::{enumerate_sequences, ext_diagram, HalfIndex, SignSeq};
use crate::error::{Error, Result};
use crate::gluing::{glue, CircleColor, GluedDiagram};
use crate::rational::{int, to_string};

pub struct ColoredAlgebra {
    n: usize,
    sequences: Vec<SignSeq>,
    lift: ArcAlgebra,
    glued: Vec<Vec<GluedDiagram>>,
    index: BasisIndex,
}

impl ColoredAlgebra {
    pub fn new(n: usize) -> Result<ColoredAlgebra> {
        let sequences = enumerate_sequences(n)?;
        let diagrams = sequences
            .iter()
            .map(|s| ext_diagram(&s.extend()))
            .collect::<Result<Vec<_>>>()?;
        let glued = diagrams
            .iter()
            .map(|b| {
                diagrams
                    .iter()
                    .map(|a| glue(b, a)?.classify_colors())
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let lift = ArcAlgebra::from_diagrams(diagrams)?;
        let k = sequences.len();
        let mut vectors = Vec::new();
        for (t, row) in glued.iter().enumerate() {
            for (s, g) in row.iter().enumerate() {
                if g.red() > 0 {
                    continue;
                }
                let black = black_mask(g);
                vectors.extend(submasks(black).map(|m| BasisVector::new(t, s, m)));
            }
        }
        Ok(ColoredAlgebra {
            n,
            sequences,
            lift,
            glued,
            index: BasisIndex::new(k, vectors),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sequences(&self) -> &[SignSeq] {
        &self.sequences
    }

    pub fn sequence_index(&self, s: &SignSeq) -> Option<usize> {
        self.sequences.iter().position(|x| x == s)
    }

    /// The arc algebra on the extended diagrams, where products are taken.
    pub fn lift(&self) -> &ArcAlgebra {
        &self.lift
    }

    /// W(b̃)ã with colors, for target b and source a.
    pub fn glued(&self, target: usize, source: usize) -> &GluedDiagram {
        &self.glued[target][source]
    }

    pub fn colors(&self, target: usize, source: usize) -> &[CircleColor] {
        self.glued[target][source]
            .colors()
            .expect("colored at construction")
    }

    /// Basis of _b𝒦_a; empty when W(b̃)ã has a red circle.
    pub fn k_space(&self, target: usize, source: usize) -> &[BasisVector] {
        self.block(target, source)
    }

    /// Puts the unit on green circles. Basis vectors of 𝒦 already carry
    /// no X there, so the labeling is unchanged.
    pub fn can_up(&self, f: &AlgElem) -> AlgElem {
        f.clone()
    }

    /// Forgets to the colored space: red pictures and X on green circles go to 0.
    pub fn can_down(&self, w: &AlgElem) -> AlgElem {
        w.filter(|v| {
            let g = &self.glued[v.target][v.source];
            g.red() == 0 && v.mask & !black_mask(g) == 0
        })
    }

    /// can(X on the circle through the arc of `source` or `target` whose left end is α).
    pub fn x_alpha(&self, target: usize, source: usize, alpha: HalfIndex) -> Result<AlgElem> {
        let g = &self.glued[target][source];
        let p = alpha.pos();
        if alpha.n() != self.n || p > g.points() {
            return Err(Error::SizeMismatch(format!(
                "{alpha} is not a point for n = {}",
                self.n
            )));
        }
        let is_left = |d: &crate::diagram::CupDiagram| d.partner(p) > p;
        if !is_left(g.bottom()) && !is_left(g.top()) {
            return Err(Error::InvalidGenerator(format!(
                "{alpha} is not the left end of an arc"
            )));
        }
        let circle = g.circle_of_point(p);
        Ok(self.can_down(&AlgElem::basis(BasisVector::new(
            target,
            source,
            1 << circle,
        ))))
    }

    /// The all-One labeling 1⊗…⊗1 of _b𝒦_a, zero if that space is.
    pub fn ones(&self, target: usize, source: usize) -> AlgElem {
        self.can_down(&AlgElem::basis(BasisVector::new(target, source, 0)))
    }

    pub fn k_idempotent(&self, a: usize) -> BasisVector {
        self.idempotent(a)
    }

    /// Componentwise product of two elements of the same _b𝒦_a.
    pub fn star(&self, x: &AlgElem, y: &AlgElem) -> Result<AlgElem> {
        let mut spaces = x.spaces();
        spaces.extend(y.spaces());
        spaces.sort();
        spaces.dedup();
        if spaces.len() > 1 {
            return Err(Error::SpaceMismatch(format!(
                "star of elements in {spaces:?}"
            )));
        }
        let mut out = AlgElem::zero();
        for (u, cu) in x.iter() {
            for (v, cv) in y.iter() {
                if u.mask & v.mask == 0 {
                    out.add_term(
                        BasisVector::new(u.target, u.source, u.mask | v.mask),
                        cu * cv,
                    );
                }
            }
        }
        Ok(out)
    }

    /// Circle indices with black ones first, then green, each by smallest point.
    pub fn display_order(&self, target: usize, source: usize) -> Vec<usize> {
        let colors = self.colors(target, source);
        let of = |c: CircleColor| (0..colors.len()).filter(move |&i| colors[i] == c);
        of(CircleColor::Black)
            .chain(of(CircleColor::Green))
            .chain(of(CircleColor::Red))
            .collect()
    }

    /// Tensor labels such as `X⊗1`, black factors first.
    pub fn label_string(&self, v: &BasisVector) -> String {
        self.display_order(v.target, v.source)
            .into_iter()
            .map(|i| if v.mask >> i & 1 == 1 { "X" } else { "1" })
            .collect::<Vec<_>>()
            .join("⊗")
    }

    /// Stable text key `target|source|mask`.
    pub fn key(&self, v: &BasisVector) -> String {
        format!(
            "{}|{}|{}",
            self.sequences[v.target], self.sequences[v.source], v.mask
        )
    }

    pub fn vector_json(&self, v: &BasisVector) -> Value {
        let colors: String = self
            .colors(v.target, v.source)
            .iter()
            .map(|c| c.letter())
            .collect();
        json!({
            "target": self.sequences[v.target].to_string(),
            "source": self.sequences[v.source].to_string(),
            "mask": v.mask,
            "colors": colors,
            "labels": self.label_string(v),
            "degree": self.degree(v),
        })
    }

    /// `{key: "p/q"}`.
    pub fn element_json(&self, e: &AlgElem) -> Value {
        let map: Map<String, Value> = e
            .iter()
            .map(|(v, c)| (self.key(v), Value::String(to_string(c))))
            .collect();
        Value::Object(map)
    }

    /// Human form such as `1/2·(X⊗1 in -+|+-)`.
    pub fn element_string(&self, e: &AlgElem) -> String {
        if e.is_zero() {
            return "0".into();
        }
        e.iter()
            .map(|(v, c)| {
                let coeff = if *c == int(1) {
                    String::new()
                } else {
                    format!("{}·", crate::rational::display(c))
                };
                format!(
                    "{coeff}[{} in {}|{}]",
                    self.label_string(v),
                    self.sequences[v.target],
                    self.sequences[v.source]
                )
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn black_mask(g: &GluedDiagram) -> u64 {
    g.colors()
        .expect("colored")
        .iter()
        .enumerate()
        .filter(|(_, c)| **c == CircleColor::Black)
        .fold(0, |m, (i, _)| m | 1 << i)
}

/// All submasks of `mask`, including 0 and `mask` itself.
fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            Some((cur - 1) & mask)
        };
        Some(cur)
    })
}

impl FiniteAlgebra for ColoredAlgebra {
    fn idempotent_count(&self) -> usize {
        self.sequences.len()
    }

    fn index(&self) -> &BasisIndex {
        &self.index
    }

    fn mul_basis(&self, f: &BasisVector, g: &BasisVector) -> AlgElem {
        self.can_down(&self.lift.mul_basis(f, g))
    }

    /// 2·#X − #circles + 2n.
    fn degree(&self, v: &BasisVector) -> i32 {
        let circles = self.glued[v.target][v.source].circle_count() as i32;
        2 * v.x_count() as i32 - circles + 2 * self.n as i32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn submask_enumeration() {
        let mut all: Vec<u64> = submasks(0b101).collect();
        all.sort();
        assert_eq!(all, vec![0, 1, 4, 5]);
        assert_eq!(submasks(0).collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn n1_spaces() {
        let k = ColoredAlgebra::new(1).unwrap();
        assert_eq!(k.sequences()[0].to_string(), "-+");
        assert_eq!(k.k_space(0, 0).len(), 2);
        assert_eq!(k.k_space(1, 1).len(), 1);
        assert_eq!(k.k_space(0, 1).len(), 1);
        assert_eq!(k.k_space(1, 0).len(), 1);
        assert_eq!(k.dim(), 5);
        let x = k.k_space(0, 0).iter().find(|v| v.mask != 0).unwrap();
        assert_eq!(k.label_string(x), "X⊗1");
    }

    #[test]
    fn red_space_is_empty() {
        let k = ColoredAlgebra::new(2).unwrap();
        let b = k.sequence_index(&"-++-".parse().unwrap()).unwrap();
        let a = k.sequence_index(&"++--".parse().unwrap()).unwrap();
        assert!(k.k_space(b, a).is_empty());
        assert!(k.ones(b, a).is_zero());
    }

    #[test]
    fn star_requires_one_space() {
        let k = ColoredAlgebra::new(1).unwrap();
        let e0 = AlgElem::basis(k.k_idempotent(0));
        let e1 = AlgElem::basis(k.k_idempotent(1));
        assert!(k.star(&e0, &e1).is_err());
        assert_eq!(k.star(&e0, &e0).unwrap(), e0);
    }
}
