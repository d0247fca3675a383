//! Surgery schedules for stacking W(c)b on top of W(b)a.
//!
//! Points of the lower picture W(b)a and the upper picture W(c)b are kept
//! as two layers. Each cup of b, together with its mirror cap, is cut and
//! replaced by two vertical strands joining the layers. Once every cup is
//! processed the surviving circles are exactly those of W(c)a.

use std::collections::BTreeMap;

use crate::diagram::CupDiagram;
use crate::gluing::GluedDiagram;

/// One surgery on labeled circles held in numbered slots.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SurgeryStep {
    /// Two circles become one: multiplication in R.
    Merge {
        first: usize,
        second: usize,
        into: usize,
    },
    /// One circle becomes two: comultiplication in R.
    Split {
        from: usize,
        left: usize,
        right: usize,
    },
}

/// A compiled product W(c)b × W(b)a → W(c)a on labelings.
///
/// Slots `0..upper` hold the circles of W(c)b, slots `upper..upper+lower`
/// those of W(b)a; later slots are created by the steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurgeryPlan {
    upper: usize,
    lower: usize,
    steps: Vec<SurgeryStep>,
    /// (slot, circle of W(c)a) for every surviving slot.
    outputs: Vec<(usize, usize)>,
}

struct Layers<'a> {
    points: usize,
    lower_cups: &'a CupDiagram,
    middle: &'a CupDiagram,
    upper_caps: &'a CupDiagram,
    cut: Vec<bool>,
}

impl Layers<'_> {
    // Vertex v < points is the lower copy of point v+1, otherwise the upper copy.
    fn lower(&self, p: usize) -> usize {
        p - 1
    }

    fn upper(&self, p: usize) -> usize {
        self.points + p - 1
    }

    fn point(&self, v: usize) -> usize {
        v % self.points + 1
    }

    fn is_lower(&self, v: usize) -> bool {
        v < self.points
    }

    fn neighbours(&self, v: usize) -> [usize; 2] {
        let p = self.point(v);
        if self.is_lower(v) {
            let down = self.lower(self.lower_cups.partner(p));
            let up = if self.cut[p] {
                self.upper(p)
            } else {
                self.lower(self.middle.partner(p))
            };
            [down, up]
        } else {
            let down = if self.cut[p] {
                self.lower(p)
            } else {
                self.upper(self.middle.partner(p))
            };
            let up = self.upper(self.upper_caps.partner(p));
            [down, up]
        }
    }

    fn component(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; 2 * self.points];
        let mut stack = vec![start];
        let mut out = Vec::new();
        seen[start] = true;
        while let Some(v) = stack.pop() {
            out.push(v);
            for w in self.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out
    }
}

impl SurgeryPlan {
    /// `order` lists indices into `middle.arcs()`; each must appear once.
    pub fn build(
        upper: &GluedDiagram,
        lower: &GluedDiagram,
        result: &GluedDiagram,
        order: &[usize],
    ) -> SurgeryPlan {
        let middle = lower.top();
        assert_eq!(
            upper.bottom(),
            middle,
            "upper picture must sit on the same middle diagram"
        );
        assert_eq!(
            order.len(),
            middle.arcs().len(),
            "every cup is cut exactly once"
        );
        let points = middle.points();
        let mut layers = Layers {
            points,
            lower_cups: lower.bottom(),
            middle,
            upper_caps: upper.top(),
            cut: vec![false; points + 1],
        };
        let (cu, cl) = (upper.circle_count(), lower.circle_count());
        let mut slot = vec![0usize; 2 * points];
        for p in 1..=points {
            slot[layers.upper(p)] = upper.circle_of_point(p);
            slot[layers.lower(p)] = cu + lower.circle_of_point(p);
        }
        let mut next = cu + cl;
        let mut steps = Vec::with_capacity(order.len());
        for &k in order {
            let arc = middle.arcs()[k];
            let (cap, cup) = (slot[layers.lower(arc.left)], slot[layers.upper(arc.left)]);
            layers.cut[arc.left] = true;
            layers.cut[arc.right] = true;
            if cap != cup {
                for v in layers.component(layers.lower(arc.left)) {
                    slot[v] = next;
                }
                steps.push(SurgeryStep::Merge {
                    first: cup,
                    second: cap,
                    into: next,
                });
                next += 1;
            } else {
                let left = layers.component(layers.lower(arc.left));
                assert!(
                    !left.contains(&layers.lower(arc.right)),
                    "surgery on one circle must split it in a planar picture"
                );
                for v in left {
                    slot[v] = next;
                }
                for v in layers.component(layers.lower(arc.right)) {
                    slot[v] = next + 1;
                }
                steps.push(SurgeryStep::Split {
                    from: cap,
                    left: next,
                    right: next + 1,
                });
                next += 2;
            }
        }
        assert!(next <= 64, "too many circles for a 64-bit labeling");
        let mut outputs: Vec<(usize, usize)> = (1..=points)
            .map(|p| (slot[layers.lower(p)], result.circle_of_point(p)))
            .collect();
        outputs.sort();
        outputs.dedup();
        debug_assert_eq!(outputs.len(), result.circle_count());
        SurgeryPlan {
            upper: cu,
            lower: cl,
            steps,
            outputs,
        }
    }

    pub fn steps(&self) -> &[SurgeryStep] {
        &self.steps
    }

    pub fn merges(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| matches!(s, SurgeryStep::Merge { .. }))
            .count()
    }

    pub fn splits(&self) -> usize {
        self.steps.len() - self.merges()
    }

    /// Multiplies labelings: `upper_mask` on W(c)b, `lower_mask` on W(b)a.
    /// Returns labelings of W(c)a with integer coefficients.
    pub fn apply(&self, upper_mask: u64, lower_mask: u64) -> Vec<(u64, i64)> {
        debug_assert!(upper_mask.checked_shr(self.upper as u32).unwrap_or(0) == 0);
        debug_assert!(lower_mask.checked_shr(self.lower as u32).unwrap_or(0) == 0);
        let bit = |m: u64, s: usize| m >> s & 1 == 1;
        let mut states: Vec<u64> = vec![upper_mask | lower_mask << self.upper];
        for step in &self.steps {
            let mut next = Vec::with_capacity(states.len() * 2);
            for m in states {
                match *step {
                    SurgeryStep::Merge {
                        first,
                        second,
                        into,
                    } => {
                        let (x, y) = (bit(m, first), bit(m, second));
                        if x && y {
                            continue;
                        }
                        let rest = m & !(1 << first) & !(1 << second);
                        next.push(if x || y { rest | 1 << into } else { rest });
                    }
                    SurgeryStep::Split { from, left, right } => {
                        let rest = m & !(1 << from);
                        if bit(m, from) {
                            next.push(rest | 1 << left | 1 << right);
                        } else {
                            next.push(rest | 1 << left);
                            next.push(rest | 1 << right);
                        }
                    }
                }
            }
            states = next;
        }
        let mut out: BTreeMap<u64, i64> = BTreeMap::new();
        for m in states {
            let label = self
                .outputs
                .iter()
                .filter(|(s, _)| bit(m, *s))
                .fold(0u64, |acc, (_, c)| acc | 1 << c);
            *out.entry(label).or_default() += 1;
        }
        out.into_iter().filter(|(_, c)| *c != 0).collect()
    }
}
