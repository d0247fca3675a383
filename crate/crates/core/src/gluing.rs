//! Stacking a reflected cup diagram on another and reading off circles.

use std::fmt::Write as _;

use serde::Serialize;

use crate::diagram::{Arc, CupDiagram};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CircleColor {
    Black,
    Green,
    Red,
}

impl CircleColor {
    pub fn letter(self) -> char {
        match self {
            CircleColor::Black => 'B',
            CircleColor::Green => 'G',
            CircleColor::Red => 'R',
        }
    }
}

/// W(top)·bottom: `bottom` supplies the cups, `top` the reflected caps.
///
/// Circles are numbered by their smallest point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluedDiagram {
    top: CupDiagram,
    bottom: CupDiagram,
    circles: Vec<Vec<usize>>,
    circle_of_point: Vec<usize>,
    colors: Option<Vec<CircleColor>>,
}

/// Glues W(b) on top of a.
pub fn glue(b: &CupDiagram, a: &CupDiagram) -> Result<GluedDiagram> {
    if a.points() != b.points() {
        return Err(Error::SizeMismatch(format!(
            "{} vs {} points",
            b.points(),
            a.points()
        )));
    }
    let points = a.points();
    let mut circle_of_point = vec![usize::MAX; points + 1];
    let mut circles = Vec::new();
    for start in 1..=points {
        if circle_of_point[start] != usize::MAX {
            continue;
        }
        let id = circles.len();
        let mut orbit = Vec::new();
        let mut p = start;
        loop {
            // cup of `a`, then cap of `b`
            orbit.push(p);
            circle_of_point[p] = id;
            let q = a.partner(p);
            orbit.push(q);
            circle_of_point[q] = id;
            p = b.partner(q);
            if p == start {
                break;
            }
        }
        orbit.sort();
        circles.push(orbit);
    }
    Ok(GluedDiagram {
        top: b.clone(),
        bottom: a.clone(),
        circles,
        circle_of_point,
        colors: None,
    })
}

impl GluedDiagram {
    pub fn top(&self) -> &CupDiagram {
        &self.top
    }

    pub fn bottom(&self) -> &CupDiagram {
        &self.bottom
    }

    pub fn points(&self) -> usize {
        self.bottom.points()
    }

    pub fn circle_count(&self) -> usize {
        self.circles.len()
    }

    /// Sorted points of each circle.
    pub fn circles(&self) -> &[Vec<usize>] {
        &self.circles
    }

    pub fn circle_of_point(&self, point: usize) -> usize {
        self.circle_of_point[point]
    }

    /// The circle containing an arc of either diagram.
    pub fn circle_of_arc(&self, arc: &Arc) -> Result<usize> {
        if self.bottom.contains(arc) || self.top.contains(arc) {
            Ok(self.circle_of_point[arc.left])
        } else {
            Err(Error::ForeignArc(arc.left, arc.right))
        }
    }

    /// Colors for a diagram on 4n points: inner points are n+1..=3n.
    ///
    /// Black circles touch inner points only; green ones touch at most one
    /// point on each flank; everything else is red.
    pub fn classify_colors(mut self) -> Result<GluedDiagram> {
        let points = self.points();
        if !points.is_multiple_of(4) {
            return Err(Error::SizeMismatch(format!(
                "{points} points is not an extended diagram"
            )));
        }
        let n = points / 4;
        let colors = self
            .circles
            .iter()
            .map(|c| {
                let left = c.iter().filter(|&&p| p <= n).count();
                let right = c.iter().filter(|&&p| p > 3 * n).count();
                if left == 0 && right == 0 {
                    CircleColor::Black
                } else if left <= 1 && right <= 1 {
                    CircleColor::Green
                } else {
                    CircleColor::Red
                }
            })
            .collect();
        self.colors = Some(colors);
        Ok(self)
    }

    pub fn colors(&self) -> Option<&[CircleColor]> {
        self.colors.as_deref()
    }

    fn count(&self, color: CircleColor) -> usize {
        self.colors
            .as_ref()
            .map_or(0, |cs| cs.iter().filter(|&&c| c == color).count())
    }

    pub fn black(&self) -> usize {
        self.count(CircleColor::Black)
    }

    pub fn green(&self) -> usize {
        self.count(CircleColor::Green)
    }

    pub fn red(&self) -> usize {
        self.count(CircleColor::Red)
    }

    /// Caps above the point row, cups below, then one line per circle.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let caps = arc_rows(&self.top);
        for row in caps.iter().rev() {
            out.push_str(&row.replace('_', "‾"));
            out.push('\n');
        }
        let mut line = String::new();
        for p in 1..=self.points() {
            let c = self.circle_of_point[p];
            let mark = match &self.colors {
                Some(colors) => colors[c].letter(),
                None => 'o',
            };
            line.push(' ');
            line.push(mark);
        }
        out.push_str(line.trim_end());
        out.push('\n');
        for row in arc_rows(&self.bottom) {
            out.push_str(&row);
            out.push('\n');
        }
        for (i, c) in self.circles.iter().enumerate() {
            let color = self
                .colors
                .as_ref()
                .map(|cs| format!(" [{}]", cs[i].letter()))
                .unwrap_or_default();
            let pts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            let _ = writeln!(out, "circle {}{color}: {}", i + 1, pts.join(" "));
        }
        out
    }
}

/// One text row per nesting level, innermost first.
fn arc_rows(d: &CupDiagram) -> Vec<String> {
    let width = 2 * d.points() + 1;
    let arcs = d.arcs();
    let level_of: Vec<usize> = arcs.iter().map(|a| height(arcs, a)).collect();
    let levels = level_of.iter().copied().max().unwrap_or(0) + 1;
    let mut rows = vec![vec![' '; width]; levels];
    for (i, a) in arcs.iter().enumerate() {
        let lvl = level_of[i];
        let (l, r) = (2 * a.left - 1, 2 * a.right - 1);
        for row in rows.iter_mut().take(lvl) {
            row[l] = '|';
            row[r] = '|';
        }
        rows[lvl][l] = '|';
        rows[lvl][r] = '|';
        for c in &mut rows[lvl][l + 1..r] {
            *c = '_';
        }
    }
    rows.into_iter()
        .map(|r| r.into_iter().collect::<String>().trim_end().to_string())
        .collect()
}

fn height(arcs: &[Arc], a: &Arc) -> usize {
    arcs.iter()
        .filter(|b| a.encloses(b))
        .map(|b| height(arcs, b) + 1)
        .max()
        .unwrap_or(0)
}

/// Rendering of a single cup diagram.
pub fn render_cups(d: &CupDiagram) -> String {
    let mut out = String::new();
    let labels: Vec<String> = (1..=d.points()).map(|p| format!("{}", p % 10)).collect();
    out.push(' ');
    out.push_str(&labels.join(" "));
    out.push('\n');
    for row in arc_rows(d) {
        out.push_str(&row);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{enumerate_cup_diagrams, enumerate_sequences, ext_diagram, SignSeq};

    fn nested() -> CupDiagram {
        CupDiagram::from_arcs([Arc::new(1, 4), Arc::new(2, 3)]).unwrap()
    }

    fn adjacent() -> CupDiagram {
        CupDiagram::from_arcs([Arc::new(1, 2), Arc::new(3, 4)]).unwrap()
    }

    fn ext_glue(b: &str, a: &str) -> GluedDiagram {
        let b: SignSeq = b.parse().unwrap();
        let a: SignSeq = a.parse().unwrap();
        glue(
            &ext_diagram(&b.extend()).unwrap(),
            &ext_diagram(&a.extend()).unwrap(),
        )
        .unwrap()
        .classify_colors()
        .unwrap()
    }

    #[test]
    fn mirror_gluing() {
        let g = glue(&nested(), &nested()).unwrap();
        assert_eq!(g.circles(), &[vec![1, 4], vec![2, 3]]);
        for m in 1..=4 {
            for d in enumerate_cup_diagrams(m).unwrap() {
                assert_eq!(glue(&d, &d).unwrap().circle_count(), m);
            }
        }
    }

    #[test]
    fn single_circle_gluing() {
        let g = glue(&adjacent(), &nested()).unwrap();
        assert_eq!(g.circles(), &[vec![1, 2, 3, 4]]);
        for arc in nested().arcs() {
            assert_eq!(g.circle_of_arc(arc).unwrap(), 0);
        }
        assert_eq!(
            g.circle_of_arc(&Arc::new(1, 3)).unwrap_err(),
            Error::ForeignArc(1, 3)
        );
    }

    #[test]
    fn size_mismatch() {
        let one = CupDiagram::from_arcs([Arc::new(1, 2)]).unwrap();
        assert!(glue(&one, &nested()).is_err());
    }

    #[test]
    fn example_colors_n1() {
        let aa = ext_glue("-+", "-+");
        assert_eq!((aa.black(), aa.green(), aa.red()), (1, 1, 0));
        let ba = ext_glue("+-", "-+");
        assert_eq!((ba.black(), ba.green(), ba.red()), (0, 1, 0));
        let bb = ext_glue("+-", "+-");
        assert_eq!((bb.black(), bb.green(), bb.red()), (0, 2, 0));
    }

    #[test]
    fn example_red_circle_n2() {
        let g = ext_glue("-++-", "++--");
        assert!(g.red() > 0);
        assert!(g.render().contains('R'));
    }

    #[test]
    fn diagonal_gluings_have_no_red() {
        for n in 1..=4 {
            for a in enumerate_sequences(n).unwrap() {
                let s = a.to_string();
                let g = ext_glue(&s, &s);
                assert_eq!(g.red(), 0);
                assert_eq!(g.circle_count(), 2 * n);
            }
        }
    }

    #[test]
    fn distinct_arcs_on_one_circle() {
        // n = 1 pair a = (−,+), b = (+,−): both arcs of ã lie on a single circle.
        let g = ext_glue("+-", "-+");
        let arcs = g.bottom().arcs().to_vec();
        assert_eq!(
            g.circle_of_arc(&arcs[0]).unwrap(),
            g.circle_of_arc(&arcs[1]).unwrap()
        );
    }

    #[test]
    fn render_is_stable() {
        let g = ext_glue("-+", "-+");
        let expected = concat!(
            " |‾‾‾‾‾|\n",
            " | |‾| |\n",
            " G B B G\n",
            " | |_| |\n",
            " |_____|\n",
            "circle 1 [G]: 1 4\n",
            "circle 2 [B]: 2 3\n",
        );
        assert_eq!(g.render(), expected);
        assert_eq!(render_cups(&nested()), " 1 2 3 4\n | |_| |\n |_____|\n");
    }
}
