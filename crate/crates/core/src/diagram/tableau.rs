use serde::Serialize;

use super::cup::{Arc, CupDiagram};
use crate::error::{Error, Result};

/// Standard tableau of shape (n, n) in the decreasing convention: entries
/// decrease along rows and down columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TwoRowTableau {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

impl TwoRowTableau {
    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<TwoRowTableau> {
        let n = top.len();
        if n == 0 || bottom.len() != n {
            return Err(Error::InvalidTableau(format!(
                "rows of length {} and {}",
                top.len(),
                bottom.len()
            )));
        }
        let mut seen = vec![false; 2 * n + 1];
        for &v in top.iter().chain(&bottom) {
            if v == 0 || v > 2 * n || seen[v] {
                return Err(Error::InvalidTableau(format!(
                    "entries must be exactly 1..={}",
                    2 * n
                )));
            }
            seen[v] = true;
        }
        let decreasing = |row: &[usize]| row.windows(2).all(|w| w[0] > w[1]);
        if !decreasing(&top) || !decreasing(&bottom) {
            return Err(Error::InvalidTableau(
                "rows must decrease left to right".into(),
            ));
        }
        if top.iter().zip(&bottom).any(|(t, b)| t <= b) {
            return Err(Error::InvalidTableau(
                "columns must decrease top to bottom".into(),
            ));
        }
        Ok(TwoRowTableau { top, bottom })
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    /// Bottom-row entries become left endpoints, top-row entries right endpoints.
    pub fn to_cup_diagram(&self) -> CupDiagram {
        let n = self.top.len();
        let mut is_left = vec![false; 2 * n + 1];
        for &b in &self.bottom {
            is_left[b] = true;
        }
        let mut stack = Vec::new();
        let mut arcs = Vec::with_capacity(n);
        for (p, &left) in is_left.iter().enumerate().skip(1) {
            if left {
                stack.push(p);
            } else {
                let l = stack
                    .pop()
                    .expect("standard tableau closes every right endpoint");
                arcs.push(Arc::new(l, p));
            }
        }
        CupDiagram::from_arcs(arcs).expect("stack matching is crossingless")
    }

    pub fn from_cup_diagram(d: &CupDiagram) -> TwoRowTableau {
        let mut top: Vec<usize> = d.arcs().iter().map(|a| a.right).collect();
        let mut bottom: Vec<usize> = d.arcs().iter().map(|a| a.left).collect();
        top.sort_by(|a, b| b.cmp(a));
        bottom.sort_by(|a, b| b.cmp(a));
        TwoRowTableau { top, bottom }
    }
}

/// Every standard two-row tableau with rows of length n.
pub fn enumerate_tableaux(n: usize) -> Vec<TwoRowTableau> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    // Fill entries 2n, 2n−1, …, 1; the top row must always be at least as long.
    fn rec(
        next: usize,
        n: usize,
        top: &mut Vec<usize>,
        bottom: &mut Vec<usize>,
        out: &mut Vec<TwoRowTableau>,
    ) {
        if next == 0 {
            out.push(TwoRowTableau {
                top: top.clone(),
                bottom: bottom.clone(),
            });
            return;
        }
        if top.len() < n {
            top.push(next);
            rec(next - 1, n, top, bottom, out);
            top.pop();
        }
        if bottom.len() < top.len() {
            bottom.push(next);
            rec(next - 1, n, top, bottom, out);
            bottom.pop();
        }
    }
    rec(2 * n, n, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}
