use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Ordered with `Minus < Plus`, which fixes the lexicographic enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Plus => '+',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '-' | '−' => Some(Sign::Minus),
            '+' => Some(Sign::Plus),
            _ => None,
        }
    }
}

pub(crate) fn parse_signs(s: &str) -> Result<Vec<Sign>> {
    s.chars()
        .filter(|c| !c.is_whitespace() && *c != ',' && *c != '(' && *c != ')')
        .map(|c| {
            Sign::from_char(c)
                .ok_or_else(|| Error::Parse(format!("unexpected character {c:?} in {s:?}")))
        })
        .collect()
}

pub(crate) fn format_signs(signs: &[Sign]) -> String {
    signs.iter().map(|s| s.as_char()).collect()
}

fn count(signs: &[Sign], sign: Sign) -> usize {
    signs.iter().filter(|&&s| s == sign).count()
}

/// A position in the window ℍ[−2n, 2n], stored 1-based.
///
/// Position `i` stands for the half-integer `i − 2n − 1/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfIndex {
    pos: usize,
    n: usize,
}

impl HalfIndex {
    pub fn new(pos: usize, n: usize) -> Result<HalfIndex> {
        if n == 0 || pos == 0 || pos > 4 * n {
            return Err(Error::Degenerate(format!(
                "position {pos} outside 1..={} (n = {n})",
                4 * n
            )));
        }
        Ok(HalfIndex { pos, n })
    }

    /// From twice the half-integer value, e.g. `-3` for −3/2.
    pub fn from_twice(twice: i64, n: usize) -> Result<HalfIndex> {
        if twice % 2 == 0 {
            return Err(Error::Degenerate(format!(
                "{twice}/2 is not a half-integer"
            )));
        }
        let pos = (twice + 1) / 2 + 2 * n as i64;
        if pos < 1 {
            return Err(Error::Degenerate(format!(
                "{twice}/2 lies left of the window"
            )));
        }
        HalfIndex::new(pos as usize, n)
    }

    pub fn pos(self) -> usize {
        self.pos
    }

    pub fn n(self) -> usize {
        self.n
    }

    /// 2α, always odd.
    pub fn twice(self) -> i64 {
        2 * self.pos as i64 - 4 * self.n as i64 - 1
    }

    /// α + 1/2.
    pub fn shifted(self) -> i64 {
        self.pos as i64 - 2 * self.n as i64
    }

    /// Inside ℍ[−n, n].
    pub fn is_inner(self) -> bool {
        self.pos > self.n && self.pos <= 3 * self.n
    }
}

impl fmt::Display for HalfIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2", self.twice())
    }
}

/// η(α) = (−1)^(α + 1/2).
pub fn eta(alpha: HalfIndex) -> i32 {
    if alpha.shifted().rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// A word of length 2n with exactly n pluses and n minuses.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignSeq {
    signs: Vec<Sign>,
}

impl SignSeq {
    pub fn new(signs: Vec<Sign>) -> Result<SignSeq> {
        if signs.is_empty() {
            return Err(Error::Degenerate("empty sequence".into()));
        }
        let plus = count(&signs, Sign::Plus);
        if 2 * plus != signs.len() {
            return Err(Error::InvalidSequence(format!(
                "{} has {plus} pluses out of {}",
                format_signs(&signs),
                signs.len()
            )));
        }
        Ok(SignSeq { signs })
    }

    pub fn n(&self) -> usize {
        self.signs.len() / 2
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    /// σ_dom = (+,…,+,−,…,−).
    pub fn dominant(n: usize) -> Result<SignSeq> {
        let mut signs = vec![Sign::Plus; n];
        signs.extend(std::iter::repeat_n(Sign::Minus, n));
        SignSeq::new(signs)
    }

    /// Prepends n minuses and appends n pluses.
    pub fn extend(&self) -> ExtSeq {
        let n = self.n();
        let mut signs = vec![Sign::Minus; n];
        signs.extend_from_slice(&self.signs);
        signs.extend(std::iter::repeat_n(Sign::Plus, n));
        ExtSeq { signs, n }
    }

    /// Every plus is preceded by strictly more minuses than pluses.
    pub fn is_cup_sequence(&self) -> bool {
        let mut height = 0i64;
        for s in &self.signs {
            match s {
                Sign::Minus => height += 1,
                Sign::Plus => {
                    if height <= 0 {
                        return false;
                    }
                    height -= 1;
                }
            }
        }
        true
    }
}

impl fmt::Display for SignSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_signs(&self.signs))
    }
}

impl FromStr for SignSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<SignSeq> {
        SignSeq::new(parse_signs(s)?)
    }
}

impl Serialize for SignSeq {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SignSeq {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All C(2n, n) balanced sequences, lexicographic with `− < +`.
pub fn enumerate_sequences(n: usize) -> Result<Vec<SignSeq>> {
    if n == 0 {
        return Err(Error::Degenerate("n must be positive".into()));
    }
    fn rec(minus: usize, plus: usize, prefix: &mut Vec<Sign>, out: &mut Vec<SignSeq>) {
        if minus == 0 && plus == 0 {
            out.push(SignSeq {
                signs: prefix.clone(),
            });
            return;
        }
        if minus > 0 {
            prefix.push(Sign::Minus);
            rec(minus - 1, plus, prefix, out);
            prefix.pop();
        }
        if plus > 0 {
            prefix.push(Sign::Plus);
            rec(minus, plus - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::with_capacity(2 * n), &mut out);
    Ok(out)
}

/// A ±-word on the window ℍ[−2n, 2n] (length 4n).
///
/// Words violating the box convention (minuses on the left flank, pluses
/// on the right flank, balanced middle) are allowed; [`ExtSeq::in_box`]
/// flags them.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtSeq {
    signs: Vec<Sign>,
    n: usize,
}

impl ExtSeq {
    pub fn new(signs: Vec<Sign>) -> Result<ExtSeq> {
        if signs.is_empty() || !signs.len().is_multiple_of(4) {
            return Err(Error::InvalidSequence(format!(
                "window length {} is not a positive multiple of 4",
                signs.len()
            )));
        }
        let n = signs.len() / 4;
        Ok(ExtSeq { signs, n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    /// Sign at a 1-based window position.
    pub fn at(&self, pos: usize) -> Sign {
        self.signs[pos - 1]
    }

    pub fn in_box(&self) -> bool {
        let n = self.n;
        self.signs[..n].iter().all(|&s| s == Sign::Minus)
            && self.signs[3 * n..].iter().all(|&s| s == Sign::Plus)
            && 2 * count(&self.signs[n..3 * n], Sign::Plus) == 2 * n
    }

    /// The middle 2n signs, when the word lies in the box.
    pub fn restrict(&self) -> Option<SignSeq> {
        if !self.in_box() {
            return None;
        }
        Some(SignSeq {
            signs: self.signs[self.n..3 * self.n].to_vec(),
        })
    }

    /// Copy with the signs at two 1-based positions flipped.
    pub fn flipped(&self, i: usize, j: usize) -> ExtSeq {
        let mut signs = self.signs.clone();
        signs[i - 1] = signs[i - 1].flip();
        signs[j - 1] = signs[j - 1].flip();
        ExtSeq { signs, n: self.n }
    }
}

impl fmt::Display for ExtSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_signs(&self.signs))
    }
}

impl FromStr for ExtSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<ExtSeq> {
        ExtSeq::new(parse_signs(s)?)
    }
}

impl Serialize for ExtSeq {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}
