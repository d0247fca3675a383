//! Exact rational scalars and their `"p/q"` string form.

use num::{BigInt, BigRational, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn int(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn frac(p: i64, q: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(q))
}

/// Always writes the denominator, so `2` becomes `"2/1"`.
pub fn to_string(v: &Q) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

pub fn parse(s: &str) -> Result<Q> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
    let q: BigInt = q
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
    if q.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Q::new(p, q))
}

/// Compact human form: `1`, `-1/2`, used in ASCII output.
pub fn display(v: &Q) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_round_trip() {
        for v in [frac(1, 2), frac(-13, 96), int(0), int(7)] {
            assert_eq!(parse(&to_string(&v)).unwrap(), v);
        }
        assert_eq!(to_string(&frac(2, 4)), "1/2");
        assert_eq!(parse("3").unwrap(), int(3));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }
}
