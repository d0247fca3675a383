//! Finite power series in nilpotent elements.

use super::{AlgElem, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::rational::frac;

/// Smallest k ≥ 1 with x^k = 0.
pub fn nilpotency_index<A: FiniteAlgebra + ?Sized>(alg: &A, x: &AlgElem) -> Result<usize> {
    let bound = alg.dim() + 1;
    let mut power = x.clone();
    for k in 1..=bound {
        if power.is_zero() {
            return Ok(k);
        }
        power = alg.mul(&power, x);
    }
    Err(Error::NonTerminating(bound))
}

/// Σ_{k≥1} (−1)^{k+1} Nᵏ/k for N = u − unit, where `unit` is the local
/// identity u is unipotent over.
pub fn log_unipotent<A: FiniteAlgebra + ?Sized>(
    alg: &A,
    unit: &AlgElem,
    u: &AlgElem,
) -> Result<AlgElem> {
    let n = u - unit;
    let bound = alg.dim() + 1;
    let mut sum = AlgElem::zero();
    let mut power = n.clone();
    for k in 1..=bound {
        if power.is_zero() {
            return Ok(sum);
        }
        let sign = if k % 2 == 1 { 1 } else { -1 };
        sum += &power.scale(&frac(sign, k as i64));
        power = alg.mul(&power, &n);
    }
    Err(Error::NonTerminating(bound))
}

/// u⁻¹ = Σ (−N)ᵏ for u = unit + N.
pub fn inverse_unipotent<A: FiniteAlgebra + ?Sized>(
    alg: &A,
    unit: &AlgElem,
    u: &AlgElem,
) -> Result<AlgElem> {
    let minus_n = unit - u;
    let bound = alg.dim() + 1;
    let mut sum = unit.clone();
    let mut power = minus_n.clone();
    for _ in 0..bound {
        if power.is_zero() {
            return Ok(sum);
        }
        sum += &power;
        power = alg.mul(&power, &minus_n);
    }
    Err(Error::NonTerminating(bound))
}
