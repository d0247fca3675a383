//! Cup-diagram algebras.
//!
//! Khovanov's arc algebra ℋᵐ, its colored enlargement 𝒦ⁿ, Braden's
//! generators and relations evaluated inside 𝒦ⁿ, centers and graded
//! dimension data, and the Tanisaki presentation of Springer-fibre
//! cohomology for two-row shapes.

pub mod algebra;
pub mod arc_algebra;
pub mod braden;
pub mod colored_algebra;
pub mod diagram;
pub mod error;
pub mod frobenius;
pub mod gluing;
pub mod invariants;
pub mod linalg;
pub mod rational;
pub mod tanisaki;

pub use error::{Error, Result};
