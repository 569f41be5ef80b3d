//! Exact computation with finite-dimensional commutative Frobenius algebras
//! and Frobenius extensions over `Λ = Q[q, q⁻¹]`.
//!
//! The crate builds classical and quantum cohomology rings of Grassmannians
//! (from the Landau–Ginzburg potential) and of complete intersections (from
//! explicit relations), computes characteristic elements (quantum Euler
//! classes) and Hessian determinants, and decides semisimplicity by two
//! independent routes. All arithmetic is exact.

pub mod algebra;
pub mod error;
pub mod frobenius;
pub mod grassmannian;
pub mod groebner;
pub mod hypersurface;
pub mod linalg;
pub mod poly;
pub mod presentation;
pub mod scalar;
pub mod semisimplicity;
pub mod specialization;

pub use error::{Error, Result};
pub use scalar::{Ground, Rational, Scalar};
