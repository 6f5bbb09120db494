//! Exact construction of the Jacobi polynomials with `α = β = -1`, their
//! Sobolev and left-definite inner products, and the spectra of the
//! self-adjoint operators generated by the Jacobi differential expression.
//!
//! Everything in [`algebra`], [`jacobi`], [`stirling`] and [`operators`] is
//! exact rational arithmetic. [`numeric`] holds the floating-point
//! cross-checks: Gauss-Legendre quadrature, the Chisholm-Everitt constant
//! and a Galerkin discretization of the right-definite operator.

pub mod algebra;
pub mod error;
pub mod jacobi;
pub mod numeric;
pub mod operators;
pub mod stirling;

pub use error::{Error, Result};
