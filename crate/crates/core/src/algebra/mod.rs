//! Exact scalar and polynomial arithmetic.

pub mod polynomial;
pub mod rational;
pub mod scaled;
pub mod surd;

pub use polynomial::Polynomial;
pub use rational::ExactRational;
pub use scaled::ScaledPolynomial;
pub use surd::Surd;
