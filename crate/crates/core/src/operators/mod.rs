//! The Jacobi differential expression, its composite powers, the three inner
//! products, Gram and operator matrices, and spectra.

pub mod ell;
pub mod identities;
pub mod inner;
pub mod matrix;
pub mod spectrum;

pub use ell::{apply_ell, apply_ell_power, ell_poly, ell_power_poly};
pub use identities::{verify_dirichlet_identity, verify_lagrange_identity};
pub use inner::{
    decompose_w, derivative_orthogonality_value, inner_product, inner_product_poly, InnerProductSpec,
};
pub use matrix::{gram_matrix, operator_matrix, GramMatrix};
pub use spectrum::{spectrum, OperatorTag, SpectralPoint, SpectrumSpec};
