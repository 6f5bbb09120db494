mod chel;
mod crosscheck;
mod galerkin;
mod knorm;
mod quadrature;

pub use chel::{chel_k, golden_section_max, ChelInstance, ChelResult, NamedFn, MIN_GRID};
pub use crosscheck::quadrature_inner_product;
pub use galerkin::{galerkin_spectrum, GalerkinSystem, MAX_SIZE as GALERKIN_MAX_SIZE, MIN_SIZE as GALERKIN_MIN_SIZE};
pub use knorm::{jacobi_weighted_integral, knorm, knorm_crosscheck};
pub use quadrature::{adaptive_integrate, gauss_legendre, QuadratureRule, MAX_ORDER};
