use thiserror::Error;

/// Failures raised by the exact and numeric layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polynomial is not divisible by (1 - x^2)^{order}")]
    NotDivisible { order: u32 },

    #[error("normalization {normalization} is undefined for degree {degree}: {reason}")]
    UndefinedNormalization {
        normalization: &'static str,
        degree: usize,
        reason: &'static str,
    },

    #[error("unsupported Jacobi parameters (alpha = {alpha}, beta = {beta}): {reason}")]
    UnsupportedParameters {
        alpha: String,
        beta: String,
        reason: &'static str,
    },

    #[error("Gamma ratio has a pole: argument {argument} is a nonpositive integer")]
    PoleInGammaRatio { argument: String },

    #[error("polynomials are not scalar multiples of each other")]
    NotProportional,

    #[error("Jacobi-Stirling sum for ({n}, {j}) is not a nonnegative integer: {value}")]
    NonIntegerResult { n: usize, j: usize, value: String },

    #[error("function is not in the weighted space: {0}")]
    NotInWeightedSpace(String),

    #[error("computed value {computed} disagrees with closed form {expected}")]
    MismatchWithClosedForm { computed: String, expected: String },

    #[error("Newton iteration for node {index} of order {order} did not converge")]
    ConvergenceFailure { order: usize, index: usize },

    #[error("tail integral does not converge on [{from}, {to}]")]
    NonFiniteIntegral { from: f64, to: f64 },

    #[error("mass matrix is not positive definite (pivot {pivot})")]
    MassNotPositiveDefinite { pivot: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
