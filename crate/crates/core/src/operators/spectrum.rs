use std::fmt;

use num_traits::Signed;

use crate::algebra::rational::{int, ExactRational};
use crate::error::{Error, Result};

/// The self-adjoint operators generated by `ℓ` at `α = β = -1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperatorTag {
    /// Right-definite operator in `L^2((-1,1); (1-x^2)^{-1})`.
    A,
    /// `n`-th left-definite operator.
    Bn(usize),
    /// Operator in the Sobolev space `W`.
    T,
}

impl OperatorTag {
    /// Index of the first eigenvalue.
    pub fn first_index(self) -> usize {
        match self {
            OperatorTag::T => 0,
            _ => 2,
        }
    }
}

impl fmt::Display for OperatorTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorTag::A => write!(f, "A"),
            OperatorTag::Bn(n) => write!(f, "B{n}"),
            OperatorTag::T => write!(f, "T"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumSpec {
    pub operator: OperatorTag,
    pub k: ExactRational,
}

impl SpectrumSpec {
    pub fn new(operator: OperatorTag, k: ExactRational) -> Result<Self> {
        if k.is_negative() {
            return Err(Error::InvalidArgument(format!("k must be nonnegative, got {k}")));
        }
        if operator == OperatorTag::Bn(0) {
            return Err(Error::InvalidArgument("left-definite index n must be >= 1".into()));
        }
        Ok(Self { operator, k })
    }
}

/// One eigenvalue together with the degree of its eigenpolynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralPoint {
    pub index: usize,
    pub value: ExactRational,
}

/// First `count` eigenvalues `m(m-1) + k` in increasing index.
///
/// For `T` the indices start at 0, so `k` appears twice (indices 0 and 1).
pub fn spectrum(spec: &SpectrumSpec, count: usize) -> Result<Vec<SpectralPoint>> {
    if count == 0 {
        return Err(Error::InvalidArgument("count must be >= 1".into()));
    }
    let start = spec.operator.first_index();
    Ok((start..start + count)
        .map(|m| SpectralPoint {
            index: m,
            value: int((m * m.saturating_sub(1)) as i64) + &spec.k,
        })
        .collect())
}
