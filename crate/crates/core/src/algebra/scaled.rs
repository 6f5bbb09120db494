use num_traits::{One, Signed, Zero};

use super::polynomial::Polynomial;
use super::rational::ExactRational;
use super::surd::Surd;
use crate::error::{Error, Result};

/// The function `sqrt(scale_squared) * poly(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledPolynomial {
    scale_squared: ExactRational,
    poly: Polynomial,
}

impl ScaledPolynomial {
    pub fn new(scale_squared: ExactRational, poly: Polynomial) -> Result<Self> {
        if !scale_squared.is_positive() {
            return Err(Error::InvalidArgument(format!(
                "scale squared must be positive, got {scale_squared}"
            )));
        }
        if poly.is_zero() {
            return Ok(Self::zero());
        }
        Ok(Self { scale_squared, poly })
    }

    pub fn unscaled(poly: Polynomial) -> Self {
        Self {
            scale_squared: ExactRational::one(),
            poly,
        }
    }

    pub fn zero() -> Self {
        Self::unscaled(Polynomial::zero())
    }

    pub fn scale_squared(&self) -> &ExactRational {
        &self.scale_squared
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Applies a linear map with rational coefficients to the polynomial part.
    pub fn map_poly(&self, f: impl FnOnce(&Polynomial) -> Polynomial) -> Self {
        let poly = f(&self.poly);
        if poly.is_zero() {
            Self::zero()
        } else {
            Self {
                scale_squared: self.scale_squared.clone(),
                poly,
            }
        }
    }

    /// Multiplies the function by `sqrt(factor)`.
    pub fn rescale(&self, factor: &ExactRational) -> Result<Self> {
        Self::new(&self.scale_squared * factor, self.poly.clone())
    }

    pub fn eval(&self, x: &ExactRational) -> Surd {
        Surd::new(self.poly.eval(x), self.scale_squared.clone())
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        super::rational::to_f64(&self.scale_squared).sqrt() * self.poly.eval_f64(x)
    }

    /// Exact equality of the represented functions.
    ///
    /// Compares `s1 q1^2` with `s2 q2^2` coefficientwise and requires the
    /// leading coefficients of `q1` and `q2` to share a sign.
    pub fn same_function(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.poly.leading_sign() == other.poly.leading_sign()
            && (&self.poly * &self.poly).scale(&self.scale_squared)
                == (&other.poly * &other.poly).scale(&other.scale_squared)
    }

    /// Returns `c^2` when `self = c * other` for a real constant `c`.
    pub fn proportionality_squared(&self, other: &Self) -> Option<ExactRational> {
        let ratio = poly_ratio(&self.poly, &other.poly)?;
        Some(&ratio * &ratio * &self.scale_squared / &other.scale_squared)
    }
}

/// The rational `r` with `p = r q`, if one exists (`q` nonzero).
pub fn poly_ratio(p: &Polynomial, q: &Polynomial) -> Option<ExactRational> {
    let lead_q = q.leading()?;
    if p.is_zero() {
        return Some(ExactRational::zero());
    }
    if p.degree() != q.degree() {
        return None;
    }
    let r = p.leading()? / lead_q;
    (q.scale(&r) == *p).then_some(r)
}
