use std::fmt;

use num_traits::{Signed, Zero};

use crate::algebra::rational::{int, ratio, ExactRational};
use crate::algebra::{Polynomial, ScaledPolynomial, Surd};
use crate::error::{Error, Result};
use crate::jacobi::{derivative_coefficient_squared, jacobi_polynomial, JacobiParams, Normalization};
use crate::stirling::composite_coefficients;

/// Which bilinear form to evaluate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InnerProductSpec {
    /// `∫ f g (1-x)^α (1+x)^β`, integer `α, β >= -1`.
    Classical(JacobiParams),
    /// `½ f(-1) g(-1) + ½ f(1) g(1) + ∫ f' g'`.
    SobolevPhi,
    /// `Σ_j c_j(n,k) ∫ f^{(j)} g^{(j)} (1-x^2)^{j-1}`.
    LeftDefinite { n: usize, k: ExactRational },
}

impl InnerProductSpec {
    pub fn left_definite(n: usize, k: ExactRational) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("left-definite index n must be >= 1".into()));
        }
        if k.is_negative() {
            return Err(Error::InvalidArgument(format!("k must be nonnegative, got {k}")));
        }
        Ok(Self::LeftDefinite { n, k })
    }

    /// Parameters of the polynomial family naturally paired with this form.
    pub fn family_params(&self) -> JacobiParams {
        match self {
            Self::Classical(p) => p.clone(),
            _ => JacobiParams::nonclassical(),
        }
    }
}

impl fmt::Display for InnerProductSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Classical(p) => write!(f, "classical{p}"),
            Self::SobolevPhi => write!(f, "phi"),
            Self::LeftDefinite { n, k } => write!(f, "left-definite(n={n}, k={k})"),
        }
    }
}

fn weighted_space_error(what: &str) -> impl FnOnce(Error) -> Error + '_ {
    move |e| match e {
        Error::NotDivisible { .. } => Error::NotInWeightedSpace(what.to_string()),
        other => other,
    }
}

/// The bilinear form on plain polynomials.
pub fn inner_product_poly(f: &Polynomial, g: &Polynomial, spec: &InnerProductSpec) -> Result<ExactRational> {
    match spec {
        InnerProductSpec::Classical(params) => {
            let (a, b) = params.integer_pair().ok_or_else(|| Error::UnsupportedParameters {
                alpha: params.alpha().to_string(),
                beta: params.beta().to_string(),
                reason: "exact classical inner products need integer parameters",
            })?;
            (f * g)
                .integrate_jacobi_weight(a, b)
                .map_err(weighted_space_error("f g must vanish where the weight is singular"))
        }
        InnerProductSpec::SobolevPhi => {
            let (lo, hi) = (int(-1), int(1));
            let boundary = (f.eval(&lo) * g.eval(&lo) + f.eval(&hi) * g.eval(&hi)) * ratio(1, 2);
            Ok(boundary + (&f.derivative() * &g.derivative()).integrate())
        }
        InnerProductSpec::LeftDefinite { n, k } => {
            let coeffs = composite_coefficients(*n, k)?;
            let mut total = ExactRational::zero();
            for (j, c) in coeffs.c.iter().enumerate() {
                let product = &f.nth_derivative(j) * &g.nth_derivative(j);
                let integral = product
                    .integrate_weighted(j as i32 - 1)
                    .map_err(weighted_space_error("the j = 0 term needs f g to vanish at ±1"))?;
                total += c * integral;
            }
            Ok(total)
        }
    }
}

/// The bilinear form on scaled polynomials; the radicand is the product of
/// the two scale factors.
pub fn inner_product(f: &ScaledPolynomial, g: &ScaledPolynomial, spec: &InnerProductSpec) -> Result<Surd> {
    let value = inner_product_poly(f.poly(), g.poly(), spec)?;
    Ok(Surd::new(value, f.scale_squared() * g.scale_squared()))
}

/// `∫ (d^j P_n)(d^j P_r) w_{α+j,β+j}` for the `L2Orthonormal` family,
/// checked against `n! Γ(α+β+n+1+j) / ((n-j)! Γ(α+β+n+1)) δ_{n,r}`.
pub fn derivative_orthogonality_value(
    n: usize,
    r: usize,
    j: usize,
    params: &JacobiParams,
) -> Result<ExactRational> {
    let pn = jacobi_polynomial(n, params, Normalization::L2Orthonormal)?;
    let pr = jacobi_polynomial(r, params, Normalization::L2Orthonormal)?;
    let dn = pn.map_poly(|p| p.nth_derivative(j));
    let dr = pr.map_poly(|p| p.nth_derivative(j));
    let computed = inner_product(&dn, &dr, &InnerProductSpec::Classical(params.shifted(j)))?;
    let expected = if n == r {
        derivative_coefficient_squared(n, j, params)?
    } else {
        ExactRational::zero()
    };
    if computed != Surd::rational(expected.clone()) {
        return Err(Error::MismatchWithClosedForm {
            computed: computed.to_string(),
            expected: expected.to_string(),
        });
    }
    Ok(expected)
}

/// Splits `f` into a part vanishing at `±1` and the linear interpolant of
/// its endpoint values.
pub fn decompose_w(f: &Polynomial) -> (Polynomial, Polynomial) {
    let at_hi = f.eval(&int(1));
    let at_lo = f.eval(&int(-1));
    let half = ratio(1, 2);
    let f2 = Polynomial::linear((&at_hi - &at_lo) * &half, (&at_hi + &at_lo) * &half);
    (f - &f2, f2)
}
