use num_traits::Zero;

use crate::algebra::rational::{int, ExactRational};
use crate::algebra::{Polynomial, ScaledPolynomial};
use crate::error::Result;
use crate::jacobi::JacobiParams;
use crate::stirling::composite_coefficients;

/// `-(1 - x^2) y'' + (α - β + (α + β + 2) x) y' + k y` on a polynomial.
pub fn ell_poly(y: &Polynomial, k: &ExactRational, params: &JacobiParams) -> Polynomial {
    let weight = Polynomial::one_minus_x_squared_pow(1);
    let mut out = -(&weight * &y.nth_derivative(2));
    let drift = Polynomial::linear(
        params.alpha() + params.beta() + int(2),
        params.alpha() - params.beta(),
    );
    if !drift.is_zero() {
        out = &out + &(&drift * &y.derivative());
    }
    &out + &y.scale(k)
}

/// The Jacobi differential expression applied to `f`.
///
/// At `α = β = -1` this is `-(1 - x^2) f'' + k f`.
pub fn apply_ell(f: &ScaledPolynomial, k: &ExactRational, params: &JacobiParams) -> ScaledPolynomial {
    f.map_poly(|p| ell_poly(p, k, params))
}

/// The `n`-th composite power of the `α = β = -1` expression, `n >= 1`.
///
/// Uses the Lagrangian symmetric form
/// `ℓ^n[y] = Σ_{j=0}^{n} (-1)^j c_j(n,k) (1-x^2) ((1-x^2)^{j-1} y^{(j)})^{(j)}`,
/// where the `j = 0` term reduces to `c_0(n,k) y`.
pub fn ell_power_poly(y: &Polynomial, n: usize, k: &ExactRational) -> Result<Polynomial> {
    let coeffs = composite_coefficients(n, k)?;
    let weight = Polynomial::one_minus_x_squared_pow(1);
    let mut out = y.scale(&coeffs.get(0));
    for (j, c) in coeffs.c.iter().enumerate().skip(1) {
        if c.is_zero() {
            continue;
        }
        let inner = &Polynomial::one_minus_x_squared_pow(j as u32 - 1) * &y.nth_derivative(j);
        let term = (&weight * &inner.nth_derivative(j)).scale(c);
        out = if j % 2 == 0 { &out + &term } else { &out - &term };
    }
    Ok(out)
}

pub fn apply_ell_power(f: &ScaledPolynomial, n: usize, k: &ExactRational) -> Result<ScaledPolynomial> {
    let poly = ell_power_poly(f.poly(), n, k)?;
    Ok(f.map_poly(|_| poly))
}
