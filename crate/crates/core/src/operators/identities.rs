//! Green's and Dirichlet's formulas as polynomial identities.
//!
//! Both formulas hold on every `[a, b] ⊂ (-1, 1)`, so their integrands agree
//! pointwise. Multiplying through by `(1 - x^2)` leaves identities between
//! polynomials that can be checked exactly.

use super::ell::ell_poly;
use crate::algebra::rational::ExactRational;
use crate::algebra::Polynomial;
use crate::jacobi::JacobiParams;

/// `ℓ[f] g - f ℓ[g] - (1 - x^2) (f g' - f' g)' = 0`.
pub fn verify_lagrange_identity(f: &Polynomial, g: &Polynomial, k: &ExactRational) -> bool {
    let nc = JacobiParams::nonclassical();
    let weight = Polynomial::one_minus_x_squared_pow(1);
    let wronskian = &(f * &g.derivative()) - &(&f.derivative() * g);
    let lhs = &(&ell_poly(f, k, &nc) * g) - &(f * &ell_poly(g, k, &nc));
    (&lhs - &(&weight * &wronskian.derivative())).is_zero()
}

/// `ℓ[f] g - [-(1 - x^2)(f' g)' + (1 - x^2) f' g' + k f g] = 0`.
pub fn verify_dirichlet_identity(f: &Polynomial, g: &Polynomial, k: &ExactRational) -> bool {
    let nc = JacobiParams::nonclassical();
    let weight = Polynomial::one_minus_x_squared_pow(1);
    let df = f.derivative();
    let boundary = -(&weight * &(&df * g).derivative());
    let energy = &weight * &(&df * &g.derivative());
    let rhs = &(&boundary + &energy) + &(f * g).scale(k);
    (&(&ell_poly(f, k, &nc) * g) - &rhs).is_zero()
}
