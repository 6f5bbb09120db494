use super::quadrature::QuadratureRule;
use crate::algebra::rational::{as_i64, to_f64};
use crate::algebra::Polynomial;
use crate::error::{Error, Result};
use crate::operators::InnerProductSpec;
use crate::stirling::composite_coefficients;

/// Floating-point evaluation of the inner product `spec` with `rule`.
///
/// Negative weight exponents are applied by division at the nodes, which are
/// interior, so `f g` must vanish where the weight is singular for the result
/// to approximate the exact value.
pub fn quadrature_inner_product(
    f: &Polynomial,
    g: &Polynomial,
    spec: &InnerProductSpec,
    rule: &QuadratureRule,
) -> Result<f64> {
    match spec {
        InnerProductSpec::Classical(params) => {
            let (a, b) = match (as_i64(params.alpha()), as_i64(params.beta())) {
                (Some(a), Some(b)) => (a as i32, b as i32),
                _ => {
                    return Err(Error::UnsupportedParameters {
                        alpha: params.alpha().to_string(),
                        beta: params.beta().to_string(),
                        reason: "quadrature cross-check uses integer exponents",
                    })
                }
            };
            Ok(rule.integrate(|x| f.eval_f64(x) * g.eval_f64(x) * (1.0 - x).powi(a) * (1.0 + x).powi(b)))
        }
        InnerProductSpec::SobolevPhi => {
            let boundary = 0.5 * (f.eval_f64(-1.0) * g.eval_f64(-1.0) + f.eval_f64(1.0) * g.eval_f64(1.0));
            let (df, dg) = (f.derivative(), g.derivative());
            Ok(boundary + rule.integrate(|x| df.eval_f64(x) * dg.eval_f64(x)))
        }
        InnerProductSpec::LeftDefinite { n, k } => {
            let coeffs = composite_coefficients(*n, k)?;
            let mut total = 0.0;
            for (j, c) in coeffs.c.iter().enumerate() {
                let (fj, gj) = (f.nth_derivative(j), g.nth_derivative(j));
                let term = rule.integrate(|x| fj.eval_f64(x) * gj.eval_f64(x) * (1.0 - x * x).powi(j as i32 - 1));
                total += to_f64(c) * term;
            }
            Ok(total)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;
    use crate::jacobi::JacobiParams;
    use crate::numeric::gauss_legendre;

    #[test]
    fn nonclassical_weight() {
        let rule = gauss_legendre(40).unwrap();
        let w = Polynomial::from_ints(&[-1, 0, 1]);
        let spec = InnerProductSpec::Classical(JacobiParams::nonclassical());
        let got = quadrature_inner_product(&w, &w, &spec, &rule).unwrap();
        assert!((got - 4.0 / 3.0).abs() < 1e-12);
        let ld = InnerProductSpec::left_definite(1, int(0)).unwrap();
        // c_1(1, 0) = 1: ∫ (2x)^2
        assert!((quadrature_inner_product(&w, &w, &ld, &rule).unwrap() - 8.0 / 3.0).abs() < 1e-12);
    }
}
