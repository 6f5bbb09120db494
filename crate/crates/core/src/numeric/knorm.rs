use statrs::function::gamma::ln_gamma;

use super::quadrature::gauss_legendre;
use crate::algebra::rational::from_f64;
use crate::error::{Error, Result};
use crate::jacobi::{classical_jacobi, JacobiParams};

const RULE_ORDER: usize = 200;

/// `k_n^{α,β}`, the factor making the reference polynomial `L^2_{α,β}`-unit.
pub fn knorm(n: usize, alpha: f64, beta: f64) -> f64 {
    let s = alpha + beta;
    let ln_sq = if n == 0 {
        ln_gamma(s + 2.0) - ln_gamma(alpha + 1.0) - ln_gamma(beta + 1.0)
    } else {
        let nf = n as f64;
        ln_gamma(nf + 1.0) + (1.0 + s + 2.0 * nf).ln() + ln_gamma(s + nf + 1.0)
            - ln_gamma(alpha + nf + 1.0)
            - ln_gamma(beta + nf + 1.0)
    } - (s + 1.0) * std::f64::consts::LN_2;
    (0.5 * ln_sq).exp()
}

/// `∫ f (1-x)^α (1+x)^β` for smooth `f`.
///
/// Each half of `[-1, 1]` is mapped so the singular endpoint becomes `u^q`
/// with `q (1 + exponent) >= 8`, which leaves a smooth integrand in `u`.
pub fn jacobi_weighted_integral(f: impl Fn(f64) -> f64, alpha: f64, beta: f64) -> Result<f64> {
    let rule = gauss_legendre(RULE_ORDER)?;
    let power = |e: f64| (8.0 / (e + 1.0)).ceil().max(1.0);
    let (qa, qb) = (power(alpha), power(beta));
    let right = rule.integrate_on(0.0, 1.0, |u| {
        let uq = u.powf(qa);
        let x = 1.0 - uq;
        qa * u.powf(qa * (alpha + 1.0) - 1.0) * (2.0 - uq).powf(beta) * f(x)
    });
    let left = rule.integrate_on(0.0, 1.0, |u| {
        let uq = u.powf(qb);
        let x = uq - 1.0;
        qb * u.powf(qb * (beta + 1.0) - 1.0) * (2.0 - uq).powf(alpha) * f(x)
    });
    Ok(left + right)
}

/// `|‖k_n P_n‖²_{α,β} - 1|` with the norm evaluated by quadrature.
pub fn knorm_crosscheck(n: usize, alpha: f64, beta: f64) -> Result<f64> {
    if !(alpha > -1.0 && beta > -1.0) {
        return Err(Error::InvalidArgument(format!(
            "knorm cross-check needs alpha, beta > -1, got ({alpha}, {beta})"
        )));
    }
    let params = JacobiParams::classical(from_f64(alpha)?, from_f64(beta)?)?;
    let p = classical_jacobi(n, &params);
    let k = knorm(n, alpha, beta);
    let norm = jacobi_weighted_integral(
        |x| {
            let v = k * p.eval_f64(x);
            v * v
        },
        alpha,
        beta,
    )?;
    Ok((norm - 1.0).abs())
}
