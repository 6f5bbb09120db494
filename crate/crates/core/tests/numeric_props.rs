mod common;

use common::{polynomial, vanishing_polynomial};
use jsob_core::algebra::rational::{int, to_f64};
use jsob_core::algebra::Polynomial;
use jsob_core::jacobi::JacobiParams;
use jsob_core::numeric::{
    chel_k, galerkin_spectrum, gauss_legendre, knorm_crosscheck, quadrature_inner_product, ChelInstance,
    GalerkinSystem, QuadratureRule,
};
use jsob_core::operators::{inner_product_poly, InnerProductSpec};
use proptest::prelude::*;
use std::sync::OnceLock;

fn rule40() -> &'static QuadratureRule {
    static RULE: OnceLock<QuadratureRule> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(40).unwrap())
}

/// Relative agreement, measured against the Cauchy-Schwarz scale of the pair
/// so that vanishing exact values are handled.
fn agrees(f: &Polynomial, g: &Polynomial, spec: &InnerProductSpec, tol: f64) -> Result<(), String> {
    let exact = to_f64(&inner_product_poly(f, g, spec).unwrap());
    let approx = quadrature_inner_product(f, g, spec, rule40()).unwrap();
    let ff = to_f64(&inner_product_poly(f, f, spec).unwrap()).abs();
    let gg = to_f64(&inner_product_poly(g, g, spec).unwrap()).abs();
    let scale = exact.abs().max((ff * gg).sqrt()).max(f64::MIN_POSITIVE);
    if (approx - exact).abs() <= tol * scale {
        Ok(())
    } else {
        Err(format!("{spec}: exact {exact}, quadrature {approx}"))
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn quadrature_matches_nonnegative_weights(f in polynomial(12), g in polynomial(12), a in 0i64..=3, b in 0i64..=3) {
        let spec = InnerProductSpec::Classical(JacobiParams::from_ints(a, b).unwrap());
        prop_assert!(agrees(&f, &g, &spec, 1e-10).is_ok(), "{:?}", agrees(&f, &g, &spec, 1e-10));
        prop_assert!(agrees(&f, &g, &InnerProductSpec::SobolevPhi, 1e-10).is_ok());
    }

    #[test]
    fn quadrature_matches_singular_weight(f in vanishing_polynomial(12), g in vanishing_polynomial(12), n in 1usize..=3) {
        let nc = InnerProductSpec::Classical(JacobiParams::nonclassical());
        prop_assert!(agrees(&f, &g, &nc, 1e-8).is_ok(), "{:?}", agrees(&f, &g, &nc, 1e-8));
        let ld = InnerProductSpec::left_definite(n, int(1)).unwrap();
        prop_assert!(agrees(&f, &g, &ld, 1e-8).is_ok(), "{:?}", agrees(&f, &g, &ld, 1e-8));
    }
}

#[test]
fn galerkin_monotone_and_bounded_below() {
    for k in [0.0, 1.0, 7.0 / 3.0] {
        let spectra: Vec<Vec<f64>> = (2..=27).step_by(5).map(|s| galerkin_spectrum(s, k).unwrap()).collect();
        for pair in spectra.windows(2) {
            for (j, (coarse, fine)) in pair[0].iter().zip(&pair[1]).enumerate() {
                // Equality up to rounding is allowed: the trial spaces contain
                // the leading eigenfunctions exactly.
                assert!(*coarse >= fine - 1e-9 * fine.abs(), "k={k} j={j}: {coarse} < {fine}");
            }
        }
        for values in &spectra {
            assert!(values.iter().all(|&v| v >= k), "k={k}: {values:?}");
        }
    }
}

#[test]
fn galerkin_matrices_symmetric() {
    for size in [2, 9, 20] {
        let sys = GalerkinSystem::assemble(size, &int(3)).unwrap();
        assert!(sys.is_symmetric());
        assert_eq!(sys.stiffness.len(), size);
    }
}

#[test]
fn chel_dirichlet_grid_stable() {
    let coarse = chel_k(&ChelInstance::dirichlet(), 10_000).unwrap();
    let fine = chel_k(&ChelInstance::dirichlet(), 20_000).unwrap();
    assert!((coarse.k_max - fine.k_max).abs() < 1e-6);
    assert!((coarse.k_max_squared() - 0.278).abs() < 1e-3);
}

#[test]
fn chel_bounded_variant_of_w1v1() {
    let r = chel_k(&ChelInstance::w1v1_exact(), 2000).unwrap();
    // (1+x) artanh(-x) stays below the cruder bound -(1+x) ln(1+x).
    assert!(r.k_max_squared() > 0.0 && r.k_max_squared() < (-1f64).exp());
}

#[test]
fn knorm_up_to_degree_ten() {
    for n in 0..=10 {
        for (a, b) in [(0.5, -0.25), (1.0, 1.0), (-0.5, 0.5), (3.0, 0.0)] {
            let err = knorm_crosscheck(n, a, b).unwrap();
            assert!(err < 1e-8, "n={n} ({a},{b}): {err}");
        }
    }
}
