//! Verification suites run by `jsob verify`.

use clap::ValueEnum;
use jsob_core::algebra::rational::{from_bigint, int, pow, ratio, ExactRational};
use jsob_core::algebra::{Polynomial, ScaledPolynomial, Surd};
use jsob_core::jacobi::{check_derivative_identity, nonclassical_jacobi, JacobiParams, Normalization};
use jsob_core::numeric::{chel_k, galerkin_spectrum, knorm_crosscheck, ChelInstance};
use jsob_core::operators::{
    apply_ell, decompose_w, derivative_orthogonality_value, ell_poly, ell_power_poly, gram_matrix, inner_product,
    inner_product_poly, operator_matrix, spectrum, verify_dirichlet_identity, verify_lagrange_identity,
    InnerProductSpec, OperatorTag, SpectrumSpec,
};
use jsob_core::stirling::{composite_coefficients, jacobi_stirling, verify_defining_identity};
use jsob_core::Error;
use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Stirling,
    Orthogonality,
    Eigen,
    Identities,
    Galerkin,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Stirling => "stirling",
            Suite::Orthogonality => "orthogonality",
            Suite::Eigen => "eigen",
            Suite::Identities => "identities",
            Suite::Galerkin => "galerkin",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn core(e: Error) -> String {
    e.to_string()
}

fn undefined(e: &Error) -> bool {
    matches!(
        e,
        Error::UndefinedNormalization { .. } | Error::UnsupportedParameters { .. } | Error::PoleInGammaRatio { .. }
    )
}

fn random_polynomial(rng: &mut StdRng, max_degree: usize) -> Polynomial {
    let degree = rng.gen_range(0..=max_degree);
    Polynomial::new(
        (0..=degree)
            .map(|_| ratio(rng.gen_range(-30..=30), rng.gen_range(1..=12)))
            .collect(),
    )
}

const SHIFTS: fn() -> [ExactRational; 3] = || [int(0), int(1), ratio(7, 3)];

// stirling

fn triangular() -> Outcome {
    for n in 0..=12 {
        ensure(jacobi_stirling(n, n).map_err(core)? == 1.into(), || format!("diagonal n={n}"))?;
        for j in n + 1..=12 {
            ensure(jacobi_stirling(n, j).map_err(core)?.is_zero(), || format!("n={n} j={j} nonzero"))?;
        }
    }
    Ok("n, j <= 12".into())
}

fn defining_identity() -> Outcome {
    for k in SHIFTS() {
        for n in 1..=6 {
            for m in 2..=12 {
                ensure(verify_defining_identity(n, m, &k).map_err(core)?, || format!("n={n} m={m} k={k}"))?;
            }
        }
    }
    Ok("n <= 6, 2 <= m <= 12, k in {0, 1, 7/3}".into())
}

fn composite_coefficients_check() -> Outcome {
    for n in 1..=8 {
        let c = composite_coefficients(n, &int(0)).map_err(core)?;
        for j in 0..=n {
            ensure(c.get(j) == from_bigint(jacobi_stirling(n, j).map_err(core)?), || format!("n={n} j={j}"))?;
        }
        for k in SHIFTS() {
            let c = composite_coefficients(n, &k).map_err(core)?;
            ensure(c.c.iter().all(|v| !v.is_negative()), || format!("negative coefficient n={n} k={k}"))?;
        }
    }
    let fifth = composite_coefficients(5, &int(0)).map_err(core)?;
    let expected: Vec<_> = [0, 0, 8, 52, 20, 1].iter().map(|&v| int(v)).collect();
    ensure(fifth.c == expected, || "fifth power coefficients".into())?;
    Ok("k = 0 branch equals the Stirling numbers; all coefficients nonnegative".into())
}

// orthogonality

fn sobolev_gram() -> Outcome {
    let g = gram_matrix(15, &InnerProductSpec::SobolevPhi, Normalization::PhiOrthonormal).map_err(core)?;
    ensure(g.size() == 16 && g.is_identity(), || "Sobolev Gram matrix is not the 16x16 identity".into())?;
    Ok("16x16 identity".into())
}

fn left_definite() -> Outcome {
    let k = int(1);
    for n in 1..=3 {
        let spec = InnerProductSpec::left_definite(n, k.clone()).map_err(core)?;
        let g = gram_matrix(10, &spec, Normalization::L2Orthonormal).map_err(core)?;
        for (i, m) in g.degrees.iter().enumerate() {
            for j in 0..g.size() {
                let m = *m as i64;
                let expected = if i == j { pow(&int(m * (m - 1) + 1), n as u32) } else { int(0) };
                ensure(*g.get(i, j) == Surd::rational(expected), || format!("n={n} entry ({i},{j})"))?;
            }
        }
    }
    Ok("2 <= m, l <= 10, n <= 3, k = 1".into())
}

fn derivative_orthogonality() -> Outcome {
    let mut checked = 0;
    for a in -1..=2 {
        for b in -1..=2 {
            let Ok(params) = JacobiParams::from_ints(a, b) else { continue };
            for n in 0..=8 {
                for j in 0..=n {
                    for r in 0..=8 {
                        match derivative_orthogonality_value(n, r, j, &params) {
                            Ok(_) => checked += 1,
                            Err(e) if undefined(&e) => {}
                            Err(e) => return Err(format!("({a},{b}) n={n} r={r} j={j}: {e}")),
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{checked} exact values"))
}

fn normalization_bridge() -> Outcome {
    for n in 2..=12usize {
        let p = nonclassical_jacobi(n, Normalization::PhiOrthonormal).map_err(core)?;
        let norm = (p.poly() * p.poly()).integrate_weighted(-1).map_err(core)? * p.scale_squared();
        ensure(norm == ratio(1, (n * (n - 1)) as i64), || format!("n={n}: {norm}"))?;
    }
    Ok("2 <= n <= 12".into())
}

// eigen

fn eigen_equation() -> Outcome {
    let nc = JacobiParams::nonclassical();
    for k in [int(0), int(1)] {
        for n in 0..=20usize {
            let p = nonclassical_jacobi(n, Normalization::PhiOrthonormal).map_err(core)?;
            let lambda = int((n * n.saturating_sub(1)) as i64) + &k;
            let expected = p.map_poly(|q| q.scale(&lambda));
            ensure(apply_ell(&p, &k, &nc).same_function(&expected), || format!("n={n} k={k}"))?;
        }
    }
    Ok("n <= 20, k in {0, 1}".into())
}

fn operator_matrices() -> Outcome {
    for k in [int(0), int(1)] {
        for tag in [OperatorTag::T, OperatorTag::A, OperatorTag::Bn(1), OperatorTag::Bn(2), OperatorTag::Bn(3)] {
            let spec = SpectrumSpec::new(tag, k.clone()).map_err(core)?;
            let m = operator_matrix(10, &spec).map_err(core)?;
            let sigma: Vec<Surd> = spectrum(&spec, m.size())
                .map_err(core)?
                .into_iter()
                .map(|p| Surd::rational(p.value))
                .collect();
            ensure(m.is_diagonal() && m.diagonal() == sigma, || format!("{tag} at k={k}"))?;
        }
    }
    Ok("T, A, B1-B3 diagonal with their spectra".into())
}

fn lower_bound() -> Outcome {
    let nc = JacobiParams::nonclassical();
    let spec = InnerProductSpec::Classical(nc.clone());
    let mut rng = StdRng::seed_from_u64(0x10b0);
    for _ in 0..40 {
        let f = &Polynomial::one_minus_x_squared_pow(1) * &random_polynomial(&mut rng, 8);
        for k in SHIFTS() {
            let lf = ell_poly(&f, &k, &nc);
            let gap = inner_product_poly(&lf, &f, &spec).map_err(core)?
                - &k * inner_product_poly(&f, &f, &spec).map_err(core)?;
            ensure(!gap.is_negative(), || format!("negative gap for f = {f}, k = {k}"))?;
        }
    }
    Ok("40 polynomials vanishing at +-1".into())
}

fn ell_power() -> Outcome {
    let nc = JacobiParams::nonclassical();
    let mut rng = StdRng::seed_from_u64(0xe11);
    for _ in 0..50 {
        let f = random_polynomial(&mut rng, 6);
        let n = rng.gen_range(1..=4);
        let k = ratio(rng.gen_range(0..=20), rng.gen_range(1..=6));
        let iterated = (0..n).fold(f.clone(), |acc, _| ell_poly(&acc, &k, &nc));
        ensure(ell_power_poly(&f, n, &k).map_err(core)? == iterated, || format!("f = {f}, n = {n}, k = {k}"))?;
    }
    Ok("50 random polynomials".into())
}

// identities

fn derivative_identity() -> Outcome {
    let mut checked = 0;
    for a in -1..=2 {
        for b in -1..=2 {
            let Ok(params) = JacobiParams::from_ints(a, b) else { continue };
            for n in 0..=8 {
                for j in 0..=n {
                    match check_derivative_identity(n, j, &params) {
                        Ok(true) => checked += 1,
                        Ok(false) => return Err(format!("({a},{b}) n={n} j={j}")),
                        Err(e) if undefined(&e) => {}
                        Err(e) => return Err(format!("({a},{b}) n={n} j={j}: {e}")),
                    }
                }
            }
        }
    }
    Ok(format!("{checked} cases"))
}

fn green_dirichlet() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x6a73);
    for _ in 0..100 {
        let f = random_polynomial(&mut rng, 8);
        let g = random_polynomial(&mut rng, 8);
        let k = ratio(rng.gen_range(-30..=30), rng.gen_range(1..=12));
        ensure(verify_lagrange_identity(&f, &g, &k), || format!("Lagrange: f = {f}, g = {g}, k = {k}"))?;
        ensure(verify_dirichlet_identity(&f, &g, &k), || format!("Dirichlet: f = {f}, g = {g}, k = {k}"))?;
    }
    Ok("100 random pairs".into())
}

fn decomposition() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x7733);
    let low: Vec<ScaledPolynomial> = (0..=1)
        .map(|n| nonclassical_jacobi(n, Normalization::PhiOrthonormal))
        .collect::<Result<_, _>>()
        .map_err(core)?;
    for _ in 0..50 {
        let f = random_polynomial(&mut rng, 10);
        let (f1, f2) = decompose_w(&f);
        ensure(&f1 + &f2 == f, || format!("sum differs for {f}"))?;
        let f1 = ScaledPolynomial::unscaled(f1);
        for q in &low {
            let v = inner_product(&f1, q, &InnerProductSpec::SobolevPhi).map_err(core)?;
            ensure(v.is_zero(), || format!("f = {f}: phi(f1, q) = {v}"))?;
        }
    }
    Ok("50 random polynomials".into())
}

// galerkin

fn galerkin_recovery() -> Outcome {
    let mut worst = 0.0f64;
    for k in [0.0, 1.0] {
        let values = galerkin_spectrum(30, k).map_err(core)?;
        for (m, v) in (2..=5).zip(&values) {
            let err = (v - ((m * (m - 1)) as f64 + k)).abs();
            worst = worst.max(err);
            ensure(err < 1e-6, || format!("k={k} m={m}: {v}"))?;
        }
    }
    Ok(format!("size 30, max abs error {worst:.2e}"))
}

fn galerkin_monotone() -> Outcome {
    for k in [0.0, 1.0, 7.0 / 3.0] {
        let mut previous: Option<Vec<f64>> = None;
        for size in (5..=30).step_by(5) {
            let values = galerkin_spectrum(size, k).map_err(core)?;
            ensure(values.iter().all(|&v| v >= k), || format!("eigenvalue below k={k} at size {size}"))?;
            if let Some(prev) = &previous {
                for (j, (coarse, fine)) in prev.iter().zip(&values).enumerate() {
                    ensure(*coarse >= fine - 1e-9 * fine.abs(), || format!("k={k} j={j} size {size}"))?;
                }
            }
            previous = Some(values);
        }
    }
    Ok("sizes 5..=30 step 5".into())
}

fn chel_constants() -> Outcome {
    let coarse = chel_k(&ChelInstance::dirichlet(), 10_000).map_err(core)?;
    let fine = chel_k(&ChelInstance::dirichlet(), 20_000).map_err(core)?;
    ensure((coarse.k_max - fine.k_max).abs() < 1e-6, || "Dirichlet K unstable under grid doubling".into())?;
    let w = chel_k(&ChelInstance::w1v1(), 10_000).map_err(core)?;
    ensure((w.k_max_squared() - (-1f64).exp()).abs() < 1e-9, || format!("W1V1 max {}", w.k_max_squared()))?;
    Ok(format!("Dirichlet K^2 = {:.10}, W1V1 max = {:.10}", fine.k_max_squared(), w.k_max_squared()))
}

fn knorm() -> Outcome {
    let mut worst = 0.0f64;
    for n in 0..=10 {
        for (a, b) in [(0.0, 0.0), (1.0, 1.0), (0.5, -0.25), (-0.5, 2.0)] {
            let err = knorm_crosscheck(n, a, b).map_err(core)?;
            worst = worst.max(err);
            ensure(err < 1e-8, || format!("n={n} ({a},{b}): {err:e}"))?;
        }
    }
    Ok(format!("n <= 10, max deviation {worst:.2e}"))
}

type Entry = (Suite, &'static str, fn() -> Outcome);

const CHECKS: [Entry; 18] = [
    (Suite::Stirling, "triangular", triangular),
    (Suite::Stirling, "defining-identity", defining_identity),
    (Suite::Stirling, "composite-coefficients", composite_coefficients_check),
    (Suite::Orthogonality, "sobolev-gram", sobolev_gram),
    (Suite::Orthogonality, "left-definite", left_definite),
    (Suite::Orthogonality, "derivative-orthogonality", derivative_orthogonality),
    (Suite::Orthogonality, "normalization-bridge", normalization_bridge),
    (Suite::Eigen, "eigen-equation", eigen_equation),
    (Suite::Eigen, "operator-matrices", operator_matrices),
    (Suite::Eigen, "lower-bound", lower_bound),
    (Suite::Eigen, "ell-power", ell_power),
    (Suite::Identities, "derivative-identity", derivative_identity),
    (Suite::Identities, "green-dirichlet", green_dirichlet),
    (Suite::Identities, "decomposition", decomposition),
    (Suite::Galerkin, "galerkin-recovery", galerkin_recovery),
    (Suite::Galerkin, "galerkin-monotone", galerkin_monotone),
    (Suite::Galerkin, "chel-constants", chel_constants),
    (Suite::Galerkin, "knorm", knorm),
];

pub fn run(suite: Suite) -> Vec<Check> {
    CHECKS
        .iter()
        .filter(|(s, _, _)| suite == Suite::All || *s == suite)
        .map(|&(s, name, check)| {
            let (passed, detail) = match check() {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            Check { suite: s.name(), name, passed, detail }
        })
        .collect()
}
