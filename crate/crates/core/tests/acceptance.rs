//! Acceptance suite: one line per criterion, non-zero exit if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{random_polynomial, random_rational, seeded};
use jsob_core::algebra::rational::{int, pow, ratio};
use jsob_core::algebra::{ScaledPolynomial, Surd};
use jsob_core::jacobi::{check_derivative_identity, nonclassical_jacobi, JacobiParams, Normalization};
use jsob_core::numeric::{chel_k, galerkin_spectrum, ChelInstance};
use jsob_core::operators::{
    apply_ell, decompose_w, derivative_orthogonality_value, gram_matrix, inner_product, operator_matrix,
    spectrum, verify_dirichlet_identity, verify_lagrange_identity, InnerProductSpec, OperatorTag, SpectrumSpec,
};
use jsob_core::stirling::{build_table, composite_coefficients, verify_defining_identity};
use jsob_core::Error;
use num_bigint::BigInt;

type Outcome = Result<String, String>;

/// The table of `{n j}_0`, rows `j = 0..=8`, columns `n = 0..=8`.
const STIRLING_TABLE: [[u64; 9]; 9] = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 2, 4, 8, 16, 32, 64],
    [0, 0, 0, 1, 8, 52, 320, 1936, 11648],
    [0, 0, 0, 0, 1, 20, 292, 3824, 47824],
    [0, 0, 0, 0, 0, 1, 40, 1092, 25664],
    [0, 0, 0, 0, 0, 0, 1, 70, 3192],
    [0, 0, 0, 0, 0, 0, 0, 1, 112],
    [0, 0, 0, 0, 0, 0, 0, 0, 1],
];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn stirling_table() -> Outcome {
    let table = build_table(8).map_err(err)?;
    let mut matched = 0;
    for (j, row) in STIRLING_TABLE.iter().enumerate() {
        for (n, &expected) in row.iter().enumerate() {
            let got = table.get(n, j).ok_or_else(|| format!("missing entry n={n} j={j}"))?;
            ensure(*got == BigInt::from(expected), || format!("n={n} j={j}: got {got}, expected {expected}"))?;
            matched += 1;
        }
    }
    Ok(format!("{matched}/81 entries exact"))
}

fn fifth_power_coefficients() -> Outcome {
    let c = composite_coefficients(5, &int(0)).map_err(err)?;
    let expected: Vec<_> = [0, 0, 8, 52, 20, 1].iter().map(|&v| int(v)).collect();
    ensure(c.c == expected, || format!("got {:?}", c.c.iter().map(|v| v.to_string()).collect::<Vec<_>>()))?;
    Ok("[0, 0, 8, 52, 20, 1]".into())
}

fn defining_identity() -> Outcome {
    let mut count = 0;
    for k in [int(0), int(1), ratio(7, 3)] {
        for n in 1..=6 {
            for m in 2..=12 {
                ensure(verify_defining_identity(n, m, &k).map_err(err)?, || format!("n={n} m={m} k={k}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} cases exact"))
}

fn sobolev_orthonormality() -> Outcome {
    let g = gram_matrix(15, &InnerProductSpec::SobolevPhi, Normalization::PhiOrthonormal).map_err(err)?;
    ensure(g.size() == 16, || format!("size {}", g.size()))?;
    for i in 0..16 {
        for j in 0..16 {
            let expected = if i == j { Surd::one() } else { Surd::zero() };
            ensure(*g.get(i, j) == expected, || format!("entry ({i},{j}) = {}", g.get(i, j)))?;
        }
    }
    Ok("16x16 identity".into())
}

fn eigenvalue_equations() -> Outcome {
    let nc = JacobiParams::nonclassical();
    for k in [int(0), int(1)] {
        for n in 0..=20usize {
            let p = nonclassical_jacobi(n, Normalization::PhiOrthonormal).map_err(err)?;
            let lambda = int((n * n.saturating_sub(1)) as i64) + &k;
            let expected = p.map_poly(|q| q.scale(&lambda));
            ensure(apply_ell(&p, &k, &nc).same_function(&expected), || format!("n={n} k={k}"))?;
        }
        let spec = SpectrumSpec::new(OperatorTag::T, k.clone()).map_err(err)?;
        let m = operator_matrix(10, &spec).map_err(err)?;
        let sigma: Vec<Surd> = spectrum(&spec, 11)
            .map_err(err)?
            .into_iter()
            .map(|p| Surd::rational(p.value))
            .collect();
        ensure(m.is_diagonal(), || format!("T matrix not diagonal at k={k}"))?;
        ensure(m.diagonal() == sigma, || format!("T diagonal differs from spectrum at k={k}"))?;
    }
    Ok("n <= 20, k in {0, 1}; T matrix diagonal".into())
}

fn left_definite_orthogonality() -> Outcome {
    let k = int(1);
    let members: Vec<ScaledPolynomial> = (2..=10)
        .map(|m| nonclassical_jacobi(m, Normalization::L2Orthonormal))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    for n in 1..=3 {
        let spec = InnerProductSpec::left_definite(n, k.clone()).map_err(err)?;
        for (a, pm) in members.iter().enumerate() {
            for (b, pl) in members.iter().enumerate() {
                let m = (a + 2) as i64;
                let expected = if a == b { pow(&int(m * (m - 1) + 1), n as u32) } else { int(0) };
                let got = inner_product(pm, pl, &spec).map_err(err)?;
                ensure(got == Surd::rational(expected.clone()), || {
                    format!("n={n} m={} l={}: got {got}, expected {expected}", a + 2, b + 2)
                })?;
            }
        }
    }
    Ok("2 <= m, l <= 10, n <= 3".into())
}

fn undefined(e: &Error) -> bool {
    matches!(
        e,
        Error::UndefinedNormalization { .. } | Error::UnsupportedParameters { .. } | Error::PoleInGammaRatio { .. }
    )
}

fn derivative_identities() -> Outcome {
    let (mut checked, mut skipped) = (0, 0);
    for a in -1..=2 {
        for b in -1..=2 {
            let params = match JacobiParams::from_ints(a, b) {
                Ok(p) => p,
                Err(e) if undefined(&e) => {
                    skipped += 1;
                    continue;
                }
                Err(e) => return Err(format!("({a},{b}): {e}")),
            };
            for n in 0..=8 {
                for j in 0..=n {
                    match check_derivative_identity(n, j, &params) {
                        Ok(true) => checked += 1,
                        Ok(false) => return Err(format!("derivative identity ({a},{b}) n={n} j={j}")),
                        Err(e) if undefined(&e) => skipped += 1,
                        Err(e) => return Err(format!("({a},{b}) n={n} j={j}: {e}")),
                    }
                    for r in 0..=8 {
                        match derivative_orthogonality_value(n, r, j, &params) {
                            Ok(_) => checked += 1,
                            Err(e) if undefined(&e) => skipped += 1,
                            Err(e) => return Err(format!("orthogonality ({a},{b}) n={n} r={r} j={j}: {e}")),
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{checked} exact checks, {skipped} undefined cases skipped"))
}

fn green_dirichlet() -> Outcome {
    let mut rng = seeded(0x6a73);
    for i in 0..100 {
        let f = random_polynomial(&mut rng, 8);
        let g = random_polynomial(&mut rng, 8);
        let k = random_rational(&mut rng);
        ensure(verify_lagrange_identity(&f, &g, &k), || format!("Lagrange pair {i}: f={f}, g={g}, k={k}"))?;
        ensure(verify_dirichlet_identity(&f, &g, &k), || format!("Dirichlet pair {i}: f={f}, g={g}, k={k}"))?;
    }
    Ok("100 random pairs".into())
}

fn decomposition() -> Outcome {
    let mut rng = seeded(0x7733);
    let low: Vec<ScaledPolynomial> = (0..=1)
        .map(|n| nonclassical_jacobi(n, Normalization::PhiOrthonormal))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    for i in 0..50 {
        let f = random_polynomial(&mut rng, 10);
        let (f1, f2) = decompose_w(&f);
        ensure(&f1 + &f2 == f, || format!("sum mismatch for {f}"))?;
        ensure(f1.eval(&int(1)) == int(0) && f1.eval(&int(-1)) == int(0), || format!("f1 of sample {i} not vanishing"))?;
        let f1 = ScaledPolynomial::unscaled(f1);
        for q in &low {
            let v = inner_product(&f1, q, &InnerProductSpec::SobolevPhi).map_err(err)?;
            ensure(v.is_zero(), || format!("sample {i}: phi(f1, q) = {v}"))?;
        }
    }
    Ok("50 random polynomials".into())
}

fn galerkin() -> Outcome {
    let mut worst = 0.0f64;
    for k in [0.0, 1.0] {
        let values = galerkin_spectrum(30, k).map_err(err)?;
        for (m, v) in (2..=5).zip(&values) {
            let exact = (m * (m - 1)) as f64 + k;
            worst = worst.max((v - exact).abs());
            ensure((v - exact).abs() < 1e-6, || format!("k={k} m={m}: {v} vs {exact}"))?;
        }
        let mut previous: Option<Vec<f64>> = None;
        for size in (5..=30).step_by(5) {
            let values = galerkin_spectrum(size, k).map_err(err)?;
            ensure(values.iter().all(|&v| v >= k), || format!("eigenvalue below k={k} at size {size}"))?;
            if let Some(prev) = &previous {
                for (j, (coarse, fine)) in prev.iter().zip(&values).enumerate() {
                    ensure(*coarse >= fine - 1e-9 * fine.abs(), || {
                        format!("k={k} j={j}: size {} gives {coarse} < {fine}", size - 5)
                    })?;
                }
            }
            previous = Some(values);
        }
    }
    Ok(format!("max abs error {worst:.2e}"))
}

/// Golden-section maximization kept local so the oracle shares no code with
/// the library.
fn oracle_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    while hi - lo > 1e-13 {
        let (c, d) = (hi - r * (hi - lo), lo + r * (hi - lo));
        if f(c) >= f(d) {
            hi = d;
        } else {
            lo = c;
        }
    }
    f(0.5 * (lo + hi))
}

fn chel_constants() -> Outcome {
    let closed = |x: f64| 0.5 * (1.0 - x) * ((1.0 + x) / (1.0 - x)).ln();
    let expected = oracle_max(closed, 0.0, 1.0 - 1e-12);
    let dirichlet = chel_k(&ChelInstance::dirichlet(), 10_000).map_err(err)?;
    let d_err = (dirichlet.k_max_squared() - expected).abs();
    ensure(d_err < 1e-6, || format!("Dirichlet K^2 = {} vs {expected}", dirichlet.k_max_squared()))?;
    let w = chel_k(&ChelInstance::w1v1(), 10_000).map_err(err)?;
    let w_err = (w.k_max_squared() - (-1f64).exp()).abs();
    ensure(w_err < 1e-9, || format!("W1V1 max {} vs 1/e", w.k_max_squared()))?;
    Ok(format!(
        "Dirichlet K^2 = {:.12} (err {d_err:.1e}), W1V1 max = {:.12} (err {w_err:.1e})",
        dirichlet.k_max_squared(),
        w.k_max_squared()
    ))
}

fn normalization_bridge() -> Outcome {
    for n in 2..=12usize {
        let p = nonclassical_jacobi(n, Normalization::PhiOrthonormal).map_err(err)?;
        let norm = (p.poly() * p.poly()).integrate_weighted(-1).map_err(err)? * p.scale_squared();
        let expected = ratio(1, (n * (n - 1)) as i64);
        ensure(norm == expected, || format!("n={n}: {norm} vs {expected}"))?;
    }
    Ok("2 <= n <= 12".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 12] = [
        ("Jacobi-Stirling table", 1, stirling_table),
        ("fifth power coefficients", 1, fifth_power_coefficients),
        ("defining identity", 5, defining_identity),
        ("Sobolev orthonormality", 10, sobolev_orthonormality),
        ("eigenvalue equations", 10, eigenvalue_equations),
        ("left-definite orthogonality", 30, left_definite_orthogonality),
        ("derivative identity and orthogonality", 30, derivative_identities),
        ("Lagrange and Dirichlet integrands", 5, green_dirichlet),
        ("decomposition W = W1 + W2", 5, decomposition),
        ("Galerkin spectrum", 30, galerkin),
        ("CHEL constants", 5, chel_constants),
        ("normalization bridge", 5, normalization_bridge),
    ];
    let mut failures = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let within = elapsed <= Duration::from_secs(*budget);
        let (status, detail) = match (&outcome, within) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("{d}; over the {budget} s budget")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!(
            "criterion {:>2} {status}: {name} ({:.3} s, budget {budget} s) {detail}",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
