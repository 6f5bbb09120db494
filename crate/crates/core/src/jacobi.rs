//! Jacobi polynomial families.
//!
//! Classical families are built for rational `alpha, beta > -1`. The
//! parameter pair `alpha = beta = -1` is handled separately: its degree-one
//! member vanishes identically in the reference expansion and its low-degree
//! members are not square integrable against `(1 - x^2)^{-1}`, so the family
//! comes in three normalizations (see [`Normalization`]).

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Signed, Zero};

use crate::algebra::rational::{as_i64, binomial, factorial, from_bigint, int, ratio, ExactRational};
use crate::algebra::{Polynomial, ScaledPolynomial};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JacobiParams {
    alpha: ExactRational,
    beta: ExactRational,
}

impl JacobiParams {
    /// Parameters of a classical family; both must exceed `-1`.
    pub fn classical(alpha: ExactRational, beta: ExactRational) -> Result<Self> {
        let minus_one = int(-1);
        if alpha <= minus_one || beta <= minus_one {
            return Err(Error::UnsupportedParameters {
                alpha: alpha.to_string(),
                beta: beta.to_string(),
                reason: "classical families need alpha > -1 and beta > -1",
            });
        }
        Ok(Self { alpha, beta })
    }

    /// The pair `alpha = beta = -1`.
    pub fn nonclassical() -> Self {
        Self {
            alpha: int(-1),
            beta: int(-1),
        }
    }

    /// Classical parameters, or the nonclassical pair for `(-1, -1)`.
    pub fn new(alpha: ExactRational, beta: ExactRational) -> Result<Self> {
        if alpha == int(-1) && beta == int(-1) {
            Ok(Self::nonclassical())
        } else {
            Self::classical(alpha, beta)
        }
    }

    pub fn from_ints(alpha: i64, beta: i64) -> Result<Self> {
        Self::new(int(alpha), int(beta))
    }

    pub fn alpha(&self) -> &ExactRational {
        &self.alpha
    }

    pub fn beta(&self) -> &ExactRational {
        &self.beta
    }

    pub fn is_nonclassical(&self) -> bool {
        self.alpha == int(-1) && self.beta == int(-1)
    }

    pub fn integer_pair(&self) -> Option<(i64, i64)> {
        Some((as_i64(&self.alpha)?, as_i64(&self.beta)?))
    }

    /// `(alpha + j, beta + j)`, the parameters of the `j`-th derivative family.
    pub fn shifted(&self, j: usize) -> Self {
        let j = int(j as i64);
        Self {
            alpha: &self.alpha + &j,
            beta: &self.beta + &j,
        }
    }
}

impl fmt::Display for JacobiParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.alpha, self.beta)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Normalization {
    /// The binomial-sum expansion with no rescaling.
    Reference,
    /// Unit norm in the weighted space `L^2((-1,1); (1-x)^alpha (1+x)^beta)`.
    L2Orthonormal,
    /// Unit norm for the Sobolev inner product; `alpha = beta = -1` only.
    PhiOrthonormal,
}

impl Normalization {
    pub fn name(self) -> &'static str {
        match self {
            Normalization::Reference => "reference",
            Normalization::L2Orthonormal => "l2",
            Normalization::PhiOrthonormal => "phi",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text.trim().to_ascii_lowercase().as_str() {
            "reference" | "ref" => Ok(Normalization::Reference),
            "l2" | "l2orthonormal" => Ok(Normalization::L2Orthonormal),
            "phi" | "phiorthonormal" | "sobolev" => Ok(Normalization::PhiOrthonormal),
            other => Err(Error::InvalidArgument(format!("unknown normalization {other:?}"))),
        }
    }
}

impl fmt::Display for Normalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Expands `Σ_j a_j ((x-1)/2)^j ((x+1)/2)^{n-j}` into monomials.
fn expand_endpoint_sum(n: usize, weight: impl Fn(usize) -> ExactRational) -> Polynomial {
    let half = ratio(1, 2);
    let down = Polynomial::linear(half.clone(), -half.clone());
    let up = Polynomial::linear(half.clone(), half);
    let mut down_pows = vec![Polynomial::one()];
    let mut up_pows = vec![Polynomial::one()];
    for i in 1..=n {
        down_pows.push(&down_pows[i - 1] * &down);
        up_pows.push(&up_pows[i - 1] * &up);
    }
    (0..=n).fold(Polynomial::zero(), |acc, j| {
        let a = weight(j);
        if a.is_zero() {
            acc
        } else {
            &acc + &(&down_pows[j] * &up_pows[n - j]).scale(&a)
        }
    })
}

/// The reference expansion `Σ_j C(n+α, n-j) C(n+β, j) ((x-1)/2)^j ((x+1)/2)^{n-j}`.
///
/// This is the convention orthogonal against `(1-x)^α (1+x)^β`, with
/// `P_n(1) = C(n+α, n)`. Generalized binomials are falling-factorial
/// products, so any rational parameters are accepted. At `α = β = -1` the
/// degree-one member is zero.
pub fn classical_jacobi(n: usize, params: &JacobiParams) -> Polynomial {
    let top_a = &params.alpha + int(n as i64);
    let top_b = &params.beta + int(n as i64);
    expand_endpoint_sum(n, |j| binomial(&top_a, n - j) * binomial(&top_b, j))
}

/// Members of the `α = β = -1` family.
///
/// `PhiOrthonormal` uses `1`, `x/√3` and `√(4n-2)/(n-1)` times the reference
/// expansion; `L2Orthonormal` exists for `n >= 2` only.
pub fn nonclassical_jacobi(n: usize, norm: Normalization) -> Result<ScaledPolynomial> {
    let params = JacobiParams::nonclassical();
    match norm {
        Normalization::Reference => Ok(ScaledPolynomial::unscaled(classical_jacobi(n, &params))),
        Normalization::PhiOrthonormal => match n {
            0 => Ok(ScaledPolynomial::unscaled(Polynomial::one())),
            1 => ScaledPolynomial::new(ratio(1, 3), Polynomial::x()),
            _ => {
                let m = n as i64 - 1;
                ScaledPolynomial::new(
                    ratio(4 * n as i64 - 2, m * m),
                    classical_jacobi(n, &params),
                )
            }
        },
        Normalization::L2Orthonormal => {
            if n < 2 {
                return Err(Error::UndefinedNormalization {
                    normalization: norm.name(),
                    degree: n,
                    reason: "degree 0 and 1 members are not in L^2((-1,1); (1-x^2)^-1)",
                });
            }
            let poly = classical_jacobi(n, &params);
            let norm_sq = (&poly * &poly).integrate_weighted(-1)?;
            ScaledPolynomial::new(norm_sq.recip(), poly)
        }
    }
}

/// A family member for any supported parameter pair and normalization.
///
/// Exact `L2Orthonormal` needs integer `α, β` (the weight must be a
/// polynomial); other rational parameters only have `Reference` here.
/// Results are memoized process-wide; a hit is indistinguishable from a
/// fresh construction.
pub fn jacobi_polynomial(
    n: usize,
    params: &JacobiParams,
    norm: Normalization,
) -> Result<ScaledPolynomial> {
    type Key = (JacobiParams, usize, Normalization);
    const CAPACITY: usize = 4096;
    static MEMO: OnceLock<Mutex<HashMap<Key, ScaledPolynomial>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    let key = (params.clone(), n, norm);
    if let Some(hit) = memo.lock().unwrap_or_else(|e| e.into_inner()).get(&key) {
        return Ok(hit.clone());
    }
    let value = build_member(n, params, norm)?;
    let mut map = memo.lock().unwrap_or_else(|e| e.into_inner());
    if map.len() >= CAPACITY {
        map.clear();
    }
    map.insert(key, value.clone());
    Ok(value)
}

fn build_member(n: usize, params: &JacobiParams, norm: Normalization) -> Result<ScaledPolynomial> {
    if params.is_nonclassical() {
        return nonclassical_jacobi(n, norm);
    }
    match norm {
        Normalization::Reference => Ok(ScaledPolynomial::unscaled(classical_jacobi(n, params))),
        Normalization::PhiOrthonormal => Err(Error::UndefinedNormalization {
            normalization: norm.name(),
            degree: n,
            reason: "the Sobolev normalization exists only for alpha = beta = -1",
        }),
        Normalization::L2Orthonormal => {
            let (a, b) = params.integer_pair().ok_or_else(|| Error::UnsupportedParameters {
                alpha: params.alpha.to_string(),
                beta: params.beta.to_string(),
                reason: "exact L2 normalization needs integer parameters",
            })?;
            let poly = classical_jacobi(n, params);
            let norm_sq = (&poly * &poly).integrate_jacobi_weight(a, b)?;
            ScaledPolynomial::new(norm_sq.recip(), poly)
        }
    }
}

/// `a(n, j)^2 = n! Γ(α+β+n+1+j) / ((n-j)! Γ(α+β+n+1))`, as an exact product.
pub fn derivative_coefficient_squared(
    n: usize,
    j: usize,
    params: &JacobiParams,
) -> Result<ExactRational> {
    if j > n {
        return Ok(ExactRational::zero());
    }
    let start = &params.alpha + &params.beta + int(n as i64 + 1);
    if start.is_integer() && !start.is_positive() {
        return Err(Error::PoleInGammaRatio {
            argument: start.to_string(),
        });
    }
    let rising = (0..j).fold(ExactRational::one(), |acc, i| acc * (&start + int(i as i64)));
    let falling = from_bigint(factorial(n as u64) / factorial((n - j) as u64));
    Ok(rising * falling)
}

/// Checks `d^j/dx^j P_n^{(α,β)} = a(n,j) P_{n-j}^{(α+j,β+j)}` for the
/// `L2Orthonormal` families.
pub fn check_derivative_identity(n: usize, j: usize, params: &JacobiParams) -> Result<bool> {
    let lhs = jacobi_polynomial(n, params, Normalization::L2Orthonormal)?
        .map_poly(|p| p.nth_derivative(j));
    let a_sq = derivative_coefficient_squared(n, j, params)?;
    if j > n || a_sq.is_zero() {
        return Ok(lhs.is_zero());
    }
    let rhs = jacobi_polynomial(n - j, &params.shifted(j), Normalization::L2Orthonormal)?
        .rescale(&a_sq)?;
    Ok(lhs.same_function(&rhs))
}

/// Returns `c^2` with `P̃_n^{(-1,-1)} = c (1 - x^2) P_{n-2}^{(1,1)}`, `n >= 2`.
pub fn factorization_check(n: usize) -> Result<ExactRational> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "factorization needs n >= 2, got {n}"
        )));
    }
    let inner = classical_jacobi(n - 2, &JacobiParams::from_ints(1, 1)?);
    factorization_check_against(n, &inner)
}

/// As [`factorization_check`], against a caller-supplied inner factor.
pub fn factorization_check_against(n: usize, inner: &Polynomial) -> Result<ExactRational> {
    let lhs = nonclassical_jacobi(n, Normalization::PhiOrthonormal)?;
    let rhs = ScaledPolynomial::unscaled(&Polynomial::one_minus_x_squared_pow(1) * inner);
    match lhs.proportionality_squared(&rhs) {
        Some(c_sq) if !c_sq.is_zero() => Ok(c_sq),
        _ => Err(Error::NotProportional),
    }
}
