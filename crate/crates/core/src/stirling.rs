//! Jacobi-Stirling numbers and the coefficients of the composite powers of
//! the Jacobi expression at `α = β = -1`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::rational::{as_integer, factorial, from_bigint, int, pow, ExactRational};
use crate::error::{Error, Result};

/// `{n j}_0`, from the explicit alternating sum.
///
/// For `j >= 2`:
/// `Σ_{r=2}^{j} (-1)^{r+j} (2r-1) (r-2)! [r(r-1)]^n / (r! (j-r)! (j+r-1)!)`;
/// for `j <= 1` the value is `δ_{n,j}`. The sum does not vanish for
/// `n <= 1 < j` (it gives 1/4 at `(0, 2)`), so those entries are taken from
/// triangularity instead.
pub fn jacobi_stirling(n: usize, j: usize) -> Result<BigInt> {
    if j <= 1 {
        return Ok(if n == j { BigInt::one() } else { BigInt::zero() });
    }
    if n <= 1 {
        return Ok(BigInt::zero());
    }
    let mut total = ExactRational::zero();
    for r in 2..=j {
        let rr = r as u64;
        let base = BigInt::from(rr * (rr - 1));
        let numer = BigInt::from(2 * rr - 1) * factorial(rr - 2) * num_traits::pow(base, n);
        let denom = factorial(rr) * factorial((j - r) as u64) * factorial((j + r - 1) as u64);
        let term = ExactRational::new(numer, denom);
        if (r + j) % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    match as_integer(&total) {
        Some(v) if !v.is_negative() => Ok(v),
        _ => Err(Error::NonIntegerResult {
            n,
            j,
            value: total.to_string(),
        }),
    }
}

/// Legendre-Stirling number `{n j}_1 = {n+1 j+1}_0`.
pub fn legendre_stirling(n: usize, j: usize) -> Result<BigInt> {
    jacobi_stirling(n + 1, j + 1)
}

/// Coefficients `c_j(n, k)`, `j = 0..=n`, of the `n`-th composite power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositeCoefficients {
    pub n: usize,
    pub k: ExactRational,
    pub c: Vec<ExactRational>,
}

impl CompositeCoefficients {
    pub fn get(&self, j: usize) -> ExactRational {
        self.c.get(j).cloned().unwrap_or_else(ExactRational::zero)
    }
}

pub fn composite_coefficients(n: usize, k: &ExactRational) -> Result<CompositeCoefficients> {
    if n == 0 {
        return Err(Error::InvalidArgument("composite power needs n >= 1".into()));
    }
    if k.is_negative() {
        return Err(Error::InvalidArgument(format!("k must be nonnegative, got {k}")));
    }
    let mut c = Vec::with_capacity(n + 1);
    if k.is_zero() {
        c.push(ExactRational::zero());
        for j in 1..=n {
            c.push(from_bigint(jacobi_stirling(n, j)?));
        }
    } else {
        c.push(pow(k, n as u32));
        for j in 1..=n {
            let mut sum = ExactRational::zero();
            for r in 0..=(n - j) {
                let js = jacobi_stirling(n - r, j)?;
                if js.is_zero() {
                    continue;
                }
                sum += from_bigint(binomial_int(n, r) * js) * pow(k, r as u32);
            }
            c.push(sum);
        }
    }
    Ok(CompositeCoefficients { n, k: k.clone(), c })
}

fn binomial_int(n: usize, r: usize) -> BigInt {
    factorial(n as u64) / (factorial(r as u64) * factorial((n - r) as u64))
}

/// Checks `Σ_j c_j(n,k) m!(m+j-2)!/((m-j)!(m-2)!) = (m(m-1)+k)^n`, taking
/// `1/(m-j)! = 0` for `j > m`.
pub fn verify_defining_identity(n: usize, m: usize, k: &ExactRational) -> Result<bool> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("defining identity needs m >= 2, got {m}")));
    }
    let coeffs = composite_coefficients(n, k)?;
    let mut lhs = ExactRational::zero();
    for (j, c) in coeffs.c.iter().enumerate() {
        if j > m || c.is_zero() {
            continue;
        }
        let mm = m as u64;
        let j = j as u64;
        let weight = factorial(mm) * factorial(mm + j - 2) / (factorial(mm - j) * factorial(mm - 2));
        lhs += c * from_bigint(weight);
    }
    let rhs = pow(&(int((m * (m - 1)) as i64) + k), n as u32);
    Ok(lhs == rhs)
}

/// `{n j}_0` for `0 <= n, j <= max_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StirlingTable {
    pub max_n: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl StirlingTable {
    pub fn get(&self, n: usize, j: usize) -> Option<&BigInt> {
        self.entries.get(&(n, j))
    }

    /// Row `j` across columns `n = 0..=max_n`.
    pub fn row(&self, j: usize) -> Vec<BigInt> {
        (0..=self.max_n)
            .map(|n| self.entries.get(&(n, j)).cloned().unwrap_or_default())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn build_table(max_n: usize) -> Result<StirlingTable> {
    let mut entries = BTreeMap::new();
    for n in 0..=max_n {
        for j in 0..=max_n {
            entries.insert((n, j), jacobi_stirling(n, j)?);
        }
    }
    Ok(StirlingTable { max_n, entries })
}
