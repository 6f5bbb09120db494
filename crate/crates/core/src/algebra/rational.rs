//! Rational scalar helpers.
//!
//! [`ExactRational`] is `num_rational::BigRational`; the reduced-form
//! invariant (positive denominator, coprime parts) is maintained by every
//! arithmetic operation of that type.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type ExactRational = BigRational;

pub fn int(value: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(value))
}

pub fn ratio(numer: i64, denom: i64) -> ExactRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn from_bigint(value: BigInt) -> ExactRational {
    BigRational::from_integer(value)
}

/// `base^exp` for a nonnegative exponent, with `0^0 = 1`.
pub fn pow(base: &ExactRational, exp: u32) -> ExactRational {
    num_traits::pow(base.clone(), exp as usize)
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Generalized binomial coefficient `C(top, j) = top (top-1) ... (top-j+1) / j!`.
pub fn binomial(top: &ExactRational, j: usize) -> ExactRational {
    let mut acc = ExactRational::one();
    for i in 0..j {
        acc *= top - int(i as i64);
        acc /= int(i as i64 + 1);
    }
    acc
}

/// Returns the integer value when `value` has denominator one.
pub fn as_integer(value: &ExactRational) -> Option<BigInt> {
    value.is_integer().then(|| value.to_integer())
}

pub fn as_i64(value: &ExactRational) -> Option<i64> {
    as_integer(value).and_then(|v| v.to_i64())
}

pub fn to_f64(value: &ExactRational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational image of a finite float.
pub fn from_f64(value: f64) -> Result<ExactRational> {
    BigRational::from_float(value)
        .ok_or_else(|| Error::InvalidArgument(format!("{value} is not a finite number")))
}

/// Serializes as `p/q` (or `p` when the denominator is one).
pub fn format(value: &ExactRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parses `p`, `p/q`, or a finite decimal such as `-0.25`.
pub fn parse(text: &str) -> Result<ExactRational> {
    let text = text.trim();
    let bad = || Error::InvalidArgument(format!("cannot parse rational from {text:?}"));
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::InvalidArgument(format!("zero denominator in {text:?}")));
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.trim_start().starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        let whole: BigInt = if whole_digits.is_empty() {
            BigInt::zero()
        } else {
            whole_digits.parse().map_err(|_| bad())?
        };
        let frac_value: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let magnitude = BigRational::new(whole * &scale + frac_value, scale);
        return Ok(if negative { -magnitude } else { magnitude });
    }
    let p: BigInt = text.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(p))
}

/// Floor of the square root of a nonnegative integer.
pub fn isqrt(value: &BigInt) -> BigInt {
    debug_assert!(!value.is_negative());
    value.sqrt()
}

pub fn is_perfect_square(value: &BigInt) -> bool {
    if value.is_negative() {
        return false;
    }
    let root = isqrt(value);
    &root * &root == *value
}
