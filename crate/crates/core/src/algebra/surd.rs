use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{format, is_perfect_square, isqrt, parse, ExactRational};
use crate::error::{Error, Result};

/// Trial divisors above this bound are not attempted during canonicalization.
const TRIAL_LIMIT: u64 = 1 << 20;

/// A real number `coeff * sqrt(radicand)` with rational parts.
///
/// Canonical form: the radicand is a positive integer with every square
/// factor that trial division finds moved into `coeff`; zero is `0 * sqrt(1)`.
#[derive(Clone, Debug)]
pub struct Surd {
    coeff: ExactRational,
    radicand: ExactRational,
}

impl Surd {
    /// Panics when `radicand` is negative.
    pub fn new(coeff: ExactRational, radicand: ExactRational) -> Self {
        assert!(!radicand.is_negative(), "surd radicand must be nonnegative");
        Self { coeff, radicand }.canonical()
    }

    pub fn rational(value: ExactRational) -> Self {
        Self::new(value, ExactRational::one())
    }

    pub fn zero() -> Self {
        Self::rational(ExactRational::zero())
    }

    pub fn one() -> Self {
        Self::rational(ExactRational::one())
    }

    pub fn coeff(&self) -> &ExactRational {
        &self.coeff
    }

    pub fn radicand(&self) -> &ExactRational {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.radicand.is_one()
    }

    pub fn signum(&self) -> i8 {
        if self.coeff.is_positive() {
            1
        } else if self.coeff.is_negative() {
            -1
        } else {
            0
        }
    }

    /// `coeff^2 * radicand`, carrying the sign of `coeff`.
    pub fn signed_square(&self) -> ExactRational {
        let sq = &self.coeff * &self.coeff * &self.radicand;
        if self.coeff.is_negative() {
            -sq
        } else {
            sq
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.coeff.to_f64().unwrap_or(f64::NAN) * self.radicand.to_f64().unwrap_or(f64::NAN).sqrt()
    }

    pub fn canonical(self) -> Self {
        if self.coeff.is_zero() || self.radicand.is_zero() {
            return Self {
                coeff: ExactRational::zero(),
                radicand: ExactRational::one(),
            };
        }
        // sqrt(p/q) = sqrt(p q) / q
        let q = self.radicand.denom().clone();
        let mut rest: BigInt = self.radicand.numer() * &q;
        let mut coeff = self.coeff / BigRational::from_integer(q);
        let mut square_free = BigInt::one();

        let mut d = BigInt::from(2u32);
        let limit = BigInt::from(TRIAL_LIMIT);
        while &d * &d * &d <= rest && d <= limit {
            let mut exponent = 0u32;
            while (&rest % &d).is_zero() {
                rest /= &d;
                exponent += 1;
            }
            if exponent > 0 {
                coeff *= BigRational::from_integer(num_traits::pow(d.clone(), (exponent / 2) as usize));
                if exponent % 2 == 1 {
                    square_free *= &d;
                }
            }
            d += 1u32;
        }
        if is_perfect_square(&rest) {
            coeff *= BigRational::from_integer(isqrt(&rest));
            rest = BigInt::one();
        }
        Self {
            coeff,
            radicand: BigRational::from_integer(square_free * rest),
        }
    }

    /// Inverse of [`Display`]: accepts `c` or `c*sqrt(r)`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        match text.split_once("*sqrt(") {
            Some((c, rest)) => {
                let r = rest
                    .strip_suffix(')')
                    .ok_or_else(|| Error::InvalidArgument(format!("malformed surd {text:?}")))?;
                let radicand = parse(r)?;
                if radicand.is_negative() {
                    return Err(Error::InvalidArgument(format!("negative radicand in {text:?}")));
                }
                Ok(Self::new(parse(c)?, radicand))
            }
            None => Ok(Self::rational(parse(text)?)),
        }
    }
}

impl PartialEq for Surd {
    /// `a sqrt(r) = b sqrt(s)` exactly when the signs agree and `a^2 r = b^2 s`.
    fn eq(&self, other: &Self) -> bool {
        self.signed_square() == other.signed_square()
    }
}

impl Eq for Surd {}

impl Mul<&Surd> for &Surd {
    type Output = Surd;

    fn mul(self, rhs: &Surd) -> Surd {
        Surd::new(&self.coeff * &rhs.coeff, &self.radicand * &rhs.radicand)
    }
}

impl Mul for Surd {
    type Output = Surd;

    fn mul(self, rhs: Surd) -> Surd {
        &self * &rhs
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand.is_one() {
            write!(f, "{}", format(&self.coeff))
        } else {
            write!(f, "{}*sqrt({})", format(&self.coeff), format(&self.radicand))
        }
    }
}
