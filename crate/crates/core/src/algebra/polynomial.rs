use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{binomial, int, ExactRational};
use crate::error::{Error, Result};

/// Dense polynomial over the rationals in the monomial basis.
///
/// `coeffs[i]` is the coefficient of `x^i`. The highest stored coefficient is
/// never zero; the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<ExactRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(ExactRational::one())
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(ExactRational::one(), 1)
    }

    pub fn monomial(c: ExactRational, degree: usize) -> Self {
        let mut coeffs = vec![ExactRational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `a x + b`.
    pub fn linear(a: ExactRational, b: ExactRational) -> Self {
        Self::new(vec![b, a])
    }

    /// The weight polynomial `(1 - x^2)^m`.
    pub fn one_minus_x_squared_pow(m: u32) -> Self {
        let mut coeffs = vec![ExactRational::zero(); 2 * m as usize + 1];
        let top = int(i64::from(m));
        for i in 0..=m as usize {
            let c = binomial(&top, i);
            coeffs[2 * i] = if i % 2 == 0 { c } else { -c };
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<ExactRational> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> ExactRational {
        self.coeffs.get(i).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&ExactRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, order: usize) -> Self {
        (0..order).fold(self.clone(), |p, _| p.derivative())
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + super::rational::to_f64(c))
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn is_odd(&self) -> bool {
        self.coeffs.iter().step_by(2).all(Zero::is_zero)
    }

    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    /// Long division: returns `(q, r)` with `self = q * divisor + r` and
    /// `deg r < deg divisor`.
    ///
    /// Panics when `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![ExactRational::zero(); rem.len() - d];
        for shift in (0..quot.len()).rev() {
            let c = &rem[shift + d] / lead;
            if !c.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    rem[shift + i] -= &c * dc;
                }
            }
            quot[shift] = c;
        }
        rem.truncate(d);
        (Self::new(quot), Self::new(rem))
    }

    /// Returns `q` with `self = (1 - x^2)^m q`.
    pub fn divide_by_weight(&self, m: u32) -> Result<Self> {
        let weight = Self::one_minus_x_squared_pow(1);
        let mut q = self.clone();
        for _ in 0..m {
            let (next, rem) = q.div_rem(&weight);
            if !rem.is_zero() {
                return Err(Error::NotDivisible { order: m });
            }
            q = next;
        }
        if &Self::one_minus_x_squared_pow(m) * &q != *self {
            return Err(Error::NotDivisible { order: m });
        }
        Ok(q)
    }

    /// `∫_{-1}^{1} p(x) dx`.
    pub fn integrate(&self) -> ExactRational {
        self.coeffs
            .iter()
            .enumerate()
            .step_by(2)
            .fold(ExactRational::zero(), |acc, (i, c)| {
                acc + c * ExactRational::new(2.into(), (i as i64 + 1).into())
            })
    }

    /// `∫_{-1}^{1} p(x) (1 - x^2)^m dx` for `m >= -1`.
    ///
    /// For `m >= 0` the weight is expanded binomially and each even moment
    /// contributes `2 / (2i + 1)`. For `m = -1` the polynomial must carry a
    /// factor `(1 - x^2)`.
    pub fn integrate_weighted(&self, m: i32) -> Result<ExactRational> {
        match m {
            -1 => self.divide_by_weight(1)?.integrate_weighted(0),
            m if m >= 0 => {
                let weight = Self::one_minus_x_squared_pow(m as u32);
                let mut total = ExactRational::zero();
                for (i, c) in self.coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (w, wc) in weight.coeffs.iter().enumerate().step_by(2) {
                        let power = i + w;
                        if power % 2 == 0 {
                            total += c * wc * ExactRational::new(2.into(), (power as i64 + 1).into());
                        }
                    }
                }
                Ok(total)
            }
            m => Err(Error::InvalidArgument(format!(
                "weight exponent {m} is below -1"
            ))),
        }
    }

    /// `∫_{-1}^{1} p(x) (1 - x)^alpha (1 + x)^beta dx` for integer `alpha, beta >= -1`.
    ///
    /// A `-1` exponent divides the corresponding linear factor out of `p`
    /// exactly and fails with [`Error::NotDivisible`] when it is absent.
    pub fn integrate_jacobi_weight(&self, alpha: i64, beta: i64) -> Result<ExactRational> {
        if alpha < -1 || beta < -1 {
            return Err(Error::InvalidArgument(format!(
                "weight exponents ({alpha}, {beta}) must be >= -1"
            )));
        }
        if alpha == beta {
            return self.integrate_weighted(alpha as i32);
        }
        let one_minus_x = Self::linear(int(-1), int(1));
        let one_plus_x = Self::linear(int(1), int(1));
        let mut integrand = self.clone();
        for (exp, factor) in [(alpha, &one_minus_x), (beta, &one_plus_x)] {
            if exp < 0 {
                let (q, r) = integrand.div_rem(factor);
                if !r.is_zero() {
                    return Err(Error::NotDivisible { order: 1 });
                }
                integrand = q;
            } else {
                integrand = &integrand * &factor.pow(exp as u32);
            }
        }
        Ok(integrand.integrate())
    }

    /// Sign of the leading coefficient (zero for the zero polynomial).
    pub fn leading_sign(&self) -> i8 {
        match self.leading() {
            Some(c) if c.is_positive() => 1,
            Some(_) => -1,
            None => 0,
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !magnitude.is_one();
            if show_coeff {
                write!(f, "{}", super::rational::format(&magnitude))?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![ExactRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($trait:ident::$method:ident),*) => {$(
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}
