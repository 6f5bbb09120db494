use jsob_core::algebra::rational::{format, parse};
use jsob_core::algebra::{Polynomial, ScaledPolynomial};
use jsob_core::jacobi::{JacobiParams, Normalization};
use jsob_core::Result;
use serde::{Deserialize, Serialize};

/// Serialized family member. Every rational is a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PolynomialRecord {
    pub alpha: String,
    pub beta: String,
    pub n: usize,
    pub normalization: String,
    pub scale_squared: String,
    /// Monomial coefficients, constant term first.
    pub coefficients: Vec<String>,
}

impl PolynomialRecord {
    pub fn new(params: &JacobiParams, n: usize, norm: Normalization, value: &ScaledPolynomial) -> Self {
        Self {
            alpha: format(params.alpha()),
            beta: format(params.beta()),
            n,
            normalization: norm.name().to_string(),
            scale_squared: format(value.scale_squared()),
            coefficients: value.poly().coeffs().iter().map(format).collect(),
        }
    }

    pub fn key(params: &JacobiParams, n: usize, norm: Normalization) -> String {
        format!("({},{},{},{})", format(params.alpha()), format(params.beta()), n, norm.name())
    }

    pub fn cache_key(&self) -> String {
        format!("({},{},{},{})", self.alpha, self.beta, self.n, self.normalization)
    }

    pub fn to_scaled(&self) -> Result<ScaledPolynomial> {
        let coeffs = self.coefficients.iter().map(|c| parse(c)).collect::<Result<Vec<_>>>()?;
        ScaledPolynomial::new(parse(&self.scale_squared)?, Polynomial::new(coeffs))
    }

    /// The CSV row: the fields in declaration order, coefficients joined by
    /// single spaces.
    pub fn csv_row(&self) -> Vec<String> {
        vec![
            self.alpha.clone(),
            self.beta.clone(),
            self.n.to_string(),
            self.normalization.clone(),
            self.scale_squared.clone(),
            self.coefficients.join(" "),
        ]
    }

    pub const CSV_HEADER: [&'static str; 6] = ["alpha", "beta", "n", "normalization", "scaleSquared", "coefficients"];

    #[cfg(test)]
    pub fn from_csv_row(row: &[String]) -> Option<Self> {
        let [alpha, beta, n, normalization, scale_squared, coefficients] = row else { return None };
        Some(Self {
            alpha: alpha.clone(),
            beta: beta.clone(),
            n: n.parse().ok()?,
            normalization: normalization.clone(),
            scale_squared: scale_squared.clone(),
            coefficients: coefficients.split_whitespace().map(str::to_string).collect(),
        })
    }
}
