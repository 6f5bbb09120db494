use num_traits::{One, Zero};

use super::ell::apply_ell;
use super::inner::{inner_product, InnerProductSpec};
use super::spectrum::{OperatorTag, SpectrumSpec};
use crate::algebra::rational::{int, pow};
use crate::algebra::{ScaledPolynomial, Surd};
use crate::error::Result;
use crate::jacobi::{jacobi_polynomial, JacobiParams, Normalization};

/// Pairwise values of a bilinear form over a finite family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    pub entries: Vec<Vec<Surd>>,
    pub spec: InnerProductSpec,
    pub family: Normalization,
    /// Polynomial degree of each basis member, in row order.
    pub degrees: Vec<usize>,
}

impl GramMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Surd {
        &self.entries[i][j]
    }

    pub fn diagonal(&self) -> Vec<Surd> {
        (0..self.size()).map(|i| self.entries[i][i].clone()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, e)| i == j || e.is_zero()))
    }

    pub fn is_identity(&self) -> bool {
        self.is_diagonal() && self.diagonal().iter().all(|d| *d == Surd::one())
    }
}

fn degree_range(params: &JacobiParams, family: Normalization, max_degree: usize) -> Vec<usize> {
    let start = if params.is_nonclassical() && family == Normalization::L2Orthonormal {
        2
    } else {
        0
    };
    (start..=max_degree).collect()
}

fn basis(params: &JacobiParams, family: Normalization, degrees: &[usize]) -> Result<Vec<ScaledPolynomial>> {
    degrees
        .iter()
        .map(|&n| jacobi_polynomial(n, params, family))
        .collect()
}

fn assemble(
    rows: &[ScaledPolynomial],
    cols: &[ScaledPolynomial],
    spec: &InnerProductSpec,
) -> Result<Vec<Vec<Surd>>> {
    rows.iter()
        .map(|f| cols.iter().map(|g| inner_product(f, g, spec)).collect())
        .collect()
}

/// Gram matrix of the `family` members up to `max_degree` under `spec`.
///
/// The family uses the parameters implied by `spec` (the classical pair for
/// `Classical`, `α = β = -1` otherwise). The nonclassical `L2Orthonormal`
/// family starts at degree 2.
pub fn gram_matrix(max_degree: usize, spec: &InnerProductSpec, family: Normalization) -> Result<GramMatrix> {
    let params = spec.family_params();
    let degrees = degree_range(&params, family, max_degree);
    let members = basis(&params, family, &degrees)?;
    Ok(GramMatrix {
        entries: assemble(&members, &members, spec)?,
        spec: spec.clone(),
        family,
        degrees,
    })
}

/// Matrix of `ℓ` in an orthonormal basis of the operator's Hilbert space.
///
/// * `T`: Sobolev-orthonormal family, degrees `0..=max`, paired with `φ`.
/// * `A`: `L^2_{-1,-1}`-orthonormal family, degrees `2..=max`.
/// * `B_n`: the same family rescaled by `λ_m^{-n/2}` so it is orthonormal
///   for `(·,·)_n`, paired with `(·,·)_n`.
///
/// Each result is diagonal with the eigenvalues `m(m-1)+k` on the diagonal.
pub fn operator_matrix(max_degree: usize, spec: &SpectrumSpec) -> Result<GramMatrix> {
    let nc = JacobiParams::nonclassical();
    let (family, pairing) = match spec.operator {
        OperatorTag::T => (Normalization::PhiOrthonormal, InnerProductSpec::SobolevPhi),
        OperatorTag::A => (Normalization::L2Orthonormal, InnerProductSpec::Classical(nc.clone())),
        OperatorTag::Bn(n) => (
            Normalization::L2Orthonormal,
            InnerProductSpec::left_definite(n, spec.k.clone())?,
        ),
    };
    let degrees = degree_range(&nc, family, max_degree);
    let mut members = basis(&nc, family, &degrees)?;
    if let OperatorTag::Bn(n) = spec.operator {
        members = members
            .iter()
            .zip(&degrees)
            .map(|(p, &m)| {
                let lambda = int((m * (m - 1)) as i64) + &spec.k;
                p.rescale(&(pow(&lambda, n as u32)).recip())
            })
            .collect::<Result<_>>()?;
    }
    let images: Vec<_> = members.iter().map(|p| apply_ell(p, &spec.k, &nc)).collect();
    Ok(GramMatrix {
        entries: assemble(&images, &members, &pairing)?,
        spec: pairing,
        family,
        degrees,
    })
}

/// Identity test that ignores representation: exact surd comparison against
/// `δ_{ij}`.
pub fn is_identity_matrix(entries: &[Vec<Surd>]) -> bool {
    entries.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, e)| {
            if i == j {
                e.coeff().is_one() && e.radicand().is_one()
            } else {
                e.coeff().is_zero()
            }
        })
    })
}
