use nalgebra::{DMatrix, SymmetricEigen};
use num_traits::{Signed, Zero};

use crate::algebra::rational::{int, to_f64, from_f64, ExactRational};
use crate::algebra::Polynomial;
use crate::error::{Error, Result};

pub const MIN_SIZE: usize = 2;
pub const MAX_SIZE: usize = 200;

type Matrix = Vec<Vec<ExactRational>>;

/// Weak form of the right-definite operator on the trial functions
/// `b_i = (1 - x^2) x^i`, `i < size`:
///
/// * `stiffness[i][j] = ∫ b_i' b_j' + k ∫ b_i b_j (1-x^2)^{-1}`
/// * `mass[i][j] = ∫ b_i b_j (1-x^2)^{-1}`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GalerkinSystem {
    pub size: usize,
    pub k: ExactRational,
    pub stiffness: Matrix,
    pub mass: Matrix,
}

/// `∫ x^p` over `[-1, 1]`.
fn moments(max: usize) -> Vec<ExactRational> {
    (0..=max)
        .map(|p| Polynomial::monomial(int(1), p).integrate())
        .collect()
}

impl GalerkinSystem {
    pub fn assemble(size: usize, k: &ExactRational) -> Result<Self> {
        if !(MIN_SIZE..=MAX_SIZE).contains(&size) {
            return Err(Error::InvalidArgument(format!(
                "Galerkin size must be in {MIN_SIZE}..={MAX_SIZE}, got {size}"
            )));
        }
        let mu = moments(2 * size + 2);
        // b_i b_j / (1 - x^2) = x^{i+j} - x^{i+j+2}
        let mass_entry = |p: usize| &mu[p] - &mu[p + 2];
        // b_i' = i x^{i-1} - (i+2) x^{i+1}
        let energy_entry = |i: usize, j: usize| {
            let (a, b) = (i as i64, j as i64);
            let p = i + j;
            let low = if p >= 2 { int(a * b) * &mu[p - 2] } else { ExactRational::zero() };
            low - int(a * (b + 2) + b * (a + 2)) * &mu[p] + int((a + 2) * (b + 2)) * &mu[p + 2]
        };
        let mass: Matrix = (0..size)
            .map(|i| (0..size).map(|j| mass_entry(i + j)).collect())
            .collect();
        let stiffness: Matrix = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| energy_entry(i, j) + k * &mass[i][j])
                    .collect()
            })
            .collect();
        Ok(Self { size, k: k.clone(), stiffness, mass })
    }

    pub fn is_symmetric(&self) -> bool {
        let sym = |m: &Matrix| (0..self.size).all(|i| (0..i).all(|j| m[i][j] == m[j][i]));
        sym(&self.stiffness) && sym(&self.mass)
    }

    /// Generalized eigenvalues of `stiffness v = λ mass v`, ascending.
    ///
    /// Entries with `i + j` odd vanish, so even and odd indices decouple.
    /// Each block is reduced exactly with `mass = L D L^T` to the symmetric
    /// matrix `D^{-1/2} L^{-1} K L^{-T} D^{-1/2}`, which is then rounded to
    /// double precision and diagonalized.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        let block = |parity: usize| -> Vec<usize> { (parity..self.size).step_by(2).collect() };
        let pick = |m: &Matrix, idx: &[usize]| -> Matrix {
            idx.iter().map(|&i| idx.iter().map(|&j| m[i][j].clone()).collect()).collect()
        };
        let (even, odd) = (block(0), block(1));
        let (even_vals, odd_vals) = std::thread::scope(|s| {
            let handle = s.spawn(|| reduced_eigenvalues(&pick(&self.stiffness, &odd), &pick(&self.mass, &odd)));
            let even_vals = reduced_eigenvalues(&pick(&self.stiffness, &even), &pick(&self.mass, &even));
            (even_vals, handle.join().expect("eigen thread panicked"))
        });
        let mut values = even_vals?;
        values.extend(odd_vals?);
        values.sort_by(f64::total_cmp);
        Ok(values)
    }
}

/// Unit lower-triangular `L` and pivots `d` with `m = L diag(d) L^T`.
fn ldlt(m: &Matrix) -> Result<(Matrix, Vec<ExactRational>)> {
    let n = m.len();
    let mut l = vec![vec![ExactRational::zero(); n]; n];
    let mut d: Vec<ExactRational> = Vec::with_capacity(n);
    for j in 0..n {
        let mut pivot = m[j][j].clone();
        for p in 0..j {
            pivot -= &l[j][p] * &l[j][p] * &d[p];
        }
        if !pivot.is_positive() {
            return Err(Error::MassNotPositiveDefinite { pivot: j });
        }
        l[j][j] = int(1);
        for i in j + 1..n {
            let mut v = m[i][j].clone();
            for p in 0..j {
                v -= &l[i][p] * &l[j][p] * &d[p];
            }
            l[i][j] = v / &pivot;
        }
        d.push(pivot);
    }
    Ok((l, d))
}

/// `L^{-1} B` for unit lower-triangular `L`.
fn forward_solve(l: &Matrix, b: &Matrix) -> Matrix {
    let n = l.len();
    let mut x = b.clone();
    for i in 0..n {
        for p in 0..i {
            if l[i][p].is_zero() {
                continue;
            }
            let (done, rest) = x.split_at_mut(i);
            for (target, source) in rest[0].iter_mut().zip(&done[p]) {
                *target -= &l[i][p] * source;
            }
        }
    }
    x
}

fn transpose(m: &Matrix) -> Matrix {
    let n = m.len();
    (0..n).map(|i| (0..n).map(|j| m[j][i].clone()).collect()).collect()
}

fn reduced_eigenvalues(stiffness: &Matrix, mass: &Matrix) -> Result<Vec<f64>> {
    let n = mass.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let (l, d) = ldlt(mass)?;
    let c = forward_solve(&l, &transpose(&forward_solve(&l, stiffness)));
    let s = DMatrix::from_fn(n, n, |i, j| {
        let entry = &c[i][j];
        let magnitude = to_f64(&(entry * entry / (&d[i] * &d[j]))).sqrt();
        if entry.is_negative() {
            -magnitude
        } else {
            magnitude
        }
    });
    Ok(SymmetricEigen::new(s).eigenvalues.iter().copied().collect())
}

/// Ascending Galerkin approximations to the right-definite spectrum.
pub fn galerkin_spectrum(size: usize, k: f64) -> Result<Vec<f64>> {
    GalerkinSystem::assemble(size, &from_f64(k)?)?.eigenvalues()
}
