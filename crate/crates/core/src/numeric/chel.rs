//! The constant `K = sup K(x)` with
//! `K(x)^2 = ∫_a^x |φ|^2 w · ∫_x^b |ψ|^2 w`, which is finite exactly when the
//! associated integral operators are bounded.

use std::fmt;

use super::quadrature::adaptive_integrate;
use crate::error::{Error, Result};

pub const MIN_GRID: usize = 1000;
const TAIL_TOL: f64 = 1e-13;
const GOLDEN_TOL: f64 = 1e-12;

/// A real function together with a printable name.
#[derive(Clone, Copy)]
pub struct NamedFn {
    pub name: &'static str,
    pub eval: fn(f64) -> f64,
}

impl fmt::Debug for NamedFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name)
    }
}

/// The data `(φ, ψ, w)` on a finite interval `(a, b)`.
#[derive(Clone, Debug)]
pub struct ChelInstance {
    pub name: &'static str,
    pub phi: NamedFn,
    pub psi: NamedFn,
    pub weight: NamedFn,
    pub interval: (f64, f64),
}

fn one(_: f64) -> f64 {
    1.0
}

fn inv_sqrt_one_minus_t2(t: f64) -> f64 {
    1.0 / ((1.0 - t) * (1.0 + t)).sqrt()
}

fn inv_sqrt_one_plus_t(t: f64) -> f64 {
    1.0 / (1.0 + t).sqrt()
}

fn inv_one_minus_t(t: f64) -> f64 {
    1.0 / (1.0 - t)
}

const ONE: NamedFn = NamedFn { name: "1", eval: one };

impl ChelInstance {
    /// `φ = (1-t^2)^{-1/2}`, `ψ = 1`, `w = 1` on `(0, 1)`;
    /// `K(x)^2 = ½ (1-x) ln((1+x)/(1-x))`.
    pub fn dirichlet() -> Self {
        Self {
            name: "dirichlet",
            phi: NamedFn { name: "(1-t^2)^(-1/2)", eval: inv_sqrt_one_minus_t2 },
            psi: ONE,
            weight: ONE,
            interval: (0.0, 1.0),
        }
    }

    /// `φ = 1`, `ψ = (1+t)^{-1/2}`, `w = 1` on `(-1, 0)`;
    /// `K(x)^2 = -(1+x) ln(1+x)`, with maximum `1/e`.
    pub fn w1v1() -> Self {
        Self {
            name: "w1v1",
            phi: ONE,
            psi: NamedFn { name: "(1+t)^(-1/2)", eval: inv_sqrt_one_plus_t },
            weight: ONE,
            interval: (-1.0, 0.0),
        }
    }

    /// As [`ChelInstance::w1v1`] with the unbounded form `ψ = (1-t^2)^{-1/2}`.
    pub fn w1v1_exact() -> Self {
        Self {
            name: "w1v1-exact",
            phi: ONE,
            psi: NamedFn { name: "(1-t^2)^(-1/2)", eval: inv_sqrt_one_minus_t2 },
            weight: ONE,
            interval: (-1.0, 0.0),
        }
    }

    /// `φ = ψ = w = 1` on `(0, 1)`; `K(x)^2 = x (1-x)`.
    pub fn unit() -> Self {
        Self {
            name: "unit",
            phi: ONE,
            psi: ONE,
            weight: ONE,
            interval: (0.0, 1.0),
        }
    }

    /// `ψ^2 = (1-t)^{-2}` on `(0, 1)`: the right tail diverges.
    pub fn divergent() -> Self {
        Self {
            name: "divergent",
            phi: ONE,
            psi: NamedFn { name: "(1-t)^(-1)", eval: inv_one_minus_t },
            weight: ONE,
            interval: (0.0, 1.0),
        }
    }

    pub const PRESETS: [&'static str; 5] = ["dirichlet", "w1v1", "w1v1-exact", "unit", "divergent"];

    pub fn preset(name: &str) -> Result<Self> {
        match name {
            "dirichlet" => Ok(Self::dirichlet()),
            "w1v1" => Ok(Self::w1v1()),
            "w1v1-exact" => Ok(Self::w1v1_exact()),
            "unit" => Ok(Self::unit()),
            "divergent" => Ok(Self::divergent()),
            other => Err(Error::InvalidArgument(format!(
                "unknown CHEL preset {other:?}; expected one of {}",
                Self::PRESETS.join(", ")
            ))),
        }
    }

    fn left_density(&self, t: f64) -> f64 {
        let p = (self.phi.eval)(t);
        p * p * (self.weight.eval)(t)
    }

    fn right_density(&self, t: f64) -> f64 {
        let p = (self.psi.eval)(t);
        p * p * (self.weight.eval)(t)
    }

    /// `K(x)^2` by direct adaptive quadrature of both tails.
    pub fn k_squared(&self, x: f64) -> Result<f64> {
        let (a, b) = self.interval;
        let left = adaptive_integrate(|t| self.left_density(t), a, x, TAIL_TOL)?;
        let right = adaptive_integrate(|t| self.right_density(t), x, b, TAIL_TOL)?;
        Ok(left * right)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChelResult {
    pub k_max: f64,
    pub argmax: f64,
}

impl ChelResult {
    pub fn k_max_squared(&self) -> f64 {
        self.k_max * self.k_max
    }
}

/// Maximizes a unimodal `f` on `[lo, hi]`, returning `(argmax, max)`.
pub fn golden_section_max(f: impl Fn(f64) -> Result<f64>, mut lo: f64, mut hi: f64, tol: f64) -> Result<(f64, f64)> {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = hi - inv_phi * (hi - lo);
    let mut d = lo + inv_phi * (hi - lo);
    let (mut fc, mut fd) = (f(c)?, f(d)?);
    while hi - lo > tol {
        if fc >= fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c)?;
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d)?;
        }
    }
    let x = 0.5 * (lo + hi);
    Ok((x, f(x)?))
}

/// `K` and a point where it is attained.
///
/// `K(x)^2` is tabulated on the `grid_size` interior points of a uniform grid
/// by cumulative sums of per-cell integrals, then the best cell pair is
/// refined by golden-section search on direct tail integrals.
pub fn chel_k(instance: &ChelInstance, grid_size: usize) -> Result<ChelResult> {
    if grid_size < MIN_GRID {
        return Err(Error::InvalidArgument(format!(
            "grid size must be >= {MIN_GRID}, got {grid_size}"
        )));
    }
    let (a, b) = instance.interval;
    let h = (b - a) / (grid_size + 1) as f64;
    let points: Vec<f64> = (0..=grid_size + 1).map(|i| a + h * i as f64).collect();
    // Only the cells each cumulative sum needs: the left tail never reaches
    // the last cell and the right tail never reaches the first.
    let cells = |density: &dyn Fn(f64) -> f64, range: std::ops::Range<usize>| -> Result<Vec<f64>> {
        range
            .map(|c| adaptive_integrate(density, points[c], points[c + 1], TAIL_TOL))
            .collect()
    };
    let left_cells = cells(&|t| instance.left_density(t), 0..grid_size)?;
    let right_cells = cells(&|t| instance.right_density(t), 1..grid_size + 1)?;

    // left[i] = ∫_a^{x_i}, right[i] = ∫_{x_i}^b for grid point x_i.
    let mut left = vec![0.0; grid_size + 2];
    for i in 1..=grid_size {
        left[i] = left[i - 1] + left_cells[i - 1];
    }
    let mut right = vec![0.0; grid_size + 2];
    for i in (1..=grid_size).rev() {
        right[i] = right[i + 1] + right_cells[i - 1];
    }
    let best = (1..=grid_size)
        .max_by(|&i, &j| (left[i] * right[i]).total_cmp(&(left[j] * right[j])))
        .expect("grid is nonempty");
    let (argmax, k2) = golden_section_max(
        |x| instance.k_squared(x),
        points[best - 1],
        points[best + 1],
        GOLDEN_TOL,
    )?;
    let k2 = k2.max(left[best] * right[best]);
    if !k2.is_finite() {
        return Err(Error::NonFiniteIntegral { from: a, to: b });
    }
    Ok(ChelResult { k_max: k2.sqrt(), argmax })
}
