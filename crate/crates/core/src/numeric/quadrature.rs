use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 512;
const MAX_NEWTON_STEPS: usize = 100;

/// An `order`-point Gauss-Legendre rule on `[-1, 1]`, nodes ascending.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureRule {
    pub order: usize,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }

    /// Integrates over `[a, b]` by the affine map from `[-1, 1]`.
    pub fn integrate_on(&self, a: f64, b: f64, f: impl Fn(f64) -> f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        half * self.integrate(|t| f(mid + half * t))
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Nodes are the roots of `P_order`, found by Newton's method from the
/// asymptotic guesses `cos(π (i - 1/4) / (order + 1/2))`; weights are
/// `2 / ((1 - x^2) P'(x)^2)`.
pub fn gauss_legendre(order: usize) -> Result<QuadratureRule> {
    if !(1..=MAX_ORDER).contains(&order) {
        return Err(Error::InvalidArgument(format!(
            "quadrature order must be in 1..={MAX_ORDER}, got {order}"
        )));
    }
    if order == 1 {
        return Ok(QuadratureRule {
            order,
            nodes: vec![0.0],
            weights: vec![2.0],
        });
    }
    let mut nodes = vec![0.0; order];
    let mut weights = vec![0.0; order];
    let n = order as f64;
    for i in 0..order.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (n + 0.5)).cos();
        let mut converged = false;
        for _ in 0..MAX_NEWTON_STEPS {
            let (p, dp) = legendre_with_derivative(order, x);
            let step = p / dp;
            x -= step;
            if step.abs() <= 4.0 * f64::EPSILON {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::ConvergenceFailure { order, index: i });
        }
        let (_, dp) = legendre_with_derivative(order, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[order - 1 - i] = x;
        weights[i] = w;
        weights[order - 1 - i] = w;
    }
    if order % 2 == 1 {
        nodes[order / 2] = 0.0;
    }
    Ok(QuadratureRule { order, nodes, weights })
}

// 7-point Gauss / 15-point Kronrod abscissae and weights.
const KRONROD_X: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const KRONROD_W: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_728_0,
];
const GAUSS_W: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// `(kronrod estimate, |kronrod - gauss|)` on `[a, b]`. Open rule: the
/// endpoints are never evaluated.
fn gauss_kronrod(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let centre = f(mid);
    let mut kronrod = KRONROD_W[7] * centre;
    let mut gauss = GAUSS_W[3] * centre;
    for i in 0..7 {
        let dx = half * KRONROD_X[i];
        let pair = f(mid - dx) + f(mid + dx);
        kronrod += KRONROD_W[i] * pair;
        if i % 2 == 1 {
            gauss += GAUSS_W[i / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Globally adaptive Gauss-Kronrod integration on a finite interval.
///
/// Fails with [`Error::NonFiniteIntegral`] when the estimate is not finite or
/// the error target is not met within the segment budget, which is how a
/// non-integrable endpoint singularity shows up.
pub fn adaptive_integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, rel_tol: f64) -> Result<f64> {
    const MAX_SEGMENTS: usize = 4000;
    const ABS_TOL: f64 = 1e-15;
    if a == b {
        return Ok(0.0);
    }
    let fail = || Error::NonFiniteIntegral { from: a, to: b };
    let (value, error) = gauss_kronrod(&f, a, b);
    let mut heap = BinaryHeap::new();
    heap.push(Segment { a, b, value, error });
    let (mut total, mut total_error) = (value, error);
    while total_error > ABS_TOL.max(rel_tol * total.abs()) {
        if heap.len() >= MAX_SEGMENTS || !total.is_finite() {
            return Err(fail());
        }
        let worst = heap.pop().unwrap();
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            return Err(fail());
        }
        let (lv, le) = gauss_kronrod(&f, worst.a, mid);
        let (rv, re) = gauss_kronrod(&f, mid, worst.b);
        total += lv + rv - worst.value;
        total_error += le + re - worst.error;
        heap.push(Segment { a: worst.a, b: mid, value: lv, error: le });
        heap.push(Segment { a: mid, b: worst.b, value: rv, error: re });
    }
    // Re-sum to shed the drift of the running updates.
    let total: f64 = heap.iter().map(|s| s.value).sum();
    if total.is_finite() {
        Ok(total)
    } else {
        Err(fail())
    }
}
