//! Adaptive Gauss–Legendre quadrature.

use alloc::{format, vec::Vec};
use core::f64::consts::PI;
#[allow(unused_imports)] // shadowed by inherent methods when std is linked
use num_traits::Float;

use crate::{Error, Result};

const PANEL_ORDER: usize = 16;
const MAX_DEPTH: u32 = 40;

/// Nodes and weights of an n-point Gauss–Legendre rule on [−1, 1].
#[derive(Clone, Debug)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss-Legendre rule needs at least one node");
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        let nf = n as f64;
        for i in 0..n {
            let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            if d != 0.0 {
                dp = d;
            }
            nodes.push(x);
            weights.push(2.0 / ((1.0 - x * x) * dp * dp));
        }
        Self { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Fixed-order estimate of `∫_a^b f`.
    pub fn apply(&self, f: &mut impl FnMut(f64) -> f64, a: f64, b: f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(mid + half * x))
            .sum::<f64>()
            * half
    }
}

/// `P_n(x)` and `P_n'(x)` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Adaptive integrator: each panel is compared against its two halves and
/// split until the difference meets its share of the absolute tolerance.
#[derive(Clone, Debug)]
pub struct Integrator {
    rule: GaussLegendre,
    pub abs_tol: f64,
}

impl Default for Integrator {
    fn default() -> Self {
        Self::new(1e-10)
    }
}

impl Integrator {
    pub fn new(abs_tol: f64) -> Self {
        Self::with_order(abs_tol, PANEL_ORDER)
    }

    pub fn with_order(abs_tol: f64, order: usize) -> Self {
        Self {
            rule: GaussLegendre::new(order),
            abs_tol,
        }
    }

    /// `∫_a^b f` starting from `panels` equal panels.
    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64, a: f64, b: f64, panels: usize) -> Result<f64> {
        let panels = panels.max(1);
        let width = (b - a) / panels as f64;
        let tol = self.abs_tol / panels as f64;
        let mut total = 0.0;
        for i in 0..panels {
            let lo = a + width * i as f64;
            let hi = if i + 1 == panels { b } else { lo + width };
            let whole = self.rule.apply(&mut f, lo, hi);
            total += self.refine(&mut f, lo, hi, whole, tol, 0)?;
        }
        if !total.is_finite() {
            return Err(Error::NonConvergence(format!("quadrature on [{a}, {b}] is not finite")));
        }
        Ok(total)
    }

    fn refine(&self, f: &mut impl FnMut(f64) -> f64, a: f64, b: f64, whole: f64, tol: f64, depth: u32) -> Result<f64> {
        let mid = 0.5 * (a + b);
        let left = self.rule.apply(f, a, mid);
        let right = self.rule.apply(f, mid, b);
        let halves = left + right;
        if (halves - whole).abs() <= tol {
            return Ok(halves);
        }
        if depth >= MAX_DEPTH {
            return Err(Error::NonConvergence(format!(
                "quadrature failed to reach {tol:e} on [{a}, {b}]"
            )));
        }
        Ok(
            self.refine(f, a, mid, left, 0.5 * tol, depth + 1)?
                + self.refine(f, mid, b, right, 0.5 * tol, depth + 1)?,
        )
    }
}

/// Number of initial panels resolving oscillations of wavenumber `k` on an
/// interval of length `len`: about four panels per half-wavelength.
pub fn panels_for(k: f64, len: f64) -> usize {
    ((4.0 * k * len / PI).ceil() as usize).max(4)
}
