use alloc::{format, vec::Vec};

use super::AmplitudeState;
use crate::cavity::Trajectory;
use crate::{BoundaryCondition, Complex64, Error, Result};

/// Out-region coefficients of one initial mode: `Q_n = A_n e^{iω_n t} + B_n e^{−iω_n t}`.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BogoliubovRow {
    pub k0: usize,
    pub a: Vec<Complex64>,
    pub b: Vec<Complex64>,
}

impl BogoliubovRow {
    /// `Σ_n 2ω_n (|B_n|² − |A_n|²)`, equal to one for a unitary evolution.
    pub fn normalization(&self, omegas: &[f64]) -> f64 {
        omegas
            .iter()
            .zip(self.a.iter().zip(&self.b))
            .map(|(w, (a, b))| 2.0 * w * (b.norm_sqr() - a.norm_sqr()))
            .sum()
    }

    /// Reconstruct `(Q_n, Q̇_n)` at a static time `t`.
    pub fn synthesize(&self, omegas: &[f64], t: f64) -> (Vec<Complex64>, Vec<Complex64>) {
        let i = Complex64::i();
        let mut q = Vec::with_capacity(omegas.len());
        let mut qd = Vec::with_capacity(omegas.len());
        for (n, &w) in omegas.iter().enumerate() {
            let (ep, em) = ((i * w * t).exp(), (-i * w * t).exp());
            q.push(self.a[n] * ep + self.b[n] * em);
            qd.push(i * w * (self.a[n] * ep - self.b[n] * em));
        }
        (q, qd)
    }
}

/// Invert the out-region form at the state's time:
/// `A_n = e^{−iω_n t}(Q_n + Q̇_n/(iω_n))/2`, `B_n = e^{iω_n t}(Q_n − Q̇_n/(iω_n))/2`.
pub fn extract_bogoliubov(state: &AmplitudeState, traj: &Trajectory, omegas: &[f64]) -> Result<BogoliubovRow> {
    if !traj.is_static_at(state.t) {
        return Err(Error::Precondition(format!(
            "Bogoliubov extraction at t = {} while the wall moves on (0, {})",
            state.t,
            traj.t_f()
        )));
    }
    extract_static(state, omegas)
}

/// Extraction without the static-wall check; valid whenever the right-hand
/// side has vanished, or as an instantaneous estimate.
pub fn extract_static(state: &AmplitudeState, omegas: &[f64]) -> Result<BogoliubovRow> {
    if omegas.len() != state.size() {
        return Err(Error::Config(format!(
            "{} frequencies for {} amplitudes",
            omegas.len(),
            state.size()
        )));
    }
    let i = Complex64::i();
    let t = state.t;
    let mut a = Vec::with_capacity(omegas.len());
    let mut b = Vec::with_capacity(omegas.len());
    for (n, &w) in omegas.iter().enumerate() {
        let d = state.qdot[n] / (i * w);
        a.push((-i * w * t).exp() * (state.q[n] + d) * 0.5);
        b.push((i * w * t).exp() * (state.q[n] - d) * 0.5);
    }
    Ok(BogoliubovRow { k0: state.k0, a, b })
}

/// Bogoliubov matrices `A^{(k)}_n`, `B^{(k)}_n` for one `(bc, ℓ)` block.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BogoliubovPair {
    pub bc: BoundaryCondition,
    pub ell: u32,
    pub omega: Vec<f64>,
    /// Row `k` holds the coefficients of initial mode `k + 1`.
    pub rows: Vec<BogoliubovRow>,
}

impl BogoliubovPair {
    pub fn from_rows(bc: BoundaryCondition, ell: u32, omega: Vec<f64>, rows: Vec<BogoliubovRow>) -> Result<Self> {
        if rows
            .iter()
            .any(|r| r.a.len() != omega.len() || r.b.len() != omega.len())
        {
            return Err(Error::Config("Bogoliubov rows do not match the mode count".into()));
        }
        Ok(Self { bc, ell, omega, rows })
    }

    pub fn size(&self) -> usize {
        self.omega.len()
    }

    /// Contribution `2ω_n |A^{(k)}_n|²` of each computed row to mode `n` (1-based).
    pub fn per_k(&self, n: usize) -> Vec<(usize, f64)> {
        let w = self.omega[n - 1];
        self.rows
            .iter()
            .map(|r| (r.k0, 2.0 * w * r.a[n - 1].norm_sqr()))
            .collect()
    }

    /// `⟨N_{nℓm}⟩ = 2ω_n Σ_k |A^{(k)}_n|²`, identical for every m.
    pub fn particle_number(&self, n: usize) -> f64 {
        self.per_k(n).into_iter().map(|(_, v)| v).sum()
    }

    /// Sum over the `2ℓ + 1` degenerate m values.
    pub fn particle_number_degenerate(&self, n: usize) -> f64 {
        f64::from(2 * self.ell + 1) * self.particle_number(n)
    }

    /// `⟨N⟩` for every mode, 1-based order.
    pub fn particle_numbers(&self) -> Vec<f64> {
        (1..=self.size()).map(|n| self.particle_number(n)).collect()
    }

    /// Largest deviation of any row's normalization from one.
    pub fn normalization_drift(&self) -> f64 {
        self.rows
            .iter()
            .map(|r| (r.normalization(&self.omega) - 1.0).abs())
            .fold(0.0, f64::max)
    }
}
