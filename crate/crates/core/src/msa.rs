//! Multiple-scale analysis on the slow time `τ = εt`.
//!
//! At first order each amplitude is `Q_n = A_n(τ) e^{iω_n t} + B_n(τ) e^{−iω_n t}`
//! and removing secular terms leaves a linear system for `(A, B)` whose
//! nonzero entries are picked out by exact frequency matches with the drive.

use alloc::{format, vec, vec::Vec};
#[allow(unused_imports)] // shadowed by inherent methods when std is linked
use num_traits::Float;

use crate::cavity::CouplingSet;
use crate::linalg::Matrix;
use crate::ode::{Dopri5, Options, System};
use crate::specfun::{BesselZeroTable, Spectrum};
use crate::{BoundaryCondition, Complex64, Error, Result};

/// Relative frequency-matching tolerance used when none is given.
pub const DEFAULT_REL_TOL: f64 = 1e-9;

pub fn default_tol(omega_drive: f64) -> f64 {
    DEFAULT_REL_TOL * omega_drive
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ParametricHit {
    pub ell: u32,
    pub n: u32,
}

/// `Ω = ω_n + ω_p` with `n < p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PairHit {
    pub ell: u32,
    pub n: u32,
    pub p: u32,
}

/// `ω_q − ω_n = sign · Ω`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CouplingHit {
    pub ell: u32,
    pub n: u32,
    pub q: u32,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ResonanceReport {
    pub omega_drive: f64,
    pub tol: f64,
    pub parametric: Vec<ParametricHit>,
    pub pairs: Vec<PairHit>,
    pub couplings: Vec<CouplingHit>,
}

impl ResonanceReport {
    pub fn is_empty(&self) -> bool {
        self.parametric.is_empty() && self.pairs.is_empty() && self.couplings.is_empty()
    }

    pub fn couplings_for(&self, ell: u32) -> impl Iterator<Item = &CouplingHit> {
        self.couplings.iter().filter(move |c| c.ell == ell)
    }

    /// True when the block has a single parametric hit and nothing else.
    pub fn is_isolated(&self, ell: u32) -> bool {
        self.parametric.iter().filter(|h| h.ell == ell).count() == 1
            && !self.pairs.iter().any(|h| h.ell == ell)
            && self.couplings_for(ell).next().is_none()
    }
}

/// Scan every stored mode for parametric (`Ω = 2ω_n`, `Ω = ω_n + ω_p`) and
/// intermode (`Ω = |ω_n − ω_q|`) matches within `tol`.
pub fn detect_resonances(spectrum: &Spectrum, omega_drive: f64, tol: f64) -> ResonanceReport {
    let mut report = ResonanceReport {
        omega_drive,
        tol,
        parametric: Vec::new(),
        pairs: Vec::new(),
        couplings: Vec::new(),
    };
    let mut ells: Vec<u32> = spectrum.modes.iter().map(|m| m.ell).collect();
    ells.dedup();
    for ell in ells {
        let block: Vec<_> = spectrum.block(ell).collect();
        for a in &block {
            if (omega_drive - 2.0 * a.omega).abs() <= tol {
                report.parametric.push(ParametricHit { ell, n: a.n });
            }
            for b in &block {
                if b.n > a.n && (omega_drive - a.omega - b.omega).abs() <= tol {
                    report.pairs.push(PairHit { ell, n: a.n, p: b.n });
                }
                if b.n != a.n {
                    let d = b.omega - a.omega;
                    for sign in [1i8, -1] {
                        if (d - f64::from(sign) * omega_drive).abs() <= tol {
                            report.couplings.push(CouplingHit {
                                ell,
                                n: a.n,
                                q: b.n,
                                sign,
                            });
                        }
                    }
                }
            }
        }
    }
    report
}

/// Isolated-resonance solution `A = −sinh(ωεt/2)/√(2ω)`, `B = cosh(ωεt/2)/√(2ω)`.
pub fn msa_closed_form(omega: f64, eps: f64, t: f64) -> (Complex64, Complex64) {
    closed_form_with_rate(omega, 0.5 * omega, eps, t)
}

/// Same solution for an arbitrary growth rate `γ`.
pub fn closed_form_with_rate(omega: f64, gamma: f64, eps: f64, t: f64) -> (Complex64, Complex64) {
    let s = 1.0 / (2.0 * omega).sqrt();
    let x = gamma * eps * t;
    (Complex64::new(-s * x.sinh(), 0.0), Complex64::new(s * x.cosh(), 0.0))
}

/// Growth rate for a root `x` of the given family at radius `a0`:
/// TE `ω/2`; TM `(κ/2a0)(1 + ℓ(ℓ+1)/κ²)/(1 − ℓ(ℓ+1)/κ²)`.
pub fn growth_rate_for_root(bc: BoundaryCondition, ell: u32, x: f64, a0: f64) -> Result<f64> {
    match bc {
        BoundaryCondition::Dirichlet => Ok(0.5 * x / a0),
        BoundaryCondition::Neumann => {
            let l = f64::from(ell);
            let r = l * (l + 1.0) / (x * x);
            if r >= 1.0 {
                return Err(Error::Domain(format!(
                    "kappa = {x} for l={ell} violates kappa^2 > l(l+1)"
                )));
            }
            Ok(0.5 * x / a0 * (1.0 + r) / (1.0 - r))
        }
    }
}

/// Growth rate of resonant mode `(ℓ, n)`; `ℓ ≥ 1`.
pub fn growth_rate(table: &mut BesselZeroTable, ell: u32, n: u32, a0: f64) -> Result<f64> {
    if ell == 0 {
        return Err(Error::Domain(
            "growth rate is defined for isolated resonances with l >= 1".into(),
        ));
    }
    let x = table.zero(ell, n)?;
    growth_rate_for_root(table.bc(), ell, x, a0)
}

/// Slow amplitudes of one initial mode at slow time `tau`.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SlowAmplitudes {
    pub k0: usize,
    pub tau: f64,
    pub a: Vec<Complex64>,
    pub b: Vec<Complex64>,
}

impl SlowAmplitudes {
    /// `A = 0`, `B_n = δ_{n,k0}/√(2ω_{k0})`.
    pub fn initial(k0: usize, omegas: &[f64]) -> Result<Self> {
        if k0 == 0 || k0 > omegas.len() {
            return Err(Error::Config(format!(
                "initial mode k0 = {k0} outside 1..={}",
                omegas.len()
            )));
        }
        let zero = Complex64::new(0.0, 0.0);
        let mut b = vec![zero; omegas.len()];
        b[k0 - 1] = Complex64::new(1.0 / (2.0 * omegas[k0 - 1]).sqrt(), 0.0);
        Ok(Self {
            k0,
            tau: 0.0,
            a: vec![zero; omegas.len()],
            b,
        })
    }

    pub fn normalization(&self, omegas: &[f64]) -> f64 {
        omegas
            .iter()
            .zip(self.a.iter().zip(&self.b))
            .map(|(w, (a, b))| 2.0 * w * (b.norm_sqr() - a.norm_sqr()))
            .sum()
    }
}

/// How the slow-time system is advanced.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Propagation {
    /// Adaptive DOPRI5 at the given tolerance.
    Integrate { tol: f64 },
    /// Dense matrix exponential of the constant system matrix.
    Exponential,
}

/// Linear slow-time system `d(A, B)/dτ = M (A, B)` for one `(bc, ℓ)` block.
#[derive(Clone, Debug)]
pub struct ReducedSystem {
    pub bc: BoundaryCondition,
    pub ell: u32,
    pub omegas: Vec<f64>,
    pub omega_drive: f64,
    /// `2P × 2P`, acting on `(A_1..A_P, B_1..B_P)`.
    matrix: Matrix,
}

impl ReducedSystem {
    /// Dirichlet blocks use the full secular conditions; Neumann blocks the
    /// isolated pair `A′ = −γ B`, `B′ = −γ A`, and are rejected when the
    /// drive produces any other match.
    pub fn new(couplings: &CouplingSet, a0: f64, omega_drive: f64, tol: f64) -> Result<Self> {
        let omegas = couplings.omegas(a0);
        let p = omegas.len();
        let mut m = vec![0.0; 4 * p * p];
        let dim = 2 * p;
        let (ia, ib) = (|n: usize| n, |n: usize| p + n);
        let hit = |x: f64| x.abs() <= tol;
        match couplings.bc {
            BoundaryCondition::Dirichlet => {
                let om = omega_drive;
                for n in 0..p {
                    let wn = omegas[n];
                    if hit(om - 2.0 * wn) {
                        m[ia(n) * dim + ib(n)] -= 0.5 * wn;
                        m[ib(n) * dim + ia(n)] -= 0.5 * wn;
                    }
                    for q in 0..p {
                        if q == n {
                            continue;
                        }
                        let wq = omegas[q];
                        // Printed convention: minus the overlap a∫∂_aφ_q φ_n.
                        let gq = -couplings.g[(q, n)] * om / (2.0 * wn);
                        if hit(om - wn - wq) {
                            let c = (0.5 * om - wq) * gq;
                            m[ia(n) * dim + ib(q)] += c;
                            m[ib(n) * dim + ia(q)] += c;
                        }
                        let mut c = 0.0;
                        if hit(om + wq - wn) {
                            c += (wq + 0.5 * om) * gq;
                        }
                        if hit(om + wn - wq) {
                            c += (wq - 0.5 * om) * gq;
                        }
                        m[ia(n) * dim + ia(q)] += c;
                        m[ib(n) * dim + ib(q)] += c;
                    }
                }
            }
            BoundaryCondition::Neumann => {
                let spectrum = Spectrum {
                    bc: couplings.bc,
                    a0,
                    modes: omegas
                        .iter()
                        .enumerate()
                        .map(|(i, &w)| crate::specfun::Mode {
                            ell: couplings.ell,
                            n: i as u32 + 1,
                            omega: w,
                        })
                        .collect(),
                };
                let report = detect_resonances(&spectrum, omega_drive, tol);
                if !report.parametric.is_empty() || !report.pairs.is_empty() || !report.couplings.is_empty() {
                    if !report.is_isolated(couplings.ell) {
                        return Err(Error::Domain(format!(
                            "TM reduced equations need an isolated parametric resonance; drive {omega_drive} gives {} parametric, {} pair and {} coupling matches",
                            report.parametric.len(),
                            report.pairs.len(),
                            report.couplings.len()
                        )));
                    }
                    let n = report.parametric[0].n as usize - 1;
                    let gamma =
                        growth_rate_for_root(BoundaryCondition::Neumann, couplings.ell, couplings.zeros[n], a0)?;
                    m[ia(n) * dim + ib(n)] = -gamma;
                    m[ib(n) * dim + ia(n)] = -gamma;
                }
            }
        }
        let matrix = Matrix::from_fn(dim, dim, |r, c| m[r * dim + c]);
        Ok(Self {
            bc: couplings.bc,
            ell: couplings.ell,
            omegas,
            omega_drive,
            matrix,
        })
    }

    pub fn size(&self) -> usize {
        self.omegas.len()
    }

    /// Entry of the slow-time matrix; indices `0..P` address `A`, `P..2P` address `B`.
    pub fn entry(&self, row: usize, col: usize) -> f64 {
        self.matrix[(row, col)]
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// True when no entry links different modes.
    pub fn is_block_diagonal(&self) -> bool {
        let p = self.size();
        (0..2 * p).all(|r| (0..2 * p).all(|c| r % p == c % p || self.entry(r, c) == 0.0))
    }

    /// Amplitudes of initial mode `k0` at each slow time in `taus`
    /// (ascending, non-negative).
    pub fn evolve_with(&self, k0: usize, taus: &[f64], method: Propagation) -> Result<Vec<SlowAmplitudes>> {
        match method {
            Propagation::Integrate { tol } => self.evolve(k0, taus, tol),
            Propagation::Exponential => self.propagate(k0, taus),
        }
    }

    /// Same as [`evolve`](Self::evolve) through the exact propagator `exp(Mτ)`.
    pub fn propagate(&self, k0: usize, taus: &[f64]) -> Result<Vec<SlowAmplitudes>> {
        let state = SlowAmplitudes::initial(k0, &self.omegas)?;
        let p = self.size();
        let col = p + k0 - 1;
        let b0 = state.b[k0 - 1];
        taus.iter()
            .map(|&tau| {
                if !(tau >= 0.0) {
                    return Err(Error::Config(format!("slow time {tau} must be non-negative")));
                }
                let u = self.matrix.scaled(tau).expm();
                let a = (0..p).map(|n| b0 * u[(n, col)]).collect();
                let b = (0..p).map(|n| b0 * u[(p + n, col)]).collect();
                Ok(SlowAmplitudes { k0, tau, a, b })
            })
            .collect()
    }

    /// Integrate initial mode `k0` with DOPRI5 and record the amplitudes at
    /// each slow time in `taus` (ascending, non-negative).
    pub fn evolve(&self, k0: usize, taus: &[f64], tol: f64) -> Result<Vec<SlowAmplitudes>> {
        let mut state = SlowAmplitudes::initial(k0, &self.omegas)?;
        let p = self.size();
        let mut y = vec![0.0; 8 * p];
        for n in 0..p {
            y[2 * n] = state.a[n].re;
            y[2 * n + 1] = state.a[n].im;
            y[2 * (p + n)] = state.b[n].re;
            y[2 * (p + n) + 1] = state.b[n].im;
        }
        let mut solver = Dopri5::new(y.len(), Options::with_tol(tol));
        let mut out = Vec::with_capacity(taus.len());
        let mut from = 0.0;
        for &tau in taus {
            if tau < from {
                return Err(Error::Config(format!("slow times must ascend; {tau} after {from}")));
            }
            solver.integrate(self, from, tau, &mut y, |_, _| Ok(()))?;
            from = tau;
            for n in 0..p {
                state.a[n] = Complex64::new(y[2 * n], y[2 * n + 1]);
                state.b[n] = Complex64::new(y[2 * (p + n)], y[2 * (p + n) + 1]);
            }
            state.tau = tau;
            out.push(state.clone());
        }
        Ok(out)
    }

    /// `⟨N_n⟩(τ) = 2ω_n Σ_k |A^{(k)}_n(τ)|²` over every initial mode.
    pub fn particle_numbers(&self, taus: &[f64], method: Propagation) -> Result<Vec<Vec<f64>>> {
        let p = self.size();
        let mut acc = vec![vec![0.0; p]; taus.len()];
        if method == Propagation::Exponential {
            // One propagator serves every initial mode: column p + k0 − 1 with B = 1/√(2ω_k0).
            for (row, &tau) in acc.iter_mut().zip(taus) {
                if !(tau >= 0.0) {
                    return Err(Error::Config(format!("slow time {tau} must be non-negative")));
                }
                let u = self.matrix.scaled(tau).expm();
                for k in 0..p {
                    let b2 = 1.0 / (2.0 * self.omegas[k]);
                    for (n, (r, w)) in row.iter_mut().zip(&self.omegas).enumerate() {
                        *r += 2.0 * w * b2 * u[(n, p + k)].powi(2);
                    }
                }
            }
            return Ok(acc);
        }
        for k0 in 1..=p {
            for (row, s) in acc.iter_mut().zip(self.evolve_with(k0, taus, method)?) {
                for ((r, w), a) in row.iter_mut().zip(&self.omegas).zip(&s.a) {
                    *r += 2.0 * w * a.norm_sqr();
                }
            }
        }
        Ok(acc)
    }
}

impl System for ReducedSystem {
    fn dim(&self) -> usize {
        8 * self.size()
    }

    fn rhs(&self, _t: f64, y: &[f64], dy: &mut [f64]) {
        let dim = 2 * self.size();
        for r in 0..dim {
            let (mut re, mut im) = (0.0, 0.0);
            for (c, &m) in self.matrix.row(r).iter().enumerate() {
                if m != 0.0 {
                    re += m * y[2 * c];
                    im += m * y[2 * c + 1];
                }
            }
            dy[2 * r] = re;
            dy[2 * r + 1] = im;
        }
    }
}

/// Least-squares fit of `ln y = p ln x + c`; returns `(p, e^c)`.
pub fn fit_power_law(x: &[f64], y: &[f64]) -> Result<(f64, f64)> {
    let pts: Vec<(f64, f64)> = x
        .iter()
        .zip(y)
        .filter(|(a, b)| **a > 0.0 && **b > 0.0)
        .map(|(a, b)| (a.ln(), b.ln()))
        .collect();
    let (slope, icpt) = linear_fit(&pts)?;
    Ok((slope, icpt.exp()))
}

/// Least-squares growth rate `γ` from `asinh(√N) = γ s + c` where `s = ε t`.
pub fn fit_growth_rate(slow_times: &[f64], numbers: &[f64]) -> Result<f64> {
    let pts: Vec<(f64, f64)> = slow_times
        .iter()
        .zip(numbers)
        .map(|(&s, &n)| (s, n.max(0.0).sqrt().asinh()))
        .collect();
    Ok(linear_fit(&pts)?.0)
}

fn linear_fit(pts: &[(f64, f64)]) -> Result<(f64, f64)> {
    if pts.len() < 2 {
        return Err(Error::Precondition("a fit needs at least two usable points".into()));
    }
    let n = pts.len() as f64;
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |(a, b), p| (a + p.0, b + p.1));
    let (mx, my) = (sx / n, sy / n);
    let (mut sxx, mut sxy) = (0.0, 0.0);
    for &(x, y) in pts {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if sxx == 0.0 {
        return Err(Error::Precondition("fit abscissae are all equal".into()));
    }
    let slope = sxy / sxx;
    Ok((slope, my - slope * mx))
}
