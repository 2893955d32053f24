use alloc::{format, vec, vec::Vec};
use core::cell::RefCell;
#[allow(unused_imports)] // shadowed by inherent methods when std is linked
use num_traits::Float;

use crate::cavity::{CouplingSet, Trajectory};
use crate::linalg::Matrix;
use crate::ode::System;
use crate::{BoundaryCondition, Complex64, Error, Result};

/// Mode amplitudes of one initially excited mode `k0` (1-based).
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AmplitudeState {
    pub bc: BoundaryCondition,
    pub ell: u32,
    pub k0: usize,
    pub t: f64,
    pub q: Vec<Complex64>,
    pub qdot: Vec<Complex64>,
}

impl AmplitudeState {
    /// `Q_p = δ_{p,k0}/√(2ω)`, `Q̇_p = −i √(ω/2) δ_{p,k0}` at `t = 0`.
    pub fn initial(bc: BoundaryCondition, ell: u32, k0: usize, omegas: &[f64]) -> Result<Self> {
        if k0 == 0 || k0 > omegas.len() {
            return Err(Error::Config(format!(
                "initial mode k0 = {k0} outside 1..={}",
                omegas.len()
            )));
        }
        let w = omegas[k0 - 1];
        let mut q = vec![Complex64::new(0.0, 0.0); omegas.len()];
        let mut qdot = q.clone();
        q[k0 - 1] = Complex64::new(1.0 / (2.0 * w).sqrt(), 0.0);
        qdot[k0 - 1] = Complex64::new(0.0, -(0.5 * w).sqrt());
        Ok(Self {
            bc,
            ell,
            k0,
            t: 0.0,
            q,
            qdot,
        })
    }

    pub fn size(&self) -> usize {
        self.q.len()
    }

    /// Interleaved `[Re Q, Im Q]…, [Re Q̇, Im Q̇]…` layout used by the integrator.
    pub fn pack(&self) -> Vec<f64> {
        let mut y = Vec::with_capacity(4 * self.size());
        for z in self.q.iter().chain(&self.qdot) {
            y.push(z.re);
            y.push(z.im);
        }
        y
    }

    pub fn unpack(&mut self, t: f64, y: &[f64]) {
        let p = self.size();
        self.t = t;
        for i in 0..p {
            self.q[i] = Complex64::new(y[2 * i], y[2 * i + 1]);
            self.qdot[i] = Complex64::new(y[2 * p + 2 * i], y[2 * p + 2 * i + 1]);
        }
    }
}

/// Right-hand side of the coupled mode equations as a first-order system.
///
/// Dirichlet:
/// `Q̈_n = −ω_n(t)² Q_n − 2λ Σ_p Q̇_p g_pn − λ̇ Σ_p Q_p g_pn`
/// with `ω_n(t) = x_n/a(t)`.
///
/// Neumann adds, after replacing `Q̈_p → −ω_p² Q_p` and
/// `∂³_t Q_p → −ω_p² Q̇_p` in the O(ε) sources,
/// `2a²λ̇ Σ ω_p² Q_p s_pn − Σ Q̇_p (a² λ̈ s_pn − λ η_pn) + λ a² Σ ω_p² Q̇_p s_pn`.
pub struct ModeSystem<'a> {
    couplings: &'a CouplingSet,
    traj: &'a Trajectory,
    /// Static `ω_p²` at `a0`.
    omega0_sq: Vec<f64>,
    scratch: RefCell<Scratch>,
}

struct Scratch {
    q: Vec<Complex64>,
    qd: Vec<Complex64>,
    acc: Vec<Complex64>,
    src: Vec<Complex64>,
    buf: Vec<Complex64>,
}

pub fn assemble_rhs<'a>(couplings: &'a CouplingSet, traj: &'a Trajectory) -> Result<ModeSystem<'a>> {
    let p = couplings.size();
    let square = |m: &Matrix| m.rows() == p && m.cols() == p;
    let ok = square(&couplings.g)
        && match couplings.bc {
            BoundaryCondition::Dirichlet => true,
            BoundaryCondition::Neumann => {
                couplings.s.as_ref().is_some_and(square) && couplings.eta.as_ref().is_some_and(square)
            }
        };
    if !ok {
        return Err(Error::Config(format!(
            "coupling matrices do not match truncation P = {p} for {} l={}",
            couplings.bc.polarization(),
            couplings.ell
        )));
    }
    let a0 = traj.a0();
    let omega0_sq = couplings.zeros.iter().map(|x| (x / a0) * (x / a0)).collect();
    let z = vec![Complex64::new(0.0, 0.0); p];
    let scratch = RefCell::new(Scratch {
        q: z.clone(),
        qd: z.clone(),
        acc: z.clone(),
        src: z.clone(),
        buf: z,
    });
    Ok(ModeSystem {
        couplings,
        traj,
        omega0_sq,
        scratch,
    })
}

impl ModeSystem<'_> {
    pub fn couplings(&self) -> &CouplingSet {
        self.couplings
    }

    pub fn trajectory(&self) -> &Trajectory {
        self.traj
    }

    /// `Q̈` for the given amplitudes at time `t`.
    pub fn acceleration(&self, t: f64, q: &[Complex64], qd: &[Complex64], out: &mut [Complex64]) {
        let p = q.len();
        let mut src = vec![Complex64::new(0.0, 0.0); p];
        let mut buf = src.clone();
        self.accelerate(t, q, qd, out, &mut src, &mut buf);
    }

    fn accelerate(
        &self,
        t: f64,
        q: &[Complex64],
        qd: &[Complex64],
        out: &mut [Complex64],
        src: &mut [Complex64],
        buf: &mut [Complex64],
    ) {
        let pt = self.traj.point(t);
        let cs = self.couplings;
        let inv_a2 = 1.0 / (pt.a * pt.a);
        for (n, o) in out.iter_mut().enumerate() {
            *o = -(cs.zeros[n] * cs.zeros[n] * inv_a2) * q[n];
        }
        if pt.lambda == 0.0 && pt.lambdadot == 0.0 && pt.lambdaddot == 0.0 {
            return;
        }
        let p = q.len();
        for i in 0..p {
            src[i] = 2.0 * pt.lambda * qd[i] + pt.lambdadot * q[i];
        }
        cs.g.contract_first(src, buf);
        for (o, b) in out.iter_mut().zip(buf.iter()) {
            *o -= b;
        }
        if let (Some(s), Some(eta)) = (&cs.s, &cs.eta) {
            let a2 = pt.a * pt.a;
            for i in 0..p {
                let w2 = self.omega0_sq[i];
                src[i] = (2.0 * a2 * pt.lambdadot * w2) * q[i] + (a2 * (pt.lambda * w2 - pt.lambdaddot)) * qd[i];
            }
            s.contract_first(src, buf);
            for (o, b) in out.iter_mut().zip(buf.iter()) {
                *o += b;
            }
            for i in 0..p {
                src[i] = pt.lambda * qd[i];
            }
            eta.contract_first(src, buf);
            for (o, b) in out.iter_mut().zip(buf.iter()) {
                *o += b;
            }
        }
    }
}

impl System for ModeSystem<'_> {
    fn dim(&self) -> usize {
        4 * self.couplings.size()
    }

    fn rhs(&self, t: f64, y: &[f64], dy: &mut [f64]) {
        let p = self.couplings.size();
        let mut guard = self.scratch.borrow_mut();
        let Scratch { q, qd, acc, src, buf } = &mut *guard;
        for i in 0..p {
            q[i] = Complex64::new(y[2 * i], y[2 * i + 1]);
            qd[i] = Complex64::new(y[2 * p + 2 * i], y[2 * p + 2 * i + 1]);
        }
        self.accelerate(t, q, qd, acc, src, buf);
        dy[..2 * p].copy_from_slice(&y[2 * p..]);
        for i in 0..p {
            dy[2 * p + 2 * i] = acc[i].re;
            dy[2 * p + 2 * i + 1] = acc[i].im;
        }
    }
}
