use alloc::{format, vec::Vec};

use super::{assemble_rhs, extract_bogoliubov, AmplitudeState, BogoliubovPair, BogoliubovRow, ModeSystem};
use crate::cavity::{CouplingSet, Trajectory};
use crate::ode::{Dopri5, Options, Stats};
use crate::{Complex64, Error, Result};

/// Abort once any `|Q_p|` exceeds this multiple of the initial amplitude.
pub const DIVERGENCE_FACTOR: f64 = 1e6;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvolveOptions {
    /// Local error tolerance per step (absolute and relative).
    pub tol: f64,
    pub divergence_factor: f64,
    /// Keep `∂_t φ` continuous where the wall velocity jumps (start and end
    /// of a pure sine) by adding the impulse of the `λ̇` term. Dirichlet only.
    /// Off by default: the initial conditions then apply unchanged at `t = 0⁺`.
    pub match_corners: bool,
}

impl Default for EvolveOptions {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            divergence_factor: DIVERGENCE_FACTOR,
            match_corners: false,
        }
    }
}

impl EvolveOptions {
    pub fn with_tol(tol: f64) -> Self {
        Self { tol, ..Self::default() }
    }
}

/// Accepted integrator step handed to observers.
pub struct Sample<'a> {
    pub t: f64,
    y: &'a [f64],
}

impl Sample<'_> {
    pub fn size(&self) -> usize {
        self.y.len() / 4
    }

    pub fn q(&self, p: usize) -> Complex64 {
        Complex64::new(self.y[2 * p], self.y[2 * p + 1])
    }

    pub fn qdot(&self, p: usize) -> Complex64 {
        let o = self.y.len() / 2;
        Complex64::new(self.y[o + 2 * p], self.y[o + 2 * p + 1])
    }
}

/// Final state plus integrator statistics.
#[derive(Clone, Debug)]
pub struct Evolution {
    pub state: AmplitudeState,
    pub stats: Stats,
}

/// Integrate from `state.t` to `t_end`, stopping at every trajectory
/// breakpoint in between. `observer` sees each accepted step.
pub fn evolve(
    state: &AmplitudeState,
    sys: &ModeSystem<'_>,
    t_end: f64,
    opts: &EvolveOptions,
    mut observer: impl FnMut(&Sample<'_>),
) -> Result<Evolution> {
    if !(opts.tol > 0.0) {
        return Err(Error::Config(format!(
            "integrator tolerance {} must be positive",
            opts.tol
        )));
    }
    let cs = sys.couplings();
    if state.size() != cs.size() || state.bc != cs.bc || state.ell != cs.ell {
        return Err(Error::Config(
            "amplitude state does not match the coupling block".into(),
        ));
    }
    if opts.match_corners && cs.bc != crate::BoundaryCondition::Dirichlet {
        return Err(Error::Config(
            "corner matching is only available for Dirichlet modes".into(),
        ));
    }
    let t0 = state.t;
    let scale = state
        .q
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);
    let limit = opts.divergence_factor * scale;

    let mut stops: Vec<f64> = sys
        .trajectory()
        .breakpoints()
        .into_iter()
        .filter(|&b| b > t0 && b < t_end)
        .collect();
    stops.push(t_end);

    let mut current = state.clone();
    if opts.match_corners {
        match_corner(&mut current, sys, t0);
    }
    let mut y = current.pack();
    let mut solver = Dopri5::new(y.len(), Options::with_tol(opts.tol));
    let mut stats = Stats::default();
    let mut from = t0;
    for to in stops {
        stats += solver.integrate(sys, from, to, &mut y, |t, y| {
            let p = y.len() / 4;
            let mut worst = 0.0_f64;
            for i in 0..p {
                worst = worst.max(Complex64::new(y[2 * i], y[2 * i + 1]).norm());
            }
            if !(worst <= limit) {
                return Err(Error::Divergence { t, magnitude: worst });
            }
            observer(&Sample { t, y });
            Ok(())
        })?;
        from = to;
        if opts.match_corners {
            current.unpack(to, &y);
            match_corner(&mut current, sys, to);
            y = current.pack();
        }
    }
    current.unpack(t_end, &y);
    Ok(Evolution { state: current, stats })
}

/// Apply `Q̇ → Q̇ − Δλ gᵀQ` for a jump `Δλ` of the wall rate at `t`.
fn match_corner(state: &mut AmplitudeState, sys: &ModeSystem<'_>, t: f64) {
    let d_lambda = sys.trajectory().velocity_jump(t);
    if d_lambda == 0.0 {
        return;
    }
    let mut gq = alloc::vec![Complex64::new(0.0, 0.0); state.size()];
    sys.couplings().g.contract_first(&state.q, &mut gq);
    for (qd, b) in state.qdot.iter_mut().zip(&gq) {
        *qd -= d_lambda * b;
    }
}

/// Evolve initial mode `k0` through the whole motion and extract its
/// Bogoliubov row at `t_f`.
pub fn evolve_row(
    couplings: &CouplingSet,
    traj: &Trajectory,
    k0: usize,
    opts: &EvolveOptions,
) -> Result<(BogoliubovRow, Stats)> {
    let sys = assemble_rhs(couplings, traj)?;
    let omegas = couplings.omegas(traj.a0());
    let s0 = AmplitudeState::initial(couplings.bc, couplings.ell, k0, &omegas)?;
    let ev = evolve(&s0, &sys, traj.t_f(), opts, |_| {})?;
    Ok((extract_bogoliubov(&ev.state, traj, &omegas)?, ev.stats))
}

/// Evolve every initial mode `k0 = 1..=P` and collect the full Bogoliubov
/// matrices at `t_f`.
pub fn evolve_all(couplings: &CouplingSet, traj: &Trajectory, opts: &EvolveOptions) -> Result<(BogoliubovPair, Stats)> {
    let mut rows = Vec::with_capacity(couplings.size());
    let mut stats = Stats::default();
    for k0 in 1..=couplings.size() {
        let (row, st) = evolve_row(couplings, traj, k0, opts)?;
        stats += st;
        rows.push(row);
    }
    let omegas = couplings.omegas(traj.a0());
    Ok((
        BogoliubovPair::from_rows(couplings.bc, couplings.ell, omegas, rows)?,
        stats,
    ))
}
