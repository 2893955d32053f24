//! Subcommand implementations. Each returns a [`Report`]; writing files is
//! left to the caller.

use casimir_core::cavity::{CouplingSet, Trajectory};
use casimir_core::dynamics::{
    assemble_rhs, evolve, extract_bogoliubov, AmplitudeState, BogoliubovPair, BogoliubovRow, EvolveOptions,
};
use casimir_core::fock::{
    build_out_vacuum_in, coefficient_c, verify_singlet, FockSpace, InOutRelation, DEFAULT_MAX_RESIDUAL,
};
use casimir_core::msa::{detect_resonances, growth_rate_for_root, Propagation, ReducedSystem, ResonanceReport};
use casimir_core::ode::Stats;
use casimir_core::specfun::{Mode, Spectrum, DEFAULT_K_MAX};
use casimir_core::Complex64;
use rayon::prelude::*;
use serde_json::json;

use crate::cache::ZeroTables;
use crate::config::{Resolved, RunConfig};
use crate::error::{AppError, AppResult};
use crate::output::{csv_with_header, Cell, Report};

pub const COMMANDS: &[&str] = &["spectrum", "couplings", "evolve", "msa", "compare", "singlet", "sweep"];

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub converge: bool,
    pub dump_timeseries: bool,
}

/// Runs `command`; parallel sections use the ambient rayon pool.
pub fn run(command: &str, config: RunConfig, tables: &mut ZeroTables, opts: RunOptions) -> AppResult<Report> {
    let res = Resolved::new(config, tables)?;
    if opts.dump_timeseries && !matches!(command, "evolve" | "compare") {
        return Err(AppError::Validation(format!(
            "--dump-timeseries applies to evolve and compare, not {command}"
        )));
    }
    let mut report = match command {
        "spectrum" => spectrum(&res, tables)?,
        "couplings" => couplings(&res, tables)?,
        "evolve" => evolve_cmd(&res, tables, opts)?,
        "msa" => msa_cmd(&res, tables)?,
        "compare" => compare(&res, tables, opts)?,
        "singlet" => singlet(&res, tables)?,
        "sweep" => sweep(&res, tables)?,
        other => {
            return Err(AppError::Validation(format!(
                "unknown subcommand `{other}` (one of {COMMANDS:?})"
            )))
        }
    };
    if let Ok(tr) = res.trajectory() {
        report.notes.extend(tr.warning().map(|w| format!("warning: {w}")));
    }
    Ok(report)
}

fn spectrum(res: &Resolved, tables: &mut ZeroTables) -> AppResult<Report> {
    let c = &res.config;
    let sp = Spectrum::build(tables.get(res.bc), c.a0, [c.ell], c.p as u32)?;
    let mut r = Report::new("spectrum", &["bc", "ell", "k", "x", "omega"]);
    for m in sp.block(c.ell) {
        r.push(vec![
            res.bc.polarization().into(),
            m.ell.into(),
            m.n.into(),
            (m.omega * c.a0).into(),
            m.omega.into(),
        ]);
    }
    Ok(r)
}

fn couplings(res: &Resolved, tables: &mut ZeroTables) -> AppResult<Report> {
    let c = &res.config;
    let cs = res.couplings(tables, c.p)?;
    let mut r = Report::new("couplings", &["bc", "ell", "P", "matrix", "p", "n", "value"]);
    for (name, m) in cs.matrices() {
        for p in 0..cs.size() {
            for n in 0..cs.size() {
                r.push(vec![
                    res.bc.polarization().into(),
                    c.ell.into(),
                    c.p.into(),
                    name.into(),
                    (p + 1).into(),
                    (n + 1).into(),
                    m[(p, n)].into(),
                ]);
            }
        }
    }
    r.extra.insert("zeros".into(), json!(cs.zeros));
    if let Some(g) = &cs.gauge_id {
        r.notes.push(format!("gauge profile {g}"));
    }
    Ok(r)
}

/// Full Bogoliubov matrices plus an optional time series of row `k0`.
pub struct DynamicsRun {
    pub pair: BogoliubovPair,
    pub stats: Stats,
    pub timeseries: Vec<Vec<Cell>>,
}

fn evolve_one(
    cs: &CouplingSet,
    traj: &Trajectory,
    k0: usize,
    opts: &EvolveOptions,
    stride: Option<usize>,
) -> AppResult<(BogoliubovRow, Stats, Vec<Vec<Cell>>)> {
    let sys = assemble_rhs(cs, traj)?;
    let omegas = cs.omegas(traj.a0());
    let s0 = AmplitudeState::initial(cs.bc, cs.ell, k0, &omegas)?;
    let mut rows = Vec::new();
    let mut seen = 0usize;
    let ev = evolve(&s0, &sys, traj.t_f(), opts, |s| {
        if let Some(stride) = stride {
            if seen.is_multiple_of(stride) {
                for p in 0..s.size() {
                    let (q, qd) = (s.q(p), s.qdot(p));
                    rows.push(vec![
                        s.t.into(),
                        (p + 1).into(),
                        q.re.into(),
                        q.im.into(),
                        qd.re.into(),
                        qd.im.into(),
                    ]);
                }
            }
            seen += 1;
        }
    })?;
    Ok((extract_bogoliubov(&ev.state, traj, &omegas)?, ev.stats, rows))
}

/// Evolves every initial mode in parallel; row order is fixed.
pub fn run_dynamics(res: &Resolved, cs: &CouplingSet, dump: bool) -> AppResult<DynamicsRun> {
    let traj = res.trajectory()?;
    let eo = res.evolve_options();
    let k_dump = res.config.k0;
    let stride = res.config.timeseries_stride;
    let rows: Vec<_> = (1..=cs.size())
        .into_par_iter()
        .map(|k| evolve_one(cs, &traj, k, &eo, (dump && k == k_dump).then_some(stride)))
        .collect::<AppResult<_>>()?;
    let mut stats = Stats::default();
    let mut timeseries = Vec::new();
    let mut out = Vec::with_capacity(rows.len());
    for (row, st, ts) in rows {
        stats += st;
        timeseries.extend(ts);
        out.push(row);
    }
    let pair = BogoliubovPair::from_rows(cs.bc, cs.ell, cs.omegas(res.config.a0), out)?;
    Ok(DynamicsRun {
        pair,
        stats,
        timeseries,
    })
}

fn doubled(res: &Resolved) -> AppResult<usize> {
    let p = 2 * res.config.p;
    if p > DEFAULT_K_MAX as usize {
        return Err(AppError::Validation(format!(
            "--converge needs P = {p}, above the root limit {DEFAULT_K_MAX}"
        )));
    }
    Ok(p)
}

fn dynamics_notes(report: &mut Report, run: &DynamicsRun, label: &str) {
    report.notes.push(format!(
        "{label}max normalization drift {:.3e}",
        run.pair.normalization_drift()
    ));
    report.notes.push(format!(
        "{label}integrator steps accepted {} rejected {} evaluations {}",
        run.stats.accepted, run.stats.rejected, run.stats.evaluations
    ));
}

fn attach_timeseries(report: &mut Report, res: &Resolved, run: &DynamicsRun) {
    let cols = ["t", "p", "re_Q", "im_Q", "re_Qdot", "im_Qdot"];
    let text = csv_with_header(
        &format!("{} timeseries k0={}", report.command, res.config.k0),
        &res.config,
        &cols,
        &run.timeseries,
    );
    report.attachments.push(("timeseries.csv".into(), text));
}

fn rel_change(a: f64, b: f64) -> f64 {
    if a == 0.0 && b == 0.0 {
        0.0
    } else {
        b / a - 1.0
    }
}

fn evolve_cmd(res: &Resolved, tables: &mut ZeroTables, opts: RunOptions) -> AppResult<Report> {
    let cs = res.couplings(tables, res.config.p)?;
    let run = run_dynamics(res, &cs, opts.dump_timeseries)?;
    let mut cols = vec!["n", "omega", "particles", "particles_all_m", "row_normalization_error"];
    let fine = if opts.converge {
        cols.extend(["particles_2P", "rel_change"]);
        let cs2 = res.couplings(tables, doubled(res)?)?;
        Some(run_dynamics(res, &cs2, false)?)
    } else {
        None
    };
    let mut r = Report::new("evolve", &cols);
    let p = &run.pair;
    for n in 1..=p.size() {
        let mut row = vec![
            n.into(),
            p.omega[n - 1].into(),
            p.particle_number(n).into(),
            p.particle_number_degenerate(n).into(),
            (p.rows[n - 1].normalization(&p.omega) - 1.0).into(),
        ];
        if let Some(f) = &fine {
            let v = f.pair.particle_number(n);
            row.extend([v.into(), rel_change(p.particle_number(n), v).into()]);
        }
        r.push(row);
    }
    dynamics_notes(&mut r, &run, "");
    if let Some(f) = &fine {
        dynamics_notes(&mut r, f, "2P: ");
    }
    r.notes
        .push("per-m values are identical by construction (m-degeneracy)".into());
    if opts.dump_timeseries {
        attach_timeseries(&mut r, res, &run);
    }
    Ok(r)
}

/// Reduced-system prediction of `⟨N_n⟩` at the end of the drive.
pub struct MsaPrediction {
    pub report: ResonanceReport,
    pub particles: Vec<f64>,
    pub growth: Vec<f64>,
}

pub fn msa_prediction(res: &Resolved, cs: &CouplingSet) -> AppResult<MsaPrediction> {
    let c = &res.config;
    let omegas = cs.omegas(c.a0);
    let spectrum = Spectrum {
        bc: cs.bc,
        a0: c.a0,
        modes: omegas
            .iter()
            .enumerate()
            .map(|(i, &w)| Mode {
                ell: cs.ell,
                n: i as u32 + 1,
                omega: w,
            })
            .collect(),
    };
    let tol = res.frequency_tol();
    let report = detect_resonances(&spectrum, res.omega_drive, tol);
    let red = ReducedSystem::new(cs, c.a0, res.omega_drive, tol)?;
    let tau = c.epsilon * res.effective_time();
    let particles = if tau == 0.0 {
        vec![0.0; cs.size()]
    } else {
        red.particle_numbers(&[tau], Propagation::Integrate { tol: c.tol })?
            .remove(0)
    };
    let mut growth = vec![f64::NAN; cs.size()];
    for h in &report.parametric {
        let i = h.n as usize - 1;
        growth[i] = growth_rate_for_root(cs.bc, cs.ell, cs.zeros[i], c.a0)?;
    }
    Ok(MsaPrediction {
        report,
        particles,
        growth,
    })
}

fn msa_cmd(res: &Resolved, tables: &mut ZeroTables) -> AppResult<Report> {
    let cs = res.couplings(tables, res.config.p)?;
    let pred = msa_prediction(res, &cs)?;
    let mut r = Report::new("msa", &["n", "omega", "particles_msa", "growth_rate"]);
    let omegas = cs.omegas(res.config.a0);
    for (n, (w, (np, g))) in omegas.iter().zip(pred.particles.iter().zip(&pred.growth)).enumerate() {
        r.push(vec![(n + 1).into(), (*w).into(), (*np).into(), (*g).into()]);
    }
    r.notes.push(format!(
        "omega_drive {:.16e}; slow time {:.16e}",
        res.omega_drive,
        res.config.epsilon * res.effective_time()
    ));
    r.extra
        .insert("resonances".into(), serde_json::to_value(&pred.report).expect("json"));
    Ok(r)
}

fn relative_error(ode: f64, msa: f64) -> f64 {
    if msa == 0.0 {
        if ode == 0.0 {
            0.0
        } else {
            f64::NAN
        }
    } else {
        ode / msa - 1.0
    }
}

fn compare(res: &Resolved, tables: &mut ZeroTables, opts: RunOptions) -> AppResult<Report> {
    let cs = res.couplings(tables, res.config.p)?;
    let run = run_dynamics(res, &cs, opts.dump_timeseries)?;
    let pred = msa_prediction(res, &cs)?;
    let mut cols = vec![
        "n",
        "omega",
        "particles_ode",
        "particles_msa",
        "rel_error",
        "row_normalization_error",
    ];
    let fine = if opts.converge {
        cols.extend(["particles_ode_2P", "rel_change"]);
        let cs2 = res.couplings(tables, doubled(res)?)?;
        Some(run_dynamics(res, &cs2, false)?)
    } else {
        None
    };
    let mut r = Report::new("compare", &cols);
    let p = &run.pair;
    for n in 1..=p.size() {
        let ode = p.particle_number(n);
        let mut row = vec![
            n.into(),
            p.omega[n - 1].into(),
            ode.into(),
            pred.particles[n - 1].into(),
            relative_error(ode, pred.particles[n - 1]).into(),
            (p.rows[n - 1].normalization(&p.omega) - 1.0).into(),
        ];
        if let Some(f) = &fine {
            let v = f.pair.particle_number(n);
            row.extend([v.into(), rel_change(ode, v).into()]);
        }
        r.push(row);
    }
    dynamics_notes(&mut r, &run, "");
    r.extra
        .insert("resonances".into(), serde_json::to_value(&pred.report).expect("json"));
    if opts.dump_timeseries {
        attach_timeseries(&mut r, res, &run);
    }
    Ok(r)
}

fn singlet(res: &Resolved, tables: &mut ZeroTables) -> AppResult<Report> {
    let c = &res.config;
    let cs = res.couplings(tables, c.p)?;
    let pred = msa_prediction(res, &cs)?;
    let hit = pred.report.parametric.first().ok_or_else(|| {
        AppError::Validation(format!(
            "singlet needs a parametric resonance; drive {} matches no 2*omega in the block",
            res.omega_drive
        ))
    })?;
    let gamma = pred.growth[hit.n as usize - 1];
    let t = res.effective_time();
    let cc = coefficient_c(gamma, c.epsilon, t);
    let space = FockSpace::new(c.ell, c.n_max)?;
    let vac = build_out_vacuum_in(
        space,
        InOutRelation::from_c(Complex64::new(cc, 0.0))?,
        DEFAULT_MAX_RESIDUAL,
    )?;
    let rep = verify_singlet(&vac.state);
    let sinh2 = (gamma * c.epsilon * t).sinh().powi(2);
    let mut r = Report::new("singlet", &["quantity", "value"]);
    let mut put = |k: &str, v: f64| r.push(vec![k.into(), v.into()]);
    put("n_resonant", f64::from(hit.n));
    put("gamma", gamma);
    put("gamma_eps_tf", gamma * c.epsilon * t);
    put("C", cc);
    put("normalization", vac.normalization);
    put("in_residual", vac.residual);
    put("norm", rep.norm);
    put("guard", f64::from(rep.guard));
    put("lz_norm", rep.lz_norm);
    put("l2_norm", rep.l2_norm);
    put("lx_mean", rep.l_mean[0]);
    put("ly_mean", rep.l_mean[1]);
    put("lz_mean", rep.l_mean[2]);
    put("n_total", rep.n_total);
    put("n_total_expected", f64::from(2 * c.ell + 1) * sinh2);
    for (m, occ) in vac.state.space.magnetic().zip(&rep.occupancy) {
        put(&format!("occupancy_m{m:+}"), *occ);
    }
    put("occupancy_asymmetry", rep.occupancy_asymmetry);
    put("pairing_rule", if vac.state.obeys_pairing() { 1.0 } else { 0.0 });
    if c.ell == 1 {
        let dump = vac.state.dump(cc, 1e-14)?;
        r.attachments.push((
            "state.json".into(),
            serde_json::to_string_pretty(&dump).expect("json") + "\n",
        ));
        r.extra
            .insert("state".into(), serde_json::to_value(&dump).expect("json"));
    }
    Ok(r)
}

fn sweep(res: &Resolved, tables: &mut ZeroTables) -> AppResult<Report> {
    let s = res
        .config
        .sweep
        .clone()
        .ok_or_else(|| AppError::Validation("sweep needs a [sweep] section".into()))?;
    let points: Vec<f64> = if s.steps == 1 {
        vec![s.start]
    } else {
        (0..s.steps)
            .map(|i| s.start + (s.stop - s.start) * i as f64 / (s.steps - 1) as f64)
            .collect()
    };
    let configs = points
        .iter()
        .map(|&v| res.config.with_field(&s.field, v))
        .collect::<AppResult<Vec<_>>>()?;
    let base = tables.clone();
    let rows: Vec<Vec<Cell>> = configs
        .into_par_iter()
        .zip(points.par_iter())
        .map(|(cfg, &v)| {
            let mut t = base.clone();
            let res = Resolved::new(cfg, &mut t)?;
            let cs = res.couplings(&mut t, res.config.p)?;
            let run = run_dynamics(&res, &cs, false)?;
            let (n, msa) = match msa_prediction(&res, &cs) {
                Ok(p) => {
                    let n = p.report.parametric.first().map_or(res.config.k0, |h| h.n as usize);
                    (n, p.particles[n - 1])
                }
                Err(AppError::Numerical(casimir_core::Error::Domain(_))) => (res.config.k0, f64::NAN),
                Err(e) => return Err(e),
            };
            let ode = run.pair.particle_number(n);
            Ok(vec![
                v.into(),
                res.omega_drive.into(),
                n.into(),
                ode.into(),
                msa.into(),
                relative_error(ode, msa).into(),
                run.pair.normalization_drift().into(),
            ])
        })
        .collect::<AppResult<_>>()?;
    let mut r = Report::new(
        "sweep",
        &[
            s.field.as_str(),
            "omega_drive",
            "n",
            "particles_ode",
            "particles_msa",
            "rel_error",
            "normalization_drift",
        ],
    );
    r.rows = rows;
    Ok(r)
}
