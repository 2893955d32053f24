//! Dormand–Prince 5(4) integrator over real state vectors.

use alloc::{vec, vec::Vec};
#[allow(unused_imports)] // shadowed by inherent methods when std is linked
use num_traits::Float;

use crate::{Error, Result};

/// First-order system `y′ = F(t, y)`.
pub trait System {
    fn dim(&self) -> usize;
    fn rhs(&self, t: f64, y: &[f64], dy: &mut [f64]);
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Options {
    pub rtol: f64,
    pub atol: f64,
    /// First trial step; 0 picks one from the interval length.
    pub h_init: f64,
    pub max_steps: usize,
}

impl Default for Options {
    fn default() -> Self {
        Self::with_tol(1e-10)
    }
}

impl Options {
    pub fn with_tol(tol: f64) -> Self {
        Self {
            rtol: tol,
            atol: tol,
            h_init: 0.0,
            max_steps: 50_000_000,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    pub accepted: usize,
    pub rejected: usize,
    pub evaluations: usize,
}

impl core::ops::AddAssign for Stats {
    fn add_assign(&mut self, o: Self) {
        self.accepted += o.accepted;
        self.rejected += o.rejected;
        self.evaluations += o.evaluations;
    }
}

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

/// Reusable stage storage for one system dimension.
pub struct Dopri5 {
    opts: Options,
    k: [Vec<f64>; 7],
    tmp: Vec<f64>,
    y_new: Vec<f64>,
    h_last: f64,
}

impl Dopri5 {
    pub fn new(dim: usize, opts: Options) -> Self {
        Self {
            opts,
            k: core::array::from_fn(|_| vec![0.0; dim]),
            tmp: vec![0.0; dim],
            y_new: vec![0.0; dim],
            h_last: 0.0,
        }
    }

    /// Advance `y` from `t0` to `t1`, calling `observer(t, y)` after every
    /// accepted step. An observer error aborts the integration.
    pub fn integrate<S: System + ?Sized>(
        &mut self,
        sys: &S,
        t0: f64,
        t1: f64,
        y: &mut [f64],
        mut observer: impl FnMut(f64, &[f64]) -> Result<()>,
    ) -> Result<Stats> {
        let mut stats = Stats::default();
        if t1 == t0 {
            return Ok(stats);
        }
        let dir = (t1 - t0).signum();
        let span = (t1 - t0).abs();
        let mut h = if self.h_last > 0.0 {
            self.h_last
        } else if self.opts.h_init > 0.0 {
            self.opts.h_init
        } else {
            (span * 1e-3).min(1e-2)
        };
        let mut t = t0;
        sys.rhs(t, y, &mut self.k[0]);
        stats.evaluations += 1;
        let mut last_step = false;
        while !last_step {
            if stats.accepted + stats.rejected >= self.opts.max_steps {
                return Err(Error::Stiffness { t, step: h });
            }
            let remaining = (t1 - t).abs();
            if h >= remaining {
                h = remaining;
                last_step = true;
            }
            let h_min = 16.0 * f64::EPSILON * t.abs().max(span);
            if h < h_min {
                return Err(Error::Stiffness { t, step: h });
            }
            let err = self.step(sys, t, dir * h, y);
            stats.evaluations += 6;
            if err <= 1.0 {
                t = if last_step { t1 } else { t + dir * h };
                y.copy_from_slice(&self.y_new);
                self.k.swap(0, 6);
                stats.accepted += 1;
                observer(t, y)?;
                let fac = if err == 0.0 {
                    5.0
                } else {
                    (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
                };
                if !last_step {
                    self.h_last = h * fac;
                }
                h *= fac;
            } else {
                stats.rejected += 1;
                last_step = false;
                h *= (0.9 * err.powf(-0.2)).clamp(0.1, 1.0);
            }
        }
        Ok(stats)
    }

    /// One trial step; returns the scaled error norm. The FSAL stage is
    /// left in `k[6]`.
    fn step<S: System + ?Sized>(&mut self, sys: &S, t: f64, h: f64, y: &[f64]) -> f64 {
        let n = y.len();
        let [k1, k2, k3, k4, k5, k6, k7] = &mut self.k;
        let tmp = &mut self.tmp;
        for i in 0..n {
            tmp[i] = y[i] + h * A21 * k1[i];
        }
        sys.rhs(t + C2 * h, tmp, k2);
        for i in 0..n {
            tmp[i] = y[i] + h * (A31 * k1[i] + A32 * k2[i]);
        }
        sys.rhs(t + C3 * h, tmp, k3);
        for i in 0..n {
            tmp[i] = y[i] + h * (A41 * k1[i] + A42 * k2[i] + A43 * k3[i]);
        }
        sys.rhs(t + C4 * h, tmp, k4);
        for i in 0..n {
            tmp[i] = y[i] + h * (A51 * k1[i] + A52 * k2[i] + A53 * k3[i] + A54 * k4[i]);
        }
        sys.rhs(t + C5 * h, tmp, k5);
        for i in 0..n {
            tmp[i] = y[i] + h * (A61 * k1[i] + A62 * k2[i] + A63 * k3[i] + A64 * k4[i] + A65 * k5[i]);
        }
        sys.rhs(t + h, tmp, k6);
        let y_new = &mut self.y_new;
        for i in 0..n {
            y_new[i] = y[i] + h * (B1 * k1[i] + B3 * k3[i] + B4 * k4[i] + B5 * k5[i] + B6 * k6[i]);
        }
        sys.rhs(t + h, y_new, k7);
        let mut norm = 0.0_f64;
        for i in 0..n {
            let e = h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
            let sc = self.opts.atol + self.opts.rtol * y[i].abs().max(y_new[i].abs());
            norm = norm.max((e / sc).abs());
        }
        if norm.is_nan() {
            f64::INFINITY
        } else {
            norm
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Oscillator(f64);

    impl System for Oscillator {
        fn dim(&self) -> usize {
            2
        }
        fn rhs(&self, _t: f64, y: &[f64], dy: &mut [f64]) {
            dy[0] = y[1];
            dy[1] = -self.0 * self.0 * y[0];
        }
    }

    #[test]
    fn harmonic_oscillator_long_run() {
        let w = 3.7;
        let mut y = [1.0, 0.0];
        let mut solver = Dopri5::new(2, Options::with_tol(1e-11));
        let t1 = 100.0;
        solver
            .integrate(&Oscillator(w), 0.0, t1, &mut y, |_, _| Ok(()))
            .unwrap();
        assert!((y[0] - (w * t1).cos()).abs() < 1e-7, "{}", y[0]);
    }

    #[test]
    fn lands_exactly_on_endpoint() {
        let mut y = [1.0, 0.0];
        let mut last = 0.0;
        let mut solver = Dopri5::new(2, Options::default());
        solver
            .integrate(&Oscillator(1.0), 0.0, 2.5, &mut y, |t, _| {
                last = t;
                Ok(())
            })
            .unwrap();
        assert_eq!(last, 2.5);
    }

    struct Blowup;

    impl System for Blowup {
        fn dim(&self) -> usize {
            1
        }
        fn rhs(&self, _t: f64, y: &[f64], dy: &mut [f64]) {
            dy[0] = y[0] * y[0];
        }
    }

    #[test]
    fn finite_time_blowup_reports_stiffness() {
        let mut y = [1.0];
        let mut solver = Dopri5::new(1, Options::default());
        let err = solver.integrate(&Blowup, 0.0, 2.0, &mut y, |_, _| Ok(())).unwrap_err();
        match err {
            Error::Stiffness { t, .. } => assert!((t - 1.0).abs() < 1e-3, "{t}"),
            other => panic!("unexpected {other}"),
        }
    }
}
