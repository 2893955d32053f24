use alloc::format;
use core::f64::consts::PI;
#[allow(unused_imports)] // shadowed by inherent methods when std is linked
use num_traits::Float;

use crate::{Error, Result};

/// Above this amplitude the small-ε expansion is questionable.
pub const EPSILON_WARN: f64 = 0.1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum DriveShape {
    PureSine,
    /// Amplitude ramped in and out with `10u³ − 15u⁴ + 6u⁵`.
    WindowedSine,
}

/// Radius `a(t) = a0 (1 + ε w(t) sin Ωt)` on `(0, t_f)`, static elsewhere.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Trajectory {
    a0: f64,
    epsilon: f64,
    omega: f64,
    t_f: f64,
    shape: DriveShape,
    window_periods: u32,
}

/// Radius, its first three derivatives and `λ = ȧ/a` with two derivatives.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct TrajectoryPoint {
    pub a: f64,
    pub adot: f64,
    pub addot: f64,
    pub adddot: f64,
    pub lambda: f64,
    pub lambdadot: f64,
    pub lambdaddot: f64,
}

impl Trajectory {
    /// Pure sine with `t_f` snapped to the nearest whole number of periods
    /// (at least one), so that `a(t_f) = a0`.
    pub fn pure_sine(a0: f64, epsilon: f64, omega: f64, t_f: f64) -> Result<Self> {
        validate(a0, epsilon, omega, t_f)?;
        let period = 2.0 * PI / omega;
        let periods = (t_f / period).round().max(1.0);
        Ok(Self {
            a0,
            epsilon,
            omega,
            t_f: periods * period,
            shape: DriveShape::PureSine,
            window_periods: 0,
        })
    }

    /// Sine whose amplitude ramps over `window_periods` drive periods at each
    /// end. Zero periods gives a pure sine (without snapping).
    pub fn windowed_sine(a0: f64, epsilon: f64, omega: f64, t_f: f64, window_periods: u32) -> Result<Self> {
        validate(a0, epsilon, omega, t_f)?;
        let w = f64::from(window_periods) * 2.0 * PI / omega;
        if 2.0 * w > t_f {
            return Err(Error::Config(format!(
                "window of {window_periods} periods on each side does not fit in t_f = {t_f}"
            )));
        }
        let shape = if window_periods == 0 {
            DriveShape::PureSine
        } else {
            DriveShape::WindowedSine
        };
        Ok(Self {
            a0,
            epsilon,
            omega,
            t_f,
            shape,
            window_periods,
        })
    }

    /// Number of whole drive periods `n` as a snapped pure sine.
    pub fn periods(a0: f64, epsilon: f64, omega: f64, n: u32) -> Result<Self> {
        Self::pure_sine(a0, epsilon, omega, f64::from(n) * 2.0 * PI / omega)
    }

    pub fn a0(&self) -> f64 {
        self.a0
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn t_f(&self) -> f64 {
        self.t_f
    }

    pub fn shape(&self) -> DriveShape {
        self.shape
    }

    pub fn window_periods(&self) -> u32 {
        self.window_periods
    }

    pub fn period(&self) -> f64 {
        2.0 * PI / self.omega
    }

    fn window(&self) -> f64 {
        f64::from(self.window_periods) * self.period()
    }

    /// Duration equivalent to a full-amplitude drive: each ramp contributes
    /// half its length.
    pub fn effective_duration(&self) -> f64 {
        self.t_f - self.window()
    }

    /// Message for amplitudes beyond the small-ε regime.
    pub fn warning(&self) -> Option<alloc::string::String> {
        (self.epsilon > EPSILON_WARN).then(|| {
            format!(
                "epsilon = {} exceeds {EPSILON_WARN}; first-order results are unreliable",
                self.epsilon
            )
        })
    }

    pub fn is_static_at(&self, t: f64) -> bool {
        t <= 0.0 || t >= self.t_f || self.epsilon == 0.0
    }

    /// Times where the drive is not smooth; integrators should stop there.
    pub fn breakpoints(&self) -> alloc::vec::Vec<f64> {
        let mut v = alloc::vec![0.0];
        let w = self.window();
        if self.shape == DriveShape::WindowedSine && w > 0.0 {
            v.push(w);
            if self.t_f - w > w {
                v.push(self.t_f - w);
            }
        }
        v.push(self.t_f);
        v
    }

    /// `(a, ȧ, λ, λ̇)` at time `t`.
    pub fn eval(&self, t: f64) -> (f64, f64, f64, f64) {
        let p = self.point(t);
        (p.a, p.adot, p.lambda, p.lambdadot)
    }

    pub fn point(&self, t: f64) -> TrajectoryPoint {
        if self.is_static_at(t) {
            return TrajectoryPoint {
                a: self.a0,
                ..Default::default()
            };
        }
        self.moving_point(t)
    }

    /// Jump of `λ = ȧ/a` across `t`; nonzero only where the motion starts
    /// or stops with finite velocity.
    pub fn velocity_jump(&self, t: f64) -> f64 {
        if self.epsilon == 0.0 {
            0.0
        } else if t == 0.0 {
            self.moving_point(0.0).lambda
        } else if t == self.t_f {
            -self.moving_point(self.t_f).lambda
        } else {
            0.0
        }
    }

    /// Analytic form on the open motion interval, extended to its ends.
    fn moving_point(&self, t: f64) -> TrajectoryPoint {
        let [w0, w1, w2, w3] = self.envelope(t);
        let om = self.omega;
        let (s, c) = (om * t).sin_cos();
        let (s1, s2, s3) = (om * c, -om * om * s, -om * om * om * c);
        let f = w0 * s;
        let f1 = w1 * s + w0 * s1;
        let f2 = w2 * s + 2.0 * w1 * s1 + w0 * s2;
        let f3 = w3 * s + 3.0 * w2 * s1 + 3.0 * w1 * s2 + w0 * s3;
        let k = self.a0 * self.epsilon;
        let a = self.a0 + k * f;
        let (adot, addot, adddot) = (k * f1, k * f2, k * f3);
        let lambda = adot / a;
        let lambdadot = addot / a - lambda * lambda;
        let lambdaddot = adddot / a - adot * addot / (a * a) - 2.0 * lambda * lambdadot;
        TrajectoryPoint {
            a,
            adot,
            addot,
            adddot,
            lambda,
            lambdadot,
            lambdaddot,
        }
    }

    /// Envelope `w` and its first three derivatives.
    fn envelope(&self, t: f64) -> [f64; 4] {
        let w = self.window();
        if self.shape == DriveShape::PureSine || w == 0.0 {
            return [1.0, 0.0, 0.0, 0.0];
        }
        if t < w {
            let r = ramp(t / w);
            [r[0], r[1] / w, r[2] / (w * w), r[3] / (w * w * w)]
        } else if t > self.t_f - w {
            let r = ramp((self.t_f - t) / w);
            [r[0], -r[1] / w, r[2] / (w * w), -r[3] / (w * w * w)]
        } else {
            [1.0, 0.0, 0.0, 0.0]
        }
    }
}

/// `R(u) = 10u³ − 15u⁴ + 6u⁵` and its derivatives.
fn ramp(u: f64) -> [f64; 4] {
    let u2 = u * u;
    [
        u2 * u * (10.0 - 15.0 * u + 6.0 * u2),
        30.0 * u2 * (1.0 - u) * (1.0 - u),
        60.0 * u * (1.0 - u) * (1.0 - 2.0 * u),
        60.0 - 360.0 * u + 360.0 * u2,
    ]
}

fn validate(a0: f64, epsilon: f64, omega: f64, t_f: f64) -> Result<()> {
    let checks = [
        ("a0", a0, a0 > 0.0),
        ("epsilon", epsilon, epsilon >= 0.0),
        ("omega", omega, omega > 0.0),
        ("t_f", t_f, t_f > 0.0),
    ];
    for (name, value, ok) in checks {
        if !value.is_finite() || !ok {
            return Err(Error::Config(format!(
                "trajectory field {name} = {value} is out of range"
            )));
        }
    }
    Ok(())
}
