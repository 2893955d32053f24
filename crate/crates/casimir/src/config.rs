//! TOML run configuration.

use std::f64::consts::PI;
use std::path::PathBuf;

use casimir_core::cavity::{coupling_dirichlet, coupling_neumann, CouplingSet, GaugeProfile, Trajectory};
use casimir_core::dynamics::EvolveOptions;
use casimir_core::specfun::DEFAULT_K_MAX;
use casimir_core::BoundaryCondition;
use serde::{Deserialize, Serialize};

use crate::cache::ZeroTables;
use crate::error::{AppError, AppResult};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResonanceTarget {
    pub bc: String,
    pub ell: u32,
    pub n: u32,
}

/// Either an explicit drive frequency or a parametric target `Ω = 2ω_{ℓn}`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Drive {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub resonance: Option<ResonanceTarget>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sweep {
    pub field: String,
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

/// Fields a sweep may vary.
pub const SWEEP_FIELDS: &[&str] = &["epsilon", "omega", "a0", "t_f_periods", "window_periods", "P", "tol"];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub epsilon: f64,
    #[serde(default = "d::a0")]
    pub a0: f64,
    #[serde(default = "d::t_f_periods")]
    pub t_f_periods: u32,
    #[serde(default = "d::bc")]
    pub bc: String,
    #[serde(default = "d::one")]
    pub ell: u32,
    #[serde(default = "d::k0")]
    pub k0: usize,
    #[serde(rename = "P", default = "d::p")]
    pub p: usize,
    #[serde(default = "d::tol")]
    pub tol: f64,
    #[serde(default = "d::gauge")]
    pub gauge: String,
    #[serde(default)]
    pub window_periods: u32,
    #[serde(default)]
    pub match_corners: bool,
    #[serde(default = "d::resonance_rel_tol")]
    pub resonance_rel_tol: f64,
    #[serde(default = "d::n_max")]
    pub n_max: u32,
    #[serde(default = "d::k0")]
    pub timeseries_stride: usize,
    #[serde(default)]
    pub format: Format,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
    pub drive: Drive,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<Sweep>,
}

mod d {
    pub fn a0() -> f64 {
        1.0
    }
    pub fn t_f_periods() -> u32 {
        40
    }
    pub fn bc() -> String {
        "TE".into()
    }
    pub fn one() -> u32 {
        1
    }
    pub fn k0() -> usize {
        1
    }
    pub fn p() -> usize {
        12
    }
    pub fn tol() -> f64 {
        1e-10
    }
    pub fn gauge() -> String {
        "quadratic".into()
    }
    pub fn resonance_rel_tol() -> f64 {
        1e-9
    }
    pub fn n_max() -> u32 {
        24
    }
}

fn invalid(field: &str, why: impl std::fmt::Display) -> AppError {
    AppError::Validation(format!("field `{field}`: {why}"))
}

fn parse_bc(field: &str, text: &str) -> AppResult<BoundaryCondition> {
    BoundaryCondition::parse(text).ok_or_else(|| {
        invalid(
            field,
            format!("unknown boundary condition `{text}` (use TE/Dirichlet or TM/Neumann)"),
        )
    })
}

impl RunConfig {
    /// Parses TOML text; syntax, type, unknown-key and missing-field errors
    /// carry the line and column.
    pub fn parse(text: &str) -> AppResult<Self> {
        toml::from_str(text).map_err(|e| AppError::Validation(e.to_string()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("configuration serializes")
    }

    pub fn bc(&self) -> AppResult<BoundaryCondition> {
        parse_bc("bc", &self.bc)
    }

    pub fn validate(&self) -> AppResult<()> {
        let positive = |field: &str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(invalid(field, format!("{v} must be positive and finite")))
            }
        };
        if !(self.epsilon.is_finite() && (0.0..1.0).contains(&self.epsilon)) {
            return Err(invalid("epsilon", format!("{} must lie in [0, 1)", self.epsilon)));
        }
        positive("a0", self.a0)?;
        positive("tol", self.tol)?;
        positive("resonance_rel_tol", self.resonance_rel_tol)?;
        if self.t_f_periods == 0 {
            return Err(invalid("t_f_periods", "at least one period is required"));
        }
        if self.window_periods > self.t_f_periods {
            return Err(invalid("window_periods", "window is longer than the drive"));
        }
        self.bc()?;
        if self.p < 2 || self.p > DEFAULT_K_MAX as usize {
            return Err(invalid("P", format!("{} outside 2..={DEFAULT_K_MAX}", self.p)));
        }
        if self.k0 == 0 || self.k0 > self.p {
            return Err(invalid("k0", format!("{} outside 1..={}", self.k0, self.p)));
        }
        GaugeProfile::by_name(&self.gauge)
            .map_err(|_| invalid("gauge", format!("unknown profile `{}` (quadratic, cubic)", self.gauge)))?;
        if self.n_max < 2 {
            return Err(invalid("n_max", "at least 2 is required"));
        }
        if self.timeseries_stride == 0 {
            return Err(invalid("timeseries_stride", "must be at least 1"));
        }
        match (&self.drive.resonance, self.drive.omega) {
            (Some(_), Some(_)) | (None, None) => {
                return Err(invalid(
                    "drive",
                    "give exactly one of `drive.resonance` or `drive.omega`",
                ))
            }
            (Some(r), None) => {
                parse_bc("drive.resonance.bc", &r.bc)?;
                if r.n == 0 {
                    return Err(invalid("drive.resonance.n", "radial index starts at 1"));
                }
            }
            (None, Some(w)) => positive("drive.omega", w)?,
        }
        if let Some(s) = &self.sweep {
            if !SWEEP_FIELDS.contains(&s.field.as_str()) {
                return Err(invalid(
                    "sweep.field",
                    format!("`{}` is not sweepable (one of {SWEEP_FIELDS:?})", s.field),
                ));
            }
            if s.steps == 0 {
                return Err(invalid("sweep.steps", "must be at least 1"));
            }
            if !(s.start.is_finite() && s.stop.is_finite()) {
                return Err(invalid("sweep.start", "range must be finite"));
            }
        }
        Ok(())
    }

    /// Copy with one sweepable field set to `value`.
    pub fn with_field(&self, field: &str, value: f64) -> AppResult<Self> {
        let mut c = self.clone();
        let count = |v: f64| -> AppResult<u64> {
            if v >= 0.0 && v.fract() == 0.0 {
                Ok(v as u64)
            } else {
                Err(invalid(field, format!("{v} is not a whole number")))
            }
        };
        match field {
            "epsilon" => c.epsilon = value,
            "omega" => {
                c.drive = Drive {
                    resonance: None,
                    omega: Some(value),
                }
            }
            "a0" => c.a0 = value,
            "t_f_periods" => c.t_f_periods = count(value)? as u32,
            "window_periods" => c.window_periods = count(value)? as u32,
            "P" => c.p = count(value)? as usize,
            "tol" => c.tol = value,
            _ => return Err(invalid("sweep.field", format!("`{field}` is not sweepable"))),
        }
        c.sweep = None;
        c.validate()?;
        Ok(c)
    }
}

/// Validated configuration with the drive frequency and profile resolved.
#[derive(Clone, Debug)]
pub struct Resolved {
    pub config: RunConfig,
    pub bc: BoundaryCondition,
    pub gauge: GaugeProfile,
    pub omega_drive: f64,
}

impl Resolved {
    pub fn new(config: RunConfig, tables: &mut ZeroTables) -> AppResult<Self> {
        config.validate()?;
        let bc = config.bc()?;
        let gauge = GaugeProfile::by_name(&config.gauge)?;
        let omega_drive = match (&config.drive.resonance, config.drive.omega) {
            (Some(r), _) => {
                let tbc = parse_bc("drive.resonance.bc", &r.bc)?;
                2.0 * tables.get(tbc).zero(r.ell, r.n)? / config.a0
            }
            (None, Some(w)) => w,
            (None, None) => unreachable!("validated"),
        };
        Ok(Self {
            config,
            bc,
            gauge,
            omega_drive,
        })
    }

    pub fn period(&self) -> f64 {
        2.0 * PI / self.omega_drive
    }

    /// Length of the full-amplitude drive, `t_f_periods` drive periods.
    pub fn effective_time(&self) -> f64 {
        f64::from(self.config.t_f_periods) * self.period()
    }

    /// Pure sine over `t_f_periods`, or a windowed sine whose ramps add
    /// `window_periods` in total so the effective duration is unchanged.
    pub fn trajectory(&self) -> AppResult<Trajectory> {
        let c = &self.config;
        let w = c.window_periods;
        let t = if w == 0 {
            Trajectory::pure_sine(c.a0, c.epsilon, self.omega_drive, self.effective_time())?
        } else {
            Trajectory::windowed_sine(
                c.a0,
                c.epsilon,
                self.omega_drive,
                f64::from(c.t_f_periods + w) * self.period(),
                w,
            )?
        };
        Ok(t)
    }

    pub fn couplings(&self, tables: &mut ZeroTables, size: usize) -> AppResult<CouplingSet> {
        let t = tables.get(self.bc);
        Ok(match self.bc {
            BoundaryCondition::Dirichlet => coupling_dirichlet(t, self.config.ell, size)?,
            BoundaryCondition::Neumann => coupling_neumann(t, self.config.ell, size, &self.gauge)?,
        })
    }

    pub fn evolve_options(&self) -> EvolveOptions {
        EvolveOptions {
            tol: self.config.tol,
            match_corners: self.config.match_corners,
            ..EvolveOptions::default()
        }
    }

    pub fn frequency_tol(&self) -> f64 {
        self.config.resonance_rel_tol * self.omega_drive
    }
}
