use alloc::{format, string::String, vec::Vec};

use crate::{Error, Result};

const ENDPOINT_TOL: f64 = 1e-10;

/// Radial profile `v(ξ)` of the Neumann coordinate change
/// `η = t + ȧ a v(r/a)`; it must satisfy `v(1) = 0` and `v′(1) = −1`.
#[derive(Clone, Debug, Default, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum GaugeProfile {
    /// `(1 − ξ²)/2`
    #[default]
    Quadratic,
    /// `(1 − ξ) ξ²`
    Cubic,
    /// `Σ c_i ξ^i` with user-supplied coefficients.
    Polynomial(Vec<f64>),
}

impl GaugeProfile {
    /// Resolve a built-in profile by name.
    pub fn by_name(name: &str) -> Result<Self> {
        match name.trim().to_ascii_lowercase().as_str() {
            "quadratic" | "default" => Ok(GaugeProfile::Quadratic),
            "cubic" => Ok(GaugeProfile::Cubic),
            other => Err(Error::Config(format!(
                "unknown gauge profile '{other}' (expected 'quadratic' or 'cubic')"
            ))),
        }
    }

    /// Checked user polynomial.
    pub fn polynomial(coeffs: Vec<f64>) -> Result<Self> {
        let g = GaugeProfile::Polynomial(coeffs);
        g.validate()?;
        Ok(g)
    }

    pub fn id(&self) -> String {
        match self {
            GaugeProfile::Quadratic => "quadratic".into(),
            GaugeProfile::Cubic => "cubic".into(),
            GaugeProfile::Polynomial(c) => format!("polynomial{c:?}"),
        }
    }

    pub fn v(&self, xi: f64) -> f64 {
        self.eval(xi)[0]
    }

    pub fn dv(&self, xi: f64) -> f64 {
        self.eval(xi)[1]
    }

    pub fn d2v(&self, xi: f64) -> f64 {
        self.eval(xi)[2]
    }

    /// `[v, v′, v″]` at `ξ`.
    pub fn eval(&self, xi: f64) -> [f64; 3] {
        match self {
            GaugeProfile::Quadratic => [0.5 * (1.0 - xi * xi), -xi, -1.0],
            GaugeProfile::Cubic => [(1.0 - xi) * xi * xi, 2.0 * xi - 3.0 * xi * xi, 2.0 - 6.0 * xi],
            GaugeProfile::Polynomial(c) => {
                let mut out = [0.0; 3];
                for (i, &ci) in c.iter().enumerate().rev() {
                    let fi = i as f64;
                    out[0] = out[0] * xi + ci;
                    if i >= 1 {
                        out[1] = out[1] * xi + fi * ci;
                    }
                    if i >= 2 {
                        out[2] = out[2] * xi + fi * (fi - 1.0) * ci;
                    }
                }
                out
            }
        }
    }

    /// Endpoint conditions `v(1) = 0`, `v′(1) = −1` to 1e-10.
    pub fn validate(&self) -> Result<()> {
        let [v, dv, _] = self.eval(1.0);
        if !(v.abs() <= ENDPOINT_TOL && (dv + 1.0).abs() <= ENDPOINT_TOL) {
            return Err(Error::Config(format!(
                "gauge profile {} violates v(1)=0, v'(1)=-1: v(1)={v:e}, v'(1)={dv}",
                self.id()
            )));
        }
        Ok(())
    }
}
