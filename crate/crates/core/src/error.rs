use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Errors raised by the numerical core.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// An argument lies outside the supported domain (e.g. `ℓ > ℓ_max`).
    Domain(String),
    /// A root bracket did not contain a sign change.
    Bracketing { what: String, lo: f64, hi: f64 },
    /// A computed quantity violated an invariant it must satisfy.
    InvariantViolation(String),
    /// Inconsistent inputs (mismatched sizes, wrong boundary condition, ...).
    Config(String),
    /// A call was made while its precondition did not hold.
    Precondition(String),
    /// The adaptive step size collapsed below the representable resolution.
    Stiffness { t: f64, step: f64 },
    /// Amplitudes grew beyond the divergence guard.
    Divergence { t: f64, magnitude: f64 },
    /// An iterative procedure did not converge.
    NonConvergence(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Bracketing { what, lo, hi } => {
                write!(f, "no sign change for {what} on [{lo}, {hi}]")
            }
            Error::InvariantViolation(msg) => write!(f, "invariant violated: {msg}"),
            Error::Config(msg) => write!(f, "configuration error: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition failed: {msg}"),
            Error::Stiffness { t, step } => {
                write!(f, "step size underflow (h = {step:e}) at t = {t}")
            }
            Error::Divergence { t, magnitude } => write!(
                f,
                "amplitude diverged (|Q| = {magnitude:e}) at t = {t}; reduce epsilon * t_f"
            ),
            Error::NonConvergence(msg) => write!(f, "did not converge: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
