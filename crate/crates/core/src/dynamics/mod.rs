//! Coupled equations for the instantaneous-mode amplitudes `Q_p(t)`, their
//! integration through the motion, and the out-region Bogoliubov data.

mod bogoliubov;
mod evolve;
mod rhs;

pub use bogoliubov::{extract_bogoliubov, extract_static, BogoliubovPair, BogoliubovRow};
pub use evolve::{evolve, evolve_all, evolve_row, Evolution, EvolveOptions, Sample};
pub use rhs::{assemble_rhs, AmplitudeState, ModeSystem};
