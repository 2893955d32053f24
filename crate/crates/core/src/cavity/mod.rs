//! Wall motion, the Neumann gauge profile, mode normalizations and the
//! coupling matrices between instantaneous modes.
//!
//! Couplings follow `g_pn = a ∫ ∂_a φ_p φ_n d³x` evaluated at the static
//! radius. For Dirichlet modes this gives `g_pn = 2 j_p j_n / (j_n² − j_p²)`,
//! antisymmetric with zero diagonal. For Neumann modes
//! `g_pp = −κ_p²/(κ_p² − ℓ(ℓ+1))` and
//! `g_pn = 2 κ_p κ_n/(κ_n² − κ_p²) · √((κ_p² − ℓ(ℓ+1))/(κ_n² − ℓ(ℓ+1)))`.

mod coupling;
mod gauge;
mod trajectory;

pub use coupling::{
    coupling_dirichlet, coupling_neumann, coupling_neumann_with, mode_normalization, normalization_for_root,
    CouplingSet,
};
pub use gauge::GaugeProfile;
pub use trajectory::{DriveShape, Trajectory, TrajectoryPoint};
