//! Spherical Bessel functions and the zeros that define the cavity spectra.
//!
//! Dirichlet (TE) frequencies are `ω_{ℓk} = j_{ℓk}/a0` where `j_{ℓk}` is the
//! k-th positive zero of `j_ℓ`. Neumann (TM) frequencies are `κ_{ℓk}/a0` where
//! `κ_{ℓk}` is the k-th positive zero of `d/dx [x j_ℓ(x)]`.

mod bessel;
mod spectrum;
mod zeros;

pub use bessel::{
    riccati_deriv, riccati_second_deriv, sph_bessel_j, sph_bessel_j_deriv, Limits, DEFAULT_ELL_MAX, DEFAULT_K_MAX,
};
pub use spectrum::{Mode, Spectrum};
pub use zeros::{dirichlet_zero, neumann_zero, BesselZeroTable, DEFAULT_PRECISION};
