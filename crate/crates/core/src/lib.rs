//! Motion-induced photon creation inside a perfectly conducting spherical
//! cavity whose radius oscillates.
//!
//! The electromagnetic field is split into two scalar fields: TE modes obey a
//! Dirichlet condition on the moving wall and TM modes a generalized Neumann
//! condition `(∂_r + ȧ ∂_t)(r φ) = 0`. Each field mode is expanded in the
//! instantaneous eigenbasis of the static cavity, which turns the wave
//! equation into a set of coupled oscillators for the amplitudes `Q_p(t)`.
//!
//! The crate is organised bottom-up:
//!
//! - [`specfun`]: spherical Bessel functions and the two zero families that
//!   fix the cavity spectra.
//! - [`quad`] and [`ode`]: adaptive Gauss–Legendre quadrature and a
//!   Dormand–Prince 5(4) integrator.
//! - [`cavity`]: wall trajectory, gauge profile, mode normalization and the
//!   coupling matrices `g`, `s`, `η`.
//! - [`dynamics`]: the coupled-mode equations, their integration and the
//!   extraction of Bogoliubov coefficients and particle numbers.
//! - [`msa`]: multiple-scale (slow-time) analysis: resonance detection,
//!   closed forms, growth rates and the reduced amplitude equations.
//! - [`fock`]: the three-mode Fock space of the resonant `L = 1` triplet,
//!   angular-momentum operators and the singlet out-vacuum.
//!
//! All computations use dimensionless variables with the static radius
//! `a0 = 1`; callers rescale on input and output.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]
// `!(x > 0.0)` guards also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod cavity;
pub mod dynamics;
mod error;
pub mod fock;
pub mod linalg;
pub mod msa;
pub mod ode;
pub mod quad;
pub mod specfun;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Boundary condition on the cavity wall.
///
/// `Dirichlet` describes the TE scalar field and `Neumann` the TM scalar
/// field (generalized Neumann condition on the moving wall).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum BoundaryCondition {
    Dirichlet,
    Neumann,
}

impl BoundaryCondition {
    /// Short tag used in tabular output (`D` or `N`).
    pub fn tag(self) -> &'static str {
        match self {
            BoundaryCondition::Dirichlet => "D",
            BoundaryCondition::Neumann => "N",
        }
    }

    /// Electromagnetic polarization carried by this scalar field.
    pub fn polarization(self) -> &'static str {
        match self {
            BoundaryCondition::Dirichlet => "TE",
            BoundaryCondition::Neumann => "TM",
        }
    }

    /// Parses `D`, `N`, `TE`, `TM`, `dirichlet` or `neumann` (case-insensitive).
    pub fn parse(text: &str) -> Option<Self> {
        let t = text.trim();
        for (names, bc) in [
            (["d", "te", "dirichlet"], BoundaryCondition::Dirichlet),
            (["n", "tm", "neumann"], BoundaryCondition::Neumann),
        ] {
            if names.iter().any(|n| t.eq_ignore_ascii_case(n)) {
                return Some(bc);
            }
        }
        None
    }
}

impl core::fmt::Display for BoundaryCondition {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.polarization())
    }
}
