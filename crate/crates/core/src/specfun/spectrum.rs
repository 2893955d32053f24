use alloc::vec::Vec;

use super::BesselZeroTable;
use crate::{BoundaryCondition, Result};

/// A static cavity mode `(ℓ, n)` with its frequency at radius `a0`.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Mode {
    pub ell: u32,
    pub n: u32,
    pub omega: f64,
}

/// Static eigenfrequencies for one boundary condition, ordered by (ℓ, n).
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Spectrum {
    pub bc: BoundaryCondition,
    pub a0: f64,
    pub modes: Vec<Mode>,
}

impl Spectrum {
    /// First `count` modes of every order in `ells`.
    pub fn build(
        table: &mut BesselZeroTable,
        a0: f64,
        ells: impl IntoIterator<Item = u32>,
        count: u32,
    ) -> Result<Self> {
        let mut ells: Vec<u32> = ells.into_iter().collect();
        ells.sort_unstable();
        ells.dedup();
        let mut modes = Vec::new();
        for ell in ells {
            for (i, x) in table.zeros(ell, count)?.into_iter().enumerate() {
                modes.push(Mode {
                    ell,
                    n: i as u32 + 1,
                    omega: x / a0,
                });
            }
        }
        Ok(Self {
            bc: table.bc(),
            a0,
            modes,
        })
    }

    pub fn omega(&self, ell: u32, n: u32) -> Option<f64> {
        self.modes.iter().find(|m| m.ell == ell && m.n == n).map(|m| m.omega)
    }

    /// Modes of a single order, ascending in n.
    pub fn block(&self, ell: u32) -> impl Iterator<Item = &Mode> {
        self.modes.iter().filter(move |m| m.ell == ell)
    }

    pub fn is_empty(&self) -> bool {
        self.modes.is_empty()
    }
}
