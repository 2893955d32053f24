use alloc::{format, string::String, vec::Vec};
#[allow(unused_imports)] // shadowed by inherent methods when std is linked
use num_traits::Float;

use super::GaugeProfile;
use crate::linalg::Matrix;
use crate::quad::{panels_for, Integrator};
use crate::specfun::{riccati_deriv, BesselZeroTable, Limits};
use crate::{BoundaryCondition, Error, Result};

/// Truncated coupling matrices of one `(bc, ℓ)` block at the static radius.
///
/// `zeros[p]` holds the dimensionless root `x_{ℓ,p+1}`; matrices are indexed
/// from zero. `s` and `eta` are present for Neumann blocks only.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CouplingSet {
    pub bc: BoundaryCondition,
    pub ell: u32,
    pub zeros: Vec<f64>,
    pub g: Matrix,
    pub s: Option<Matrix>,
    pub eta: Option<Matrix>,
    pub gauge_id: Option<String>,
}

impl CouplingSet {
    /// Truncation size P.
    pub fn size(&self) -> usize {
        self.zeros.len()
    }

    /// Static frequencies `x_p / a0`.
    pub fn omegas(&self, a0: f64) -> Vec<f64> {
        self.zeros.iter().map(|x| x / a0).collect()
    }

    /// Copy with `g` replaced by zeros, leaving `s` and `eta` intact.
    pub fn without_g(&self) -> Self {
        let p = self.size();
        Self {
            g: Matrix::zeros(p, p),
            ..self.clone()
        }
    }

    /// Named matrices in export order.
    pub fn matrices(&self) -> Vec<(&'static str, &Matrix)> {
        let mut out = alloc::vec![("g", &self.g)];
        if let Some(s) = &self.s {
            out.push(("s", s));
        }
        if let Some(e) = &self.eta {
            out.push(("eta", e));
        }
        out
    }
}

fn l_factor(ell: u32) -> f64 {
    let l = f64::from(ell);
    l * (l + 1.0)
}

/// Signed normalization `C` of `C j_ℓ(x r/a)` on `[0, a]` for a root `x`.
///
/// Dirichlet: `√(2/a³)/j′_ℓ(x)`; Neumann: `√(2/a³)/(j_ℓ(x)√(1 − ℓ(ℓ+1)/x²))`.
pub fn normalization_for_root(bc: BoundaryCondition, ell: u32, x: f64, a: f64) -> Result<f64> {
    let limits = Limits::default();
    let scale = (2.0 / (a * a * a)).sqrt();
    match bc {
        BoundaryCondition::Dirichlet => Ok(scale / limits.j_deriv(ell, x)?),
        BoundaryCondition::Neumann => {
            let q = 1.0 - l_factor(ell) / (x * x);
            if q <= 0.0 {
                return Err(Error::InvariantViolation(format!(
                    "Neumann root {x} for l={ell} has x^2 <= l(l+1)"
                )));
            }
            Ok(scale / (limits.j(ell, x)? * q.sqrt()))
        }
    }
}

/// Normalization of mode `(ℓ, k)` at radius `a`, using the table's root.
pub fn mode_normalization(table: &mut BesselZeroTable, ell: u32, k: u32, a: f64) -> Result<f64> {
    let x = table.zero(ell, k)?;
    normalization_for_root(table.bc(), ell, x, a)
}

/// Dirichlet block from the closed form `2 j_p j_n / (j_n² − j_p²)`.
pub fn coupling_dirichlet(table: &mut BesselZeroTable, ell: u32, size: usize) -> Result<CouplingSet> {
    check_table(table, BoundaryCondition::Dirichlet, size)?;
    let x = table.zeros(ell, size as u32)?;
    let g = Matrix::from_fn(size, size, |p, n| {
        if p == n {
            0.0
        } else {
            2.0 * x[p] * x[n] / (x[n] * x[n] - x[p] * x[p])
        }
    });
    Ok(CouplingSet {
        bc: BoundaryCondition::Dirichlet,
        ell,
        zeros: x,
        g,
        s: None,
        eta: None,
        gauge_id: None,
    })
}

/// Neumann block with the default quadrature tolerance (1e-10).
pub fn coupling_neumann(
    table: &mut BesselZeroTable,
    ell: u32,
    size: usize,
    gauge: &GaugeProfile,
) -> Result<CouplingSet> {
    coupling_neumann_with(table, ell, size, gauge, &Integrator::default())
}

/// Neumann block: `g` in closed form, `s` and `η` by quadrature of
///
/// `s_pn = ∫ v ψ_p ψ_n ξ² dξ`,
/// `η_pn = ∫ {(v″ − κ_p² v) ψ_p ψ_n + (2/ξ) v′ (ψ_p + ξ ψ_p′) ψ_n} ξ² dξ`
///
/// over `[0, 1]` with `ψ_p(ξ) = C_p j_ℓ(κ_p ξ)`.
pub fn coupling_neumann_with(
    table: &mut BesselZeroTable,
    ell: u32,
    size: usize,
    gauge: &GaugeProfile,
    integrator: &Integrator,
) -> Result<CouplingSet> {
    check_table(table, BoundaryCondition::Neumann, size)?;
    gauge.validate()?;
    let kappa = table.zeros(ell, size as u32)?;
    let lf = l_factor(ell);
    let mut c = Vec::with_capacity(size);
    for &k in &kappa {
        c.push(normalization_for_root(BoundaryCondition::Neumann, ell, k, 1.0)?);
    }
    let g = Matrix::from_fn(size, size, |p, n| {
        let (kp2, kn2) = (kappa[p] * kappa[p], kappa[n] * kappa[n]);
        if p == n {
            -kp2 / (kp2 - lf)
        } else {
            2.0 * kappa[p] * kappa[n] / (kn2 - kp2) * ((kp2 - lf) / (kn2 - lf)).sqrt()
        }
    });

    let panels = panels_for(kappa[size - 1], 1.0);
    let limits = Limits::default();
    let psi = |p: usize, xi: f64| -> (f64, f64) {
        // (ψ, ψ + ξψ′) using d/dξ[ξ j_ℓ(κξ)] = riccati_deriv(κξ)
        let z = kappa[p] * xi;
        let j = limits.j(ell, z).unwrap_or(f64::NAN);
        (c[p] * j, c[p] * riccati_deriv(ell, z))
    };
    let mut s = Matrix::zeros(size, size);
    let mut eta = Matrix::zeros(size, size);
    for p in 0..size {
        for n in 0..size {
            if n >= p {
                let sv = integrator.integrate(
                    |xi| gauge.v(xi) * psi(p, xi).0 * psi(n, xi).0 * xi * xi,
                    0.0,
                    1.0,
                    panels,
                )?;
                s[(p, n)] = sv;
                s[(n, p)] = sv;
            }
            let kp2 = kappa[p] * kappa[p];
            eta[(p, n)] = integrator.integrate(
                |xi| {
                    let [v, dv, d2v] = gauge.eval(xi);
                    let (pp, rp) = psi(p, xi);
                    let (pn, _) = psi(n, xi);
                    ((d2v - kp2 * v) * pp * pn * xi + 2.0 * dv * rp * pn) * xi
                },
                0.0,
                1.0,
                panels,
            )?;
        }
    }
    if !(s.all_finite() && eta.all_finite()) {
        return Err(Error::NonConvergence(format!(
            "non-finite s or eta for Neumann l={ell}"
        )));
    }
    Ok(CouplingSet {
        bc: BoundaryCondition::Neumann,
        ell,
        zeros: kappa,
        g,
        s: Some(s),
        eta: Some(eta),
        gauge_id: Some(gauge.id()),
    })
}

fn check_table(table: &BesselZeroTable, bc: BoundaryCondition, size: usize) -> Result<()> {
    if table.bc() != bc {
        return Err(Error::Config(format!(
            "{} couplings requested from a {} zero table",
            bc.polarization(),
            table.bc().polarization()
        )));
    }
    if size < 2 {
        return Err(Error::Config(format!("truncation P = {size} must be at least 2")));
    }
    if size > table.limits().k_max as usize {
        return Err(Error::Domain(format!(
            "truncation P = {size} exceeds the zero table limit k_max = {}",
            table.limits().k_max
        )));
    }
    Ok(())
}
