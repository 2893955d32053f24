use alloc::{format, vec::Vec};
use core::f64::consts::PI;
#[allow(unused_imports)] // shadowed by inherent methods when std is linked
use num_traits::Float;

use super::bessel::{j_deriv_unchecked, j_unchecked, Limits};
use super::{riccati_deriv, riccati_second_deriv};
use crate::{BoundaryCondition, Error, Result};

/// Absolute tolerance on the defining function at a stored root.
pub const DEFAULT_PRECISION: f64 = 1e-12;

const MAX_ITER: usize = 200;

/// Lazily filled table of the first zeros for each order.
///
/// Mutation needs `&mut self`, so a table shared between threads is either
/// warmed up first and then read, or wrapped in a lock by the caller.
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BesselZeroTable {
    bc: BoundaryCondition,
    limits: Limits,
    precision: f64,
    rows: Vec<Vec<f64>>,
    /// Dirichlet rows used to bracket Neumann roots (empty for Dirichlet).
    helper: Vec<Vec<f64>>,
}

impl BesselZeroTable {
    pub fn new(bc: BoundaryCondition) -> Self {
        Self::with_limits(bc, Limits::default())
    }

    pub fn with_limits(bc: BoundaryCondition, limits: Limits) -> Self {
        Self {
            bc,
            limits,
            precision: DEFAULT_PRECISION,
            rows: Vec::new(),
            helper: Vec::new(),
        }
    }

    pub fn bc(&self) -> BoundaryCondition {
        self.bc
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn precision(&self) -> f64 {
        self.precision
    }

    /// Cached root, if already computed.
    pub fn get(&self, ell: u32, k: u32) -> Option<f64> {
        if k == 0 {
            return None;
        }
        self.rows.get(ell as usize)?.get(k as usize - 1).copied()
    }

    /// The k-th root of order ℓ, computing and caching it when missing.
    pub fn zero(&mut self, ell: u32, k: u32) -> Result<f64> {
        self.limits.check_ell(ell)?;
        self.limits.check_k(k)?;
        if let Some(x) = self.get(ell, k) {
            return Ok(x);
        }
        match self.bc {
            BoundaryCondition::Dirichlet => fill_dirichlet(&mut self.rows, ell, k as usize)?,
            BoundaryCondition::Neumann => self.fill_neumann(ell, k as usize)?,
        }
        Ok(self.rows[ell as usize][k as usize - 1])
    }

    /// The first `count` roots of order ℓ.
    pub fn zeros(&mut self, ell: u32, count: u32) -> Result<Vec<f64>> {
        if count == 0 {
            return Ok(Vec::new());
        }
        self.zero(ell, count)?;
        Ok(self.rows[ell as usize][..count as usize].to_vec())
    }

    /// Fill every entry up to `(ell_max, k_max)`.
    pub fn warm_up(&mut self, ell_max: u32, k_max: u32) -> Result<()> {
        for ell in 0..=ell_max {
            self.zero(ell, k_max)?;
        }
        Ok(())
    }

    /// Stored entries as `(ℓ, k, x)` in (ℓ, k) order.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, f64)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(ell, row)| row.iter().enumerate().map(move |(k, &x)| (ell as u32, k as u32 + 1, x)))
    }

    /// Defining function whose roots this table stores.
    pub fn defining_function(&self, ell: u32, x: f64) -> f64 {
        match self.bc {
            BoundaryCondition::Dirichlet => j_unchecked(ell, x),
            BoundaryCondition::Neumann => riccati_deriv(ell, x),
        }
    }

    /// Insert a root read from an external cache.
    ///
    /// The value must extend the stored row by exactly one entry, exceed its
    /// predecessor and annihilate the defining function to the table
    /// precision; otherwise the cache is treated as corrupt.
    pub fn insert_verified(&mut self, ell: u32, k: u32, x: f64) -> Result<()> {
        self.limits.check_ell(ell)?;
        self.limits.check_k(k)?;
        let residual = self.defining_function(ell, x).abs();
        if !x.is_finite() || x <= 0.0 || residual > self.precision {
            return Err(Error::InvariantViolation(format!(
                "cached {} root (l={ell}, k={k}) = {x} has residual {residual:e}",
                self.bc.tag()
            )));
        }
        if self.bc == BoundaryCondition::Neumann && x * x <= l_factor(ell) {
            return Err(Error::InvariantViolation(format!(
                "cached Neumann root (l={ell}, k={k}) = {x} violates x^2 > l(l+1)"
            )));
        }
        let idx = ell as usize;
        if self.rows.len() <= idx {
            self.rows.resize(idx + 1, Vec::new());
        }
        let row = &mut self.rows[idx];
        if row.len() + 1 != k as usize {
            return Err(Error::InvariantViolation(format!(
                "cached root (l={ell}, k={k}) is out of sequence"
            )));
        }
        if row.last().is_some_and(|&prev| x <= prev) {
            return Err(Error::InvariantViolation(format!(
                "cached root (l={ell}, k={k}) = {x} is not increasing"
            )));
        }
        row.push(x);
        Ok(())
    }

    /// Check monotonicity, residuals, interlacing (Dirichlet) and
    /// `x² > ℓ(ℓ+1)` (Neumann) on every stored entry.
    pub fn verify(&self) -> Result<()> {
        for (ell, row) in self.rows.iter().enumerate() {
            let ell = ell as u32;
            for (i, &x) in row.iter().enumerate() {
                let k = i as u32 + 1;
                let r = self.defining_function(ell, x).abs();
                if r > self.precision {
                    return Err(Error::InvariantViolation(format!(
                        "root (l={ell}, k={k}) = {x} has residual {r:e}"
                    )));
                }
                if i > 0 && x <= row[i - 1] {
                    return Err(Error::InvariantViolation(format!(
                        "roots of order {ell} not increasing at k={k}"
                    )));
                }
                match self.bc {
                    BoundaryCondition::Dirichlet => {
                        let next = self.rows.get(ell as usize + 1);
                        if let Some(&up) = next.and_then(|r| r.get(i)) {
                            let above = row.get(i + 1).copied().unwrap_or(f64::INFINITY);
                            if !(x < up && up < above) {
                                return Err(Error::InvariantViolation(format!(
                                    "interlacing fails at (l={ell}, k={k})"
                                )));
                            }
                        }
                    }
                    BoundaryCondition::Neumann => {
                        if ell > 0 && x * x <= l_factor(ell) {
                            return Err(Error::InvariantViolation(format!(
                                "Neumann root (l={ell}, k={k}) has x^2 <= l(l+1)"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn fill_neumann(&mut self, ell: u32, count: usize) -> Result<()> {
        let idx = ell as usize;
        if self.rows.len() <= idx {
            self.rows.resize(idx + 1, Vec::new());
        }
        let have = self.rows[idx].len();
        if ell == 0 {
            for k in have + 1..=count {
                self.rows[0].push((2 * k - 1) as f64 * PI / 2.0);
            }
            return Ok(());
        }
        fill_dirichlet(&mut self.helper, ell, count)?;
        let dir = &self.helper[idx];
        let lf = l_factor(ell);
        for k in have + 1..=count {
            let lo = if k == 1 { lf.sqrt() } else { dir[k - 2] };
            let hi = dir[k - 1];
            let guess = mcmahon_neumann(ell, k as u32);
            let x = safeguarded_newton(
                |x| (riccati_deriv(ell, x), riccati_second_deriv(ell, x)),
                lo,
                hi,
                guess,
                "Neumann",
            )?;
            self.rows[idx].push(x);
        }
        Ok(())
    }
}

/// `j_{ℓk}` with the default limits.
pub fn dirichlet_zero(ell: u32, k: u32) -> Result<f64> {
    BesselZeroTable::new(BoundaryCondition::Dirichlet).zero(ell, k)
}

/// `κ_{ℓk}` with the default limits.
pub fn neumann_zero(ell: u32, k: u32) -> Result<f64> {
    BesselZeroTable::new(BoundaryCondition::Neumann).zero(ell, k)
}

fn l_factor(ell: u32) -> f64 {
    let l = f64::from(ell);
    l * (l + 1.0)
}

/// Extend Dirichlet row ℓ to `count` roots, bracketing each by interlacing
/// with row ℓ−1 (which is extended to `count + 1` first).
fn fill_dirichlet(rows: &mut Vec<Vec<f64>>, ell: u32, count: usize) -> Result<()> {
    let idx = ell as usize;
    if rows.len() <= idx {
        rows.resize(idx + 1, Vec::new());
    }
    let have = rows[idx].len();
    if have >= count {
        return Ok(());
    }
    if ell == 0 {
        for k in have + 1..=count {
            rows[0].push(k as f64 * PI);
        }
        return Ok(());
    }
    fill_dirichlet(rows, ell - 1, count + 1)?;
    for k in have + 1..=count {
        let lo = rows[idx - 1][k - 1];
        let hi = rows[idx - 1][k];
        let guess = mcmahon_dirichlet(ell, k as u32);
        let x = safeguarded_newton(
            |x| (j_unchecked(ell, x), j_deriv_unchecked(ell, x)),
            lo,
            hi,
            guess,
            "Dirichlet",
        )?;
        rows[idx].push(x);
    }
    Ok(())
}

fn mcmahon_dirichlet(ell: u32, k: u32) -> f64 {
    let beta = (f64::from(k) + 0.5 * f64::from(ell)) * PI;
    let mu = (2.0 * f64::from(ell) + 1.0).powi(2);
    let b8 = 8.0 * beta;
    beta - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8.powi(3))
}

fn mcmahon_neumann(ell: u32, k: u32) -> f64 {
    let beta = (f64::from(k) + 0.5 * f64::from(ell) - 0.5) * PI;
    let mu = (2.0 * f64::from(ell) + 1.0).powi(2);
    beta - (mu + 3.0) / (8.0 * beta)
}

/// Newton iteration kept inside a sign-changing bracket, bisecting whenever
/// the Newton step would leave it.
fn safeguarded_newton(
    f: impl Fn(f64) -> (f64, f64),
    mut lo: f64,
    mut hi: f64,
    guess: f64,
    what: &'static str,
) -> Result<f64> {
    let flo = f(lo).0;
    let fhi = f(hi).0;
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::Bracketing {
            what: what.into(),
            lo,
            hi,
        });
    }
    let lo_sign = flo.signum();
    let mut x = if guess > lo && guess < hi {
        guess
    } else {
        0.5 * (lo + hi)
    };
    for _ in 0..MAX_ITER {
        let (fx, dfx) = f(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if fx.signum() == lo_sign {
            lo = x;
        } else {
            hi = x;
        }
        let newton = x - fx / dfx;
        let next = if dfx != 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        let tol = 2.0 * f64::EPSILON * next.abs();
        if (next - x).abs() <= tol || hi - lo <= tol {
            return Ok(next);
        }
        x = next;
    }
    Err(Error::NonConvergence(format!(
        "{what} root in ({lo}, {hi}) after {MAX_ITER} iterations"
    )))
}
