use alloc::format;
#[allow(unused_imports)] // shadowed by inherent methods when std is linked
use num_traits::Float;

use crate::{Error, Result};

pub const DEFAULT_ELL_MAX: u32 = 32;
pub const DEFAULT_K_MAX: u32 = 64;

/// Below this argument the ascending series is used for every order.
const SERIES_SWITCH: f64 = 0.5;
/// Extra orders above `ℓ` at which the downward (Miller) recurrence starts.
const MILLER_PAD: u32 = 40;
const RESCALE_ABOVE: f64 = 1e250;

/// Order and zero-count limits shared by the function evaluators and the
/// zero tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Limits {
    pub ell_max: u32,
    pub k_max: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            ell_max: DEFAULT_ELL_MAX,
            k_max: DEFAULT_K_MAX,
        }
    }
}

impl Limits {
    pub(crate) fn check_ell(&self, ell: u32) -> Result<()> {
        if ell > self.ell_max {
            return Err(Error::Domain(format!(
                "order l = {ell} exceeds the configured l_max = {}",
                self.ell_max
            )));
        }
        Ok(())
    }

    pub(crate) fn check_k(&self, k: u32) -> Result<()> {
        if k == 0 || k > self.k_max {
            return Err(Error::Domain(format!("zero index k = {k} outside 1..={}", self.k_max)));
        }
        Ok(())
    }

    fn check_arg(&self, ell: u32, x: f64) -> Result<()> {
        self.check_ell(ell)?;
        if !x.is_finite() || x < 0.0 {
            return Err(Error::Domain(format!("argument x = {x} must be finite and >= 0")));
        }
        Ok(())
    }

    /// `j_ℓ(x)` subject to these limits.
    pub fn j(&self, ell: u32, x: f64) -> Result<f64> {
        self.check_arg(ell, x)?;
        Ok(j_unchecked(ell, x))
    }

    /// `j′_ℓ(x)` subject to these limits.
    pub fn j_deriv(&self, ell: u32, x: f64) -> Result<f64> {
        self.check_arg(ell, x)?;
        Ok(j_deriv_unchecked(ell, x))
    }
}

/// Spherical Bessel function of the first kind `j_ℓ(x)` for `ℓ ≤ 32`.
pub fn sph_bessel_j(ell: u32, x: f64) -> Result<f64> {
    Limits::default().j(ell, x)
}

/// Derivative `j′_ℓ(x)` for `ℓ ≤ 32`.
pub fn sph_bessel_j_deriv(ell: u32, x: f64) -> Result<f64> {
    Limits::default().j_deriv(ell, x)
}

/// `d/dx [x j_ℓ(x)]`, whose zeros give the Neumann spectrum.
pub fn riccati_deriv(ell: u32, x: f64) -> f64 {
    if ell == 0 {
        return x.cos();
    }
    x * j_unchecked(ell - 1, x) - f64::from(ell) * j_unchecked(ell, x)
}

/// `d²/dx² [x j_ℓ(x)] = (ℓ(ℓ+1)/x² − 1) x j_ℓ(x)`.
pub fn riccati_second_deriv(ell: u32, x: f64) -> f64 {
    let l = f64::from(ell);
    if x == 0.0 {
        return 0.0;
    }
    (l * (l + 1.0) / (x * x) - 1.0) * x * j_unchecked(ell, x)
}

pub(crate) fn j_unchecked(ell: u32, x: f64) -> f64 {
    if x == 0.0 {
        return if ell == 0 { 1.0 } else { 0.0 };
    }
    if x < SERIES_SWITCH {
        return series(ell, x);
    }
    match ell {
        0 => j0(x),
        1 => j1(x),
        2 => j2(x),
        _ if x > f64::from(ell) => upward(ell, x),
        _ => miller(ell, x),
    }
}

pub(crate) fn j_deriv_unchecked(ell: u32, x: f64) -> f64 {
    if x == 0.0 {
        return if ell == 1 { 1.0 / 3.0 } else { 0.0 };
    }
    if ell == 0 {
        return -j_unchecked(1, x);
    }
    j_unchecked(ell - 1, x) - f64::from(ell + 1) / x * j_unchecked(ell, x)
}

fn j0(x: f64) -> f64 {
    x.sin() / x
}

fn j1(x: f64) -> f64 {
    let (s, c) = x.sin_cos();
    (s - x * c) / (x * x)
}

fn j2(x: f64) -> f64 {
    let (s, c) = x.sin_cos();
    let x2 = x * x;
    ((3.0 - x2) * s - 3.0 * x * c) / (x2 * x)
}

/// Ascending series `x^ℓ/(2ℓ+1)!! Σ_k (−x²/2)^k / (k! (2ℓ+3)…(2ℓ+2k+1))`.
fn series(ell: u32, x: f64) -> f64 {
    let mut prefactor = 1.0;
    for i in 1..=ell {
        prefactor *= x / f64::from(2 * i + 1);
    }
    let z = -0.5 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    let two_l = f64::from(2 * ell);
    for k in 1..200 {
        let kf = f64::from(k);
        term *= z / (kf * (two_l + 2.0 * kf + 1.0));
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    prefactor * sum
}

/// Upward recurrence from `j_1, j_2`; stable while `ℓ < x`.
fn upward(ell: u32, x: f64) -> f64 {
    let mut prev = j1(x);
    let mut cur = j2(x);
    for n in 2..ell {
        let next = f64::from(2 * n + 1) / x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Miller's downward recurrence normalized against `j_0` or `j_1`.
fn miller(ell: u32, x: f64) -> f64 {
    let start = ell + MILLER_PAD;
    let mut above = 0.0_f64;
    let mut cur = 1.0_f64;
    let mut at_ell = 0.0;
    let mut f1 = 0.0;
    for n in (1..=start).rev() {
        // cur = f_n, above = f_{n+1}
        let below = f64::from(2 * n + 1) / x * cur - above;
        above = cur;
        cur = below;
        // now cur = f_{n-1}, above = f_n
        if n == ell {
            at_ell = above;
        }
        if n - 1 == ell {
            at_ell = cur;
        }
        if n == 2 {
            f1 = cur;
        }
        if cur.abs() > RESCALE_ABOVE {
            cur /= RESCALE_ABOVE;
            above /= RESCALE_ABOVE;
            at_ell /= RESCALE_ABOVE;
            f1 /= RESCALE_ABOVE;
        }
    }
    let f0 = cur;
    let (e0, e1) = (j0(x), j1(x));
    if e0.abs() >= e1.abs() {
        at_ell * (e0 / f0)
    } else {
        at_ell * (e1 / f1)
    }
}
