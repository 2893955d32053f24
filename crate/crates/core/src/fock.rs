//! Truncated Fock space of the `2ℓ+1` degenerate modes of a resonant
//! `(N, ℓ)` level, angular momentum operators, and the out-basis expansion
//! of the in-vacuum.
//!
//! Basis states are ordered lexicographically in `(n_ℓ, …, n_{−ℓ})`; for the
//! triplet this is `(n₊₁, n₀, n₋₁)`. Every mode is cut off at `n_max`.
//! Operators are stored in compressed sparse rows.

use alloc::{collections::BTreeMap, format, vec, vec::Vec};
#[allow(unused_imports)] // shadowed by inherent methods when std is linked
use num_traits::Float;

use crate::{Complex64, Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Largest basis the constructors accept.
pub const MAX_DIM: usize = 4_000_000;

/// Sectors within this many quanta of the cutoff are excluded from singlet checks.
pub const DEFAULT_GUARD: u32 = 2;

/// `C⁺_{ℓm} = √((ℓ−m)(ℓ+m+1))`.
pub fn c_plus(ell: i32, m: i32) -> f64 {
    f64::from((ell - m) * (ell + m + 1)).max(0.0).sqrt()
}

/// `C⁻_{ℓm} = √((ℓ+m)(ℓ−m+1))`.
pub fn c_minus(ell: i32, m: i32) -> f64 {
    f64::from((ell + m) * (ell - m + 1)).max(0.0).sqrt()
}

/// `C = −tanh(γ ε t_f)`.
pub fn coefficient_c(gamma: f64, eps: f64, t_f: f64) -> f64 {
    -(gamma * eps * t_f).tanh()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockSpace {
    ell: u32,
    n_max: u32,
    strides: Vec<usize>,
    dim: usize,
}

impl FockSpace {
    pub fn new(ell: u32, n_max: u32) -> Result<Self> {
        if n_max < 2 {
            return Err(Error::Config(format!("n_max = {n_max}; at least 2 is required")));
        }
        let modes = 2 * ell as usize + 1;
        let base = n_max as usize + 1;
        let mut strides = vec![1usize; modes];
        let mut dim = 1usize;
        for j in (0..modes).rev() {
            strides[j] = dim;
            dim = dim.checked_mul(base).filter(|&d| d <= MAX_DIM).ok_or_else(|| {
                Error::Domain(format!(
                    "Fock basis for l={ell}, n_max={n_max} exceeds {MAX_DIM} states"
                ))
            })?;
        }
        Ok(Self {
            ell,
            n_max,
            strides,
            dim,
        })
    }

    /// The `ℓ = 1` triplet.
    pub fn triplet(n_max: u32) -> Result<Self> {
        Self::new(1, n_max)
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Magnetic numbers in basis order, `ℓ` down to `−ℓ`.
    pub fn magnetic(&self) -> impl Iterator<Item = i32> + Clone {
        let l = self.ell as i32;
        (-l..=l).rev()
    }

    fn slot(&self, m: i32) -> usize {
        (self.ell as i32 - m) as usize
    }

    /// Occupation of mode `m` in basis state `index`.
    pub fn occ(&self, index: usize, m: i32) -> u32 {
        ((index / self.strides[self.slot(m)]) % (self.n_max as usize + 1)) as u32
    }

    /// Occupations in basis order.
    pub fn occupation(&self, index: usize) -> Vec<u32> {
        self.magnetic().map(|m| self.occ(index, m)).collect()
    }

    pub fn index(&self, occupation: &[u32]) -> Option<usize> {
        if occupation.len() != self.strides.len() || occupation.iter().any(|&n| n > self.n_max) {
            return None;
        }
        Some(occupation.iter().zip(&self.strides).map(|(&n, s)| n as usize * s).sum())
    }

    pub fn total(&self, index: usize) -> u32 {
        self.magnetic().map(|m| self.occ(index, m)).sum()
    }

    /// No mode at the cutoff.
    pub fn is_interior(&self, index: usize) -> bool {
        self.magnetic().all(|m| self.occ(index, m) < self.n_max)
    }

    /// Index after `a†_p a_q`, with the matrix element, or `None` when it vanishes
    /// or leaves the space.
    fn hop(&self, index: usize, p: i32, q: i32) -> Option<(usize, f64)> {
        let nq = self.occ(index, q);
        if p == q {
            return (nq > 0).then_some((index, f64::from(nq)));
        }
        let np = self.occ(index, p);
        if nq == 0 || np == self.n_max {
            return None;
        }
        let to = index - self.strides[self.slot(q)] + self.strides[self.slot(p)];
        Some((to, (f64::from(nq) * f64::from(np + 1)).sqrt()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorLabel {
    Lz,
    LPlus,
    LMinus,
    L2,
    Ntot,
    Number(i32),
    AOut(i32),
    AOutDag(i32),
    AIn(i32),
    Derived,
}

/// Compressed-sparse-row operator over a [`FockSpace`] basis.
#[derive(Clone, Debug)]
pub struct SparseOperator {
    pub label: OperatorLabel,
    dim: usize,
    row_ptr: Vec<usize>,
    cols: Vec<usize>,
    vals: Vec<Complex64>,
}

impl SparseOperator {
    /// Builds from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets(label: OperatorLabel, dim: usize, mut t: Vec<(usize, usize, Complex64)>) -> Self {
        t.sort_by_key(|&(r, c, _)| (r, c));
        let mut row_ptr = vec![0usize; dim + 1];
        let mut cols: Vec<usize> = Vec::with_capacity(t.len());
        let mut vals: Vec<Complex64> = Vec::with_capacity(t.len());
        let mut last: Option<(usize, usize)> = None;
        for (r, c, v) in t {
            if last == Some((r, c)) {
                *vals.last_mut().unwrap() += v;
            } else {
                cols.push(c);
                vals.push(v);
                row_ptr[r + 1] += 1;
                last = Some((r, c));
            }
        }
        for r in 0..dim {
            row_ptr[r + 1] += row_ptr[r];
        }
        Self {
            label,
            dim,
            row_ptr,
            cols,
            vals,
        }
    }

    fn from_columns(
        label: OperatorLabel,
        space: &FockSpace,
        mut col: impl FnMut(usize, &mut Vec<(usize, Complex64)>),
    ) -> Self {
        let mut t = Vec::new();
        let mut buf = Vec::new();
        for j in 0..space.dim() {
            buf.clear();
            col(j, &mut buf);
            t.extend(buf.iter().map(|&(i, v)| (i, j, v)));
        }
        Self::from_triplets(label, space.dim(), t)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.vals.len()
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = (usize, Complex64)> + '_ {
        let r = self.row_ptr[i]..self.row_ptr[i + 1];
        self.cols[r.clone()].iter().copied().zip(self.vals[r].iter().copied())
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.row(i).find(|&(c, _)| c == j).map_or(ZERO, |(_, v)| v)
    }

    pub fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        (0..self.dim)
            .map(|i| self.row(i).map(|(c, v)| v * x[c]).sum())
            .collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut t = Vec::new();
        for i in 0..self.dim {
            let mut acc: BTreeMap<usize, Complex64> = BTreeMap::new();
            for (k, a) in self.row(i) {
                for (j, b) in other.row(k) {
                    *acc.entry(j).or_insert(ZERO) += a * b;
                }
            }
            t.extend(acc.into_iter().map(|(j, v)| (i, j, v)));
        }
        Self::from_triplets(OperatorLabel::Derived, self.dim, t)
    }

    /// `self + c·other`.
    pub fn add_scaled(&self, other: &Self, c: Complex64) -> Self {
        let mut t: Vec<_> = (0..self.dim)
            .flat_map(|i| self.row(i).map(move |(j, v)| (i, j, v)))
            .collect();
        t.extend((0..other.dim).flat_map(|i| other.row(i).map(move |(j, v)| (i, j, c * v))));
        Self::from_triplets(OperatorLabel::Derived, self.dim, t)
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        let mut out = self.clone();
        out.vals.iter_mut().for_each(|v| *v *= c);
        out.label = OperatorLabel::Derived;
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).add_scaled(&other.mul(self), Complex64::new(-1.0, 0.0))
    }

    pub fn with_label(mut self, label: OperatorLabel) -> Self {
        self.label = label;
        self
    }

    /// Largest `|M_ij|` over entries with both indices accepted by `keep`.
    pub fn max_abs_where(&self, keep: impl Fn(usize) -> bool) -> f64 {
        (0..self.dim)
            .filter(|&i| keep(i))
            .flat_map(|i| self.row(i))
            .filter(|&(j, _)| keep(j))
            .fold(0.0, |m, (_, v)| m.max(v.norm()))
    }
}

/// Bogoliubov coefficients `a_out,m = β a_in,m + (−1)^m α* a†_in,−m`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InOutRelation {
    pub alpha: Complex64,
    pub beta: Complex64,
}

impl InOutRelation {
    /// From the resonant mode's amplitudes, `α = √(2ω) A`, `β = √(2ω) B`.
    pub fn from_amplitudes(a: Complex64, b: Complex64, omega: f64) -> Self {
        let s = (2.0 * omega).sqrt();
        Self {
            alpha: a * s,
            beta: b * s,
        }
    }

    /// The relation whose in-vacuum has ratio `C = α*/β*`, with `β` real.
    pub fn from_c(c: Complex64) -> Result<Self> {
        if !(c.norm() < 1.0) {
            return Err(Error::Precondition(format!("|C| = {} must be below 1", c.norm())));
        }
        let beta = 1.0 / (1.0 - c.norm_sqr()).sqrt();
        Ok(Self {
            alpha: c.conj() * beta,
            beta: Complex64::new(beta, 0.0),
        })
    }

    pub fn ratio(&self) -> Complex64 {
        self.alpha.conj() / self.beta.conj()
    }

    /// `|β|² − |α|² − 1`.
    pub fn unitarity_defect(&self) -> f64 {
        self.beta.norm_sqr() - self.alpha.norm_sqr() - 1.0
    }
}

fn sign(m: i32) -> f64 {
    if m.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

#[derive(Clone, Debug)]
pub struct OperatorSet {
    pub space: FockSpace,
    pub lz: SparseOperator,
    pub lplus: SparseOperator,
    pub lminus: SparseOperator,
    pub l2: SparseOperator,
    pub ntot: SparseOperator,
    /// Number operators in basis order (`m = ℓ … −ℓ`).
    pub number: Vec<SparseOperator>,
    /// Out-mode annihilators in basis order.
    pub a_out: Vec<SparseOperator>,
}

/// Operators on the triplet truncated at `n_max`.
pub fn build_operators(n_max: u32) -> Result<OperatorSet> {
    Ok(OperatorSet::new(FockSpace::triplet(n_max)?))
}

impl OperatorSet {
    pub fn new(space: FockSpace) -> Self {
        let l = space.ell() as i32;
        let c1 = |v: f64| Complex64::new(v, 0.0);
        let diag = |label, f: &dyn Fn(usize) -> f64| {
            SparseOperator::from_columns(label, &space, |j, out| {
                let v = f(j);
                if v != 0.0 {
                    out.push((j, c1(v)));
                }
            })
        };
        let lz = diag(OperatorLabel::Lz, &|j| {
            space
                .magnetic()
                .map(|m| f64::from(m) * f64::from(space.occ(j, m)))
                .sum()
        });
        let ntot = diag(OperatorLabel::Ntot, &|j| f64::from(space.total(j)));
        let number = space
            .magnetic()
            .map(|m| diag(OperatorLabel::Number(m), &|j| f64::from(space.occ(j, m))))
            .collect();
        let lplus = SparseOperator::from_columns(OperatorLabel::LPlus, &space, |j, out| {
            for m in -l..l {
                if let Some((i, v)) = space.hop(j, m + 1, m) {
                    out.push((i, c1(c_plus(l, m) * v)));
                }
            }
        });
        let lminus = SparseOperator::from_columns(OperatorLabel::LMinus, &space, |j, out| {
            for m in -l + 1..=l {
                if let Some((i, v)) = space.hop(j, m - 1, m) {
                    out.push((i, c1(c_minus(l, m) * v)));
                }
            }
        });
        let l2 = lminus
            .mul(&lplus)
            .add_scaled(&lz.mul(&lz), c1(1.0))
            .add_scaled(&lz, c1(1.0))
            .with_label(OperatorLabel::L2);
        let a_out = space.magnetic().map(|m| Self::ladder(&space, m, false)).collect();
        Self {
            space,
            lz,
            lplus,
            lminus,
            l2,
            ntot,
            number,
            a_out,
        }
    }

    fn ladder(space: &FockSpace, m: i32, dagger: bool) -> SparseOperator {
        let label = if dagger {
            OperatorLabel::AOutDag(m)
        } else {
            OperatorLabel::AOut(m)
        };
        let stride = space.strides[space.slot(m)];
        SparseOperator::from_columns(label, space, |j, out| {
            let n = space.occ(j, m);
            if dagger && n < space.n_max() {
                out.push((j + stride, Complex64::new(f64::from(n + 1).sqrt(), 0.0)));
            } else if !dagger && n > 0 {
                out.push((j - stride, Complex64::new(f64::from(n).sqrt(), 0.0)));
            }
        })
    }

    pub fn a_out_dag(&self, m: i32) -> SparseOperator {
        Self::ladder(&self.space, m, true)
    }

    /// `a_in,m = β* a_out,m − (−1)^m α* a†_out,−m`, truncated at the cutoff.
    pub fn a_in(&self, m: i32, rel: &InOutRelation) -> SparseOperator {
        let a = &self.a_out[self.space.slot(m)];
        let b = self.a_out_dag(-m);
        a.scaled(rel.beta.conj())
            .add_scaled(&b, -rel.alpha.conj() * sign(m))
            .with_label(OperatorLabel::AIn(m))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FockState {
    pub space: FockSpace,
    pub amp: Vec<Complex64>,
}

impl FockState {
    pub fn vacuum(space: FockSpace) -> Self {
        let mut amp = vec![ZERO; space.dim()];
        amp[0] = Complex64::new(1.0, 0.0);
        Self { space, amp }
    }

    /// Normalized number state with the given occupations (basis order).
    pub fn number_state(space: FockSpace, occupation: &[u32]) -> Result<Self> {
        let i = space
            .index(occupation)
            .ok_or_else(|| Error::Config(format!("occupation {occupation:?} is outside the space")))?;
        let mut amp = vec![ZERO; space.dim()];
        amp[i] = Complex64::new(1.0, 0.0);
        Ok(Self { space, amp })
    }

    pub fn norm(&self) -> f64 {
        norm(&self.amp)
    }

    pub fn normalize(&mut self) -> Result<f64> {
        let n = self.norm();
        if !(n > 0.0) {
            return Err(Error::Precondition("cannot normalize the zero state".into()));
        }
        self.amp.iter_mut().for_each(|a| *a /= n);
        Ok(n)
    }

    pub fn amplitude(&self, occupation: &[u32]) -> Complex64 {
        self.space.index(occupation).map_or(ZERO, |i| self.amp[i])
    }

    pub fn expectation(&self, op: &SparseOperator) -> Complex64 {
        op.apply(&self.amp)
            .iter()
            .zip(&self.amp)
            .map(|(o, a)| a.conj() * o)
            .sum()
    }

    /// Nonzero amplitudes only where `n_m = n_{−m}` for every `m` and `n₀` is even.
    pub fn obeys_pairing(&self) -> bool {
        let s = &self.space;
        self.amp.iter().enumerate().all(|(i, a)| {
            *a == ZERO || (s.occ(i, 0).is_multiple_of(2) && s.magnetic().all(|m| s.occ(i, m) == s.occ(i, -m)))
        })
    }

    /// Copy with sectors of total occupation above `max_total` removed.
    pub fn project_total(&self, max_total: u32) -> Self {
        let amp = self
            .amp
            .iter()
            .enumerate()
            .map(|(i, &a)| if self.space.total(i) <= max_total { a } else { ZERO })
            .collect();
        Self {
            space: self.space.clone(),
            amp,
        }
    }

    /// Amplitudes above `threshold` in the dump layout; triplet only.
    pub fn dump(&self, c: f64, threshold: f64) -> Result<StateDump> {
        if self.space.ell() != 1 {
            return Err(Error::Precondition(
                "the state dump layout covers the l=1 triplet only".into(),
            ));
        }
        let entries = self
            .amp
            .iter()
            .enumerate()
            .filter(|(_, a)| a.norm() > threshold)
            .map(|(i, a)| DumpEntry {
                n_plus: self.space.occ(i, 1),
                n_zero: self.space.occ(i, 0),
                n_minus: self.space.occ(i, -1),
                re: a.re,
                im: a.im,
            })
            .collect();
        Ok(StateDump {
            n_max: self.space.n_max(),
            c,
            entries,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct StateDump {
    pub n_max: u32,
    #[cfg_attr(feature = "serde", serde(rename = "C"))]
    pub c: f64,
    pub entries: Vec<DumpEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DumpEntry {
    pub n_plus: u32,
    pub n_zero: u32,
    pub n_minus: u32,
    pub re: f64,
    pub im: f64,
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

/// In-vacuum expanded in the out basis.
#[derive(Clone, Debug)]
pub struct OutVacuum {
    pub state: FockState,
    pub relation: InOutRelation,
    /// Normalization constant: amplitude of `|0_out⟩` after normalizing.
    pub normalization: f64,
    /// `max_m ‖a_in,m ψ‖` with creation operators allowed past the cutoff.
    pub residual: f64,
}

/// Residual above which the cutoff is reported as too small.
pub const DEFAULT_MAX_RESIDUAL: f64 = 1e-2;

/// Triplet out-vacuum for a real ratio `C`.
pub fn build_out_vacuum(c: f64, n_max: u32) -> Result<OutVacuum> {
    build_out_vacuum_in(
        FockSpace::triplet(n_max)?,
        InOutRelation::from_c(Complex64::new(c, 0.0))?,
        DEFAULT_MAX_RESIDUAL,
    )
}

/// Solves `a_in,m ψ = 0` for every `m` by recursion in the total occupation.
///
/// Each amplitude follows from the condition on the state with one quantum
/// fewer: the `m = 0` condition lowers `n₀` by two, the `±m` conditions
/// remove one quantum from each partner.
pub fn build_out_vacuum_in(space: FockSpace, relation: InOutRelation, max_residual: f64) -> Result<OutVacuum> {
    if relation.beta.norm() == 0.0 {
        return Err(Error::Precondition("beta = 0 has no normalizable in-vacuum".into()));
    }
    let c = relation.ratio();
    if !(c.norm() < 1.0) {
        return Err(Error::Precondition(format!("|C| = {} must be below 1", c.norm())));
    }
    let mut amp = vec![ZERO; space.dim()];
    amp[0] = Complex64::new(1.0, 0.0);
    let l = space.ell() as i32;
    let stride = |m: i32| space.strides[space.slot(m)];
    // Lexicographic order visits every predecessor first.
    for i in 1..space.dim() {
        let n0 = space.occ(i, 0);
        amp[i] = if n0 > 0 {
            if n0 == 1 {
                ZERO
            } else {
                c * amp[i - 2 * stride(0)] * (f64::from(n0 - 1) / f64::from(n0)).sqrt()
            }
        } else {
            let m = (1..=l).flat_map(|k| [k, -k]).find(|&m| space.occ(i, m) > 0).unwrap();
            let (nm, np) = (space.occ(i, m), space.occ(i, -m));
            if np == 0 {
                ZERO
            } else {
                c * amp[i - stride(m) - stride(-m)] * sign(m) * (f64::from(np) / f64::from(nm)).sqrt()
            }
        };
    }
    let mut state = FockState { space, amp };
    let scale = state.normalize()?;
    let residual = untruncated_residual(&state, &relation);
    if !(residual <= max_residual) {
        return Err(Error::NonConvergence(format!(
            "in-vacuum residual {residual:.3e} at n_max = {} exceeds {max_residual:.1e}; increase n_max",
            state.space.n_max()
        )));
    }
    Ok(OutVacuum {
        state,
        relation,
        normalization: 1.0 / scale,
        residual,
    })
}

/// `max_m ‖a_in,m ψ‖` evaluated with room for one quantum past the cutoff.
pub fn untruncated_residual(state: &FockState, rel: &InOutRelation) -> f64 {
    let s = &state.space;
    let Ok(big) = FockSpace::new(s.ell(), s.n_max() + 1) else {
        return f64::INFINITY;
    };
    let mut out = vec![ZERO; big.dim()];
    s.magnetic()
        .map(|m| {
            out.iter_mut().for_each(|v| *v = ZERO);
            for (i, &a) in state.amp.iter().enumerate() {
                if a == ZERO {
                    continue;
                }
                let occ = s.occupation(i);
                let j = big.index(&occ).unwrap();
                let nm = s.occ(i, m);
                if nm > 0 {
                    out[j - big.strides[big.slot(m)]] += rel.beta.conj() * a * f64::from(nm).sqrt();
                }
                let np = s.occ(i, -m);
                out[j + big.strides[big.slot(-m)]] -= rel.alpha.conj() * sign(m) * a * f64::from(np + 1).sqrt();
            }
            norm(&out)
        })
        .fold(0.0, f64::max)
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SingletReport {
    pub norm: f64,
    pub guard: u32,
    /// Largest total occupation included in the guarded norms.
    pub max_total: u32,
    pub lz_norm: f64,
    pub l2_norm: f64,
    /// `⟨Lx⟩, ⟨Ly⟩, ⟨Lz⟩` on the full state.
    pub l_mean: [f64; 3],
    pub n_total: f64,
    /// `⟨n_m⟩` in basis order.
    pub occupancy: Vec<f64>,
    /// `max_m |⟨n_m⟩ − ⟨n_{−m}⟩|`.
    pub occupancy_asymmetry: f64,
}

pub fn verify_singlet(state: &FockState) -> SingletReport {
    verify_singlet_with(&OperatorSet::new(state.space.clone()), state, DEFAULT_GUARD)
}

pub fn verify_singlet_with(ops: &OperatorSet, state: &FockState, guard: u32) -> SingletReport {
    let max_total = state.space.n_max().saturating_sub(guard);
    let inner = state.project_total(max_total);
    let lp = state.expectation(&ops.lplus);
    let occupancy: Vec<f64> = ops.number.iter().map(|n| state.expectation(n).re).collect();
    let last = occupancy.len() - 1;
    let occupancy_asymmetry = (0..occupancy.len())
        .map(|j| (occupancy[j] - occupancy[last - j]).abs())
        .fold(0.0, f64::max);
    SingletReport {
        norm: state.norm(),
        guard,
        max_total,
        lz_norm: norm(&ops.lz.apply(&inner.amp)),
        l2_norm: norm(&ops.l2.apply(&inner.amp)),
        l_mean: [lp.re, lp.im, state.expectation(&ops.lz).re],
        n_total: state.expectation(&ops.ntot).re,
        occupancy,
        occupancy_asymmetry,
    }
}
