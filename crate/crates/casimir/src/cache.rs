//! Zero tables for both boundary conditions plus the optional on-disk cache.
//!
//! Cache lines read `bc ℓ k value precision` with `bc` one of `D`/`N` and
//! floats at 17 significant digits.

use std::io::Write;
use std::path::Path;

use casimir_core::specfun::BesselZeroTable;
use casimir_core::BoundaryCondition;

use crate::error::{AppError, AppResult};

/// Environment variable holding the cache path.
pub const CACHE_ENV: &str = "CASIMIR_CACHE";

#[derive(Clone, Debug)]
pub struct ZeroTables {
    pub dirichlet: BesselZeroTable,
    pub neumann: BesselZeroTable,
}

impl Default for ZeroTables {
    fn default() -> Self {
        Self::new()
    }
}

impl ZeroTables {
    pub fn new() -> Self {
        Self {
            dirichlet: BesselZeroTable::new(BoundaryCondition::Dirichlet),
            neumann: BesselZeroTable::new(BoundaryCondition::Neumann),
        }
    }

    pub fn get(&mut self, bc: BoundaryCondition) -> &mut BesselZeroTable {
        match bc {
            BoundaryCondition::Dirichlet => &mut self.dirichlet,
            BoundaryCondition::Neumann => &mut self.neumann,
        }
    }

    pub fn len(&self) -> usize {
        self.dirichlet.entries().count() + self.neumann.entries().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Loads cached roots; each is re-verified before use. Entries stored at
    /// a looser precision than the tables require are skipped.
    pub fn load(&mut self, text: &str, origin: &Path) -> AppResult<usize> {
        let mut loaded = 0;
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |why: String| AppError::Validation(format!("{}:{}: {why}", origin.display(), i + 1));
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 5 {
                return Err(bad(format!(
                    "expected `bc l k value precision`, found {} fields",
                    f.len()
                )));
            }
            let bc =
                BoundaryCondition::parse(f[0]).ok_or_else(|| bad(format!("unknown boundary condition `{}`", f[0])))?;
            let ell: u32 = f[1].parse().map_err(|e| bad(format!("order: {e}")))?;
            let k: u32 = f[2].parse().map_err(|e| bad(format!("index: {e}")))?;
            let x: f64 = f[3].parse().map_err(|e| bad(format!("value: {e}")))?;
            let prec: f64 = f[4].parse().map_err(|e| bad(format!("precision: {e}")))?;
            let table = self.get(bc);
            if prec > table.precision() || table.get(ell, k).is_some() {
                continue;
            }
            table
                .insert_verified(ell, k, x)
                .map_err(|e| bad(format!("rejected root: {e}")))?;
            loaded += 1;
        }
        Ok(loaded)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for t in [&self.dirichlet, &self.neumann] {
            for (ell, k, x) in t.entries() {
                out.push_str(&format!("{} {ell} {k} {x:.16e} {:.16e}\n", t.bc().tag(), t.precision()));
            }
        }
        out
    }

    /// Replaces the cache file atomically.
    pub fn save(&self, path: &Path) -> AppResult<()> {
        let dir = path
            .parent()
            .filter(|p| !p.as_os_str().is_empty())
            .unwrap_or(Path::new("."));
        let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| AppError::io(dir, e))?;
        tmp.write_all(self.render().as_bytes())
            .map_err(|e| AppError::io(path, e))?;
        tmp.persist(path).map_err(|e| AppError::io(path, e.error))?;
        Ok(())
    }
}
