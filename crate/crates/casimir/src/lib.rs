//! Command-line driver for `casimir-core`: TOML configuration, the zero
//! cache, CSV/JSON output and the subcommands.

pub mod cache;
pub mod commands;
pub mod config;
pub mod error;
pub mod output;

pub use error::{AppError, AppResult};
