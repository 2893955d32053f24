use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use casimir::cache::{ZeroTables, CACHE_ENV};
use casimir::commands::{self, RunOptions};
use casimir::config::{Format, RunConfig};
use casimir::error::{AppError, AppResult};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "casimir",
    version,
    about = "Photon creation in a spherical cavity with an oscillating radius"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// TOML run configuration.
    #[arg(long, short)]
    config: PathBuf,
    /// Output file; stdout when absent. Overrides `out` in the configuration.
    #[arg(long, short)]
    out: Option<PathBuf>,
    /// Output format. Overrides `format` in the configuration.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Worker threads for independent rows and sweep points.
    #[arg(long, short, default_value_t = 1)]
    jobs: usize,
    /// File caching Bessel zeros between runs.
    #[arg(long, env = CACHE_ENV)]
    cache: Option<PathBuf>,
}

#[derive(Args)]
struct DynamicsFlags {
    /// Repeat at truncation 2P and report the relative change.
    #[arg(long)]
    converge: bool,
    /// Write Q_p(t) of row k0 to `<out>.timeseries.csv` (needs --out).
    #[arg(long)]
    dump_timeseries: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Mode frequencies of the block.
    #[command(long_about = "Mode frequencies of the (bc, ell) block.\n\nColumns: bc, ell, k, x (root), omega = x/a0.")]
    Spectrum(Common),
    /// Coupling matrices.
    #[command(long_about = "Coupling matrices of the block at truncation P.\n\n\
        Columns: bc, ell, P, matrix (g, s or eta), p, n (1-based), value.\n\
        JSON output adds the roots under `zeros`.")]
    Couplings(Common),
    /// Integrate the mode equations and report particle numbers.
    #[command(
        long_about = "Integrate the coupled mode equations for every initial mode and extract Bogoliubov coefficients.\n\n\
        Columns: n, omega, particles (<N_n> for one m), particles_all_m ((2l+1)<N_n>), row_normalization_error.\n\
        With --converge: particles_2P, rel_change."
    )]
    Evolve {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        flags: DynamicsFlags,
    },
    /// Multiple-scale prediction.
    #[command(
        long_about = "Multiple-scale (reduced system) prediction at slow time epsilon*t_f.\n\n\
        Columns: n, omega, particles_msa, growth_rate (NaN off the parametric resonance).\n\
        JSON output adds the detected resonances under `resonances`."
    )]
    Msa(Common),
    /// Full integration against the multiple-scale prediction.
    #[command(long_about = "Full integration against the multiple-scale prediction.\n\n\
        Columns: n, omega, particles_ode, particles_msa, rel_error (ode/msa - 1), row_normalization_error.\n\
        With --converge: particles_ode_2P, rel_change.")]
    Compare {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        flags: DynamicsFlags,
    },
    /// Out-vacuum in Fock space and its singlet checks.
    #[command(
        long_about = "Build the in-vacuum in the out Fock basis for the resonant mode and verify it.\n\n\
        Columns: quantity, value. Quantities include C, normalization, lz_norm, l2_norm, n_total,\n\
        n_total_expected and per-m occupancies. For ell = 1 the state is written to `<out>.state.json`."
    )]
    Singlet(Common),
    /// Parameter sweep of the compare run.
    #[command(
        long_about = "Sweep one field of the configuration ([sweep] section) and compare at each point.\n\n\
        Columns: <field>, omega_drive, n (resonant mode or k0), particles_ode, particles_msa, rel_error,\n\
        normalization_drift."
    )]
    Sweep(Common),
}

impl Command {
    fn parts(&self) -> (&'static str, &Common, RunOptions) {
        let flags = |f: &DynamicsFlags| RunOptions {
            converge: f.converge,
            dump_timeseries: f.dump_timeseries,
        };
        match self {
            Command::Spectrum(c) => ("spectrum", c, RunOptions::default()),
            Command::Couplings(c) => ("couplings", c, RunOptions::default()),
            Command::Evolve { common, flags: f } => ("evolve", common, flags(f)),
            Command::Msa(c) => ("msa", c, RunOptions::default()),
            Command::Compare { common, flags: f } => ("compare", common, flags(f)),
            Command::Singlet(c) => ("singlet", c, RunOptions::default()),
            Command::Sweep(c) => ("sweep", c, RunOptions::default()),
        }
    }
}

fn sibling(out: &Path, suffix: &str) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".");
    s.push(suffix);
    PathBuf::from(s)
}

fn write(path: &Path, text: &str) -> AppResult<()> {
    fs::write(path, text).map_err(|e| AppError::io(path, e))
}

fn run(cli: Cli) -> AppResult<()> {
    let (name, common, opts) = cli.command.parts();
    let text = fs::read_to_string(&common.config).map_err(|e| AppError::io(&common.config, e))?;
    let mut config = RunConfig::parse(&text)?;
    if let Some(out) = &common.out {
        config.out = Some(out.clone());
    }
    if let Some(f) = common.format {
        config.format = f;
    }
    if opts.dump_timeseries && config.out.is_none() {
        return Err(AppError::Validation(
            "--dump-timeseries needs an output file (--out or `out`)".into(),
        ));
    }

    let mut tables = ZeroTables::new();
    if let Some(path) = common.cache.as_deref().filter(|p| p.exists()) {
        let text = fs::read_to_string(path).map_err(|e| AppError::io(path, e))?;
        tables.load(&text, path)?;
    }
    let cached = tables.len();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(common.jobs.max(1))
        .build()
        .map_err(|e| AppError::Validation(format!("thread pool: {e}")))?;
    let format = config.format;
    let echo = config.clone();
    let report = pool.install(|| commands::run(name, config, &mut tables, opts))?;
    for note in report.notes.iter().filter(|n| n.starts_with("warning")) {
        eprintln!("casimir: {note}");
    }

    let body = report.render(format, &echo);
    match &echo.out {
        Some(out) => {
            write(out, &body)?;
            write(&sibling(out, "config.toml"), &echo.to_toml())?;
            for (suffix, content) in &report.attachments {
                write(&sibling(out, suffix), content)?;
            }
        }
        None => print!("{body}"),
    }
    if let Some(path) = &common.cache {
        if tables.len() != cached || !path.exists() {
            tables.save(path)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("casimir: error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
