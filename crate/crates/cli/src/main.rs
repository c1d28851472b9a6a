//! `bistable`: sweeps, equilibrium tables, claim checks and Monte Carlo
//! estimates for bistable classical and quantum games.
//!
//! Settings are taken from the JSON document given with `--config`, then
//! overridden by command-line flags. Exit codes: 0 success, 2 configuration
//! error, 3 numeric domain error, 4 quasi-probability refusal.

use std::io::{ErrorKind, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bistable_core::io::commands::{
    cmd_classical_utility, cmd_delta_m, cmd_ne, cmd_quantum, cmd_simulate, cmd_verify_claims, Output,
};
use bistable_core::io::config::{Format, RunConfig};
use bistable_core::Error;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "bistable", version, about = "Bistable-probability classical and quantum 2x2 games")]
struct Cli {
    /// JSON run configuration.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Output file; standard output when absent.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Monte Carlo seed.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,
    /// Worker threads for parallel sweeps.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// Classical utilities and outcome probabilities over a sweep grid.
    ClassicalUtility,
    /// Equilibria and candidate conditions per scenario.
    Ne,
    /// Motivation to cooperate over bistability and benefit to cost ratio.
    DeltaM,
    /// Quantum utilities over strategy angles.
    Quantum,
    /// Recompute every registered claim and report verdicts.
    VerifyClaims,
    /// Monte Carlo estimate of outcome frequencies and utilities.
    Simulate,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Config { .. } => 2,
        Error::QuasiProbability { .. } => 4,
        Error::Domain { .. } | Error::Degenerate(_) | Error::OutOfScope(_) => 3,
    }
}

fn write(path: &Path, contents: &str) -> Result<(), Error> {
    std::fs::write(path, contents).map_err(|e| Error::Config {
        field: "--out".into(),
        message: format!("{}: {e}", path.display()),
    })
}

/// A closed pipe (`bistable ... | head`) ends output quietly.
fn emit(mut w: impl Write, contents: &str) -> Result<(), Error> {
    match w.write_all(contents.as_bytes()).and_then(|()| w.flush()) {
        Err(e) if e.kind() != ErrorKind::BrokenPipe => Err(Error::Config {
            field: "--out".into(),
            message: e.to_string(),
        }),
        _ => Ok(()),
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    let mut cfg = match &cli.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(Error::Config {
                field: "--threads".into(),
                message: "must be at least 1".into(),
            });
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::Config {
                field: "--threads".into(),
                message: e.to_string(),
            })?;
    }
    let default_format = match cli.command {
        Command::Ne | Command::VerifyClaims | Command::Simulate => Format::Json,
        _ => Format::Csv,
    };
    let format = cli
        .format
        .map(Format::from)
        .or(cfg.output.format)
        .unwrap_or(default_format);
    let out = cli.out.clone().or_else(|| cfg.output.path.clone());

    let output: Output = match cli.command {
        Command::ClassicalUtility => cmd_classical_utility(&cfg)?,
        Command::Ne => cmd_ne(&cfg)?,
        Command::DeltaM => cmd_delta_m(&cfg)?,
        Command::Quantum => cmd_quantum(&cfg)?,
        Command::VerifyClaims => cmd_verify_claims(&cfg)?,
        Command::Simulate => cmd_simulate(&cfg)?,
    };

    let main = output.render(format);
    match &out {
        Some(path) => {
            write(path, &main)?;
            if let Some(text) = output.text() {
                let mut side = path.clone().into_os_string();
                side.push(".txt");
                write(Path::new(&side), &text)?;
            }
        }
        None => {
            emit(std::io::stdout().lock(), &main)?;
            if let Some(text) = output.text() {
                emit(std::io::stderr().lock(), &text)?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
