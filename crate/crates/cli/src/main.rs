//! `bethe`: spectra, Bethe states and the reference checks from the command line.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use bethe_core::Complex64;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Args)]
pub struct Options {
    /// Ring size N.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Number of spin deviations.
    #[arg(long, global = true)]
    r: Option<usize>,
    /// Quasimomentum index.
    #[arg(long, global = true, allow_negative_numbers = true)]
    k: Option<i64>,
    /// Replaces every numeric check tolerance.
    #[arg(long, global = true, value_parser = positive_f64)]
    tol: Option<f64>,
    /// Also write the report as JSON to this file.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Wavelet Hamiltonian, characteristic polynomial and levels of a sector.
    Spectrum,
    /// The degenerate three-magnon doublet of the seven-site ring.
    QubitReport,
    /// Run every reference check.
    VerifyPaper,
    /// Build the B-operator state for the given spectral parameters.
    State {
        /// Spectral parameter `re` or `re,im`; repeat once per magnon.
        #[arg(long = "param", required = true, allow_hyphen_values = true, value_parser = parse_complex)]
        params: Vec<Complex64>,
    },
}

#[derive(Debug, Parser)]
#[command(name = "bethe", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    options: Options,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(String),
}

impl From<bethe_core::Error> for CliError {
    fn from(e: bethe_core::Error) -> Self {
        CliError::Compute(e.to_string())
    }
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        Ok(_) => Err("tolerance must be positive and finite".into()),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |t: &str| t.parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(format!("expected re or re,im, got {s:?}")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = &cli.options;
    let result = match &cli.command {
        Command::Spectrum => commands::spectrum(opts),
        Command::QubitReport => commands::qubit_report(opts),
        Command::VerifyPaper => commands::verify(opts),
        Command::State { params } => commands::state(opts, params),
    };
    let report = match result {
        Ok(r) => r,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(CliError::Compute(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    if let Some(path) = &opts.json {
        if let Err(e) = report.write_json(path) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(1);
        }
    }
    print!("{}", report.render(opts.format));
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
