//! hardylab: sharp constants and inequality verification for weighted and
//! fractional Hardy inequalities with zonal angular weights.
//!
//! Exit codes: 0 = computation succeeded and every checked inequality
//! holds; 1 = usage or configuration error (including library failures);
//! 2 = an inequality was violated beyond tolerance.

mod config;
mod report;
mod run;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "hardylab",
    version,
    about = "Sharp-constant calculator and verifier for weighted Hardy inequalities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a closed-form sharp constant
    Constant(RunArgs),
    /// Verify inequalities on test functions and report pass/fail rows
    Verify(RunArgs),
    /// Drive Rayleigh quotients toward a sharp constant
    Sweep(RunArgs),
    /// Compute the fractional constant with both quadrature schemes
    Lambda(RunArgs),
    /// Rearranged-weight coefficient and equimeasurability checks
    Rearrange(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// JSON run configuration
    #[arg(long)]
    config: PathBuf,
    /// Report destination (stdout when omitted, unless the config names one)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report format (overrides the config)
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, args) = match &cli.command {
        Command::Constant(a) => ("constant", a),
        Command::Verify(a) => ("verify", a),
        Command::Sweep(a) => ("sweep", a),
        Command::Lambda(a) => ("lambda", a),
        Command::Rearrange(a) => ("rearrange", a),
    };

    let text = match std::fs::read_to_string(&args.config) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("hardylab: cannot read config '{}': {e}", args.config.display());
            return ExitCode::from(1);
        }
    };
    let mut parsed = match config::parse_config(&text, name) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("hardylab: {e}");
            return ExitCode::from(1);
        }
    };
    if let Some(f) = args.format {
        parsed.format = match f {
            FormatArg::Csv => config::OutputFormat::Csv,
            FormatArg::Json => config::OutputFormat::Json,
        };
    }
    if let Some(out) = &args.out {
        parsed.out_path = Some(out.display().to_string());
    }

    let outcome = match run::execute(&parsed) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("hardylab: {e}");
            return ExitCode::from(1);
        }
    };

    let rendered = match parsed.format {
        config::OutputFormat::Csv => report::to_csv(&outcome.rows),
        config::OutputFormat::Json => report::to_json(&outcome.rows),
    };
    match &parsed.out_path {
        Some(path) => {
            if let Err(e) = std::fs::write(path, rendered.as_bytes()) {
                eprintln!("hardylab: cannot write report '{path}': {e}");
                return ExitCode::from(1);
            }
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = stdout.write_all(rendered.as_bytes()) {
                eprintln!("hardylab: cannot write report to stdout: {e}");
                return ExitCode::from(1);
            }
        }
    }
    if outcome.violated {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}
