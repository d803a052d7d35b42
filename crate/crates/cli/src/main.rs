//! `gini-bounds`: evaluate, tabulate and certify the best-possible bounds on
//! copulas with a prescribed Gini's gamma.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{Map, Value};

use gini_core::Error;

#[derive(Parser)]
#[command(
    name = "gini-bounds",
    version,
    about = "Best-possible copula bounds under a fixed Gini's gamma"
)]
struct Cli {
    /// Report elapsed_ms as 0 so repeated runs are byte-identical.
    #[arg(long, global = true)]
    no_timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Upper,
    Lower,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GridFormat {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Bound value and candidate breakdown at one point.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
        #[arg(long, allow_hyphen_values = true)]
        u: f64,
        #[arg(long, allow_hyphen_values = true)]
        v: f64,
        #[arg(long, value_enum, default_value = "upper")]
        side: Side,
    },
    /// Bound values on the (n+1) x (n+1) lattice.
    Grid {
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
        #[arg(long, default_value_t = 200)]
        n: usize,
        #[arg(long, value_enum, default_value = "upper")]
        side: Side,
        /// Output file; stdout if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: GridFormat,
    },
    /// Gini's gamma of a builtin, point-bound or checkerboard copula.
    Gamma {
        /// `w`, `m`, `pi`, `pointbound A B THETA` or `checkerboard FILE`.
        #[arg(long, num_args = 1..=4, required = true, allow_hyphen_values = true)]
        copula: Vec<String>,
        /// Simpson panels for the quadrature cross-check.
        #[arg(long, default_value_t = gini_core::quadrature::CERTIFY_PANELS)]
        panels: usize,
    },
    /// Copula / quasi-copula status of both bounds.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
    },
    /// Sample both bounds and verify the lattice properties.
    Check {
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
        #[arg(long, default_value_t = 400)]
        grid: usize,
    },
    /// Checkerboard LP extremes against the closed-form bounds.
    Oracle {
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        u: f64,
        #[arg(long, allow_hyphen_values = true)]
        v: f64,
    },
    /// Membership of each lattice point in the five regions.
    Regions {
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
        #[arg(long, default_value_t = 100)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Command result before timing is attached.
pub struct Outcome {
    pub parameters: Map<String, Value>,
    pub results: Value,
    pub checks_passed: bool,
    /// Whether the report goes to stderr because stdout carries data.
    pub report_to_stderr: bool,
}

#[derive(Serialize)]
struct RunReport<'a> {
    command: &'a str,
    parameters: &'a Map<String, Value>,
    results: &'a Value,
    checks_passed: bool,
    elapsed_ms: u64,
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("GINI_BOUNDS_THREADS") else {
        return Ok(());
    };
    let k: usize =
        raw.trim().parse().ok().filter(|k| *k > 0).ok_or_else(|| {
            format!("GINI_BOUNDS_THREADS must be a positive integer, got {raw:?}")
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(k)
        .build_global()
        .map_err(|e| e.to_string())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Domain(_) | Error::Parse(_) | Error::Json(_) => 2,
        Error::Io(_) | Error::Internal(_) | Error::Stall { .. } => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let start = Instant::now();
    let (name, outcome) = match cli.command {
        Command::Eval { t, u, v, side } => ("eval", commands::eval(t, u, v, side)),
        Command::Grid {
            t,
            n,
            side,
            out,
            format,
        } => ("grid", commands::grid(t, n, side, out.as_deref(), format)),
        Command::Gamma { copula, panels } => ("gamma", commands::gamma(&copula, panels)),
        Command::Classify { t } => ("classify", commands::classify(t)),
        Command::Check { t, grid } => ("check", commands::check(t, grid)),
        Command::Oracle { t, n, u, v } => ("oracle", commands::oracle(t, n, u, v)),
        Command::Regions { t, n, out } => ("regions", commands::regions(t, n, out.as_deref())),
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let elapsed_ms = if cli.no_timing {
        0
    } else {
        start.elapsed().as_millis() as u64
    };
    let report = RunReport {
        command: name,
        parameters: &outcome.parameters,
        results: &outcome.results,
        checks_passed: outcome.checks_passed,
        elapsed_ms,
    };
    let text = serde_json::to_string_pretty(&report).expect("report serializes");
    if outcome.report_to_stderr {
        eprintln!("{text}");
    } else {
        println!("{text}");
    }
    if outcome.checks_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
