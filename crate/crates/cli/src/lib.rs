//! The `hbn` command line: stratum tables, curve sampling with
//! certificates, rank reports for the determinant map, and bound checks.
//!
//! Every command returns a [`Report`], a JSON value plus an optional table,
//! and an exit code: 0 on success, 2 for an empty or forced-reducible
//! stratum, 3 when certification is inconclusive. Bad arguments exit with 1.

pub mod args;
mod commands;
mod render;

pub use commands::{cmd_dominance, cmd_enumerate, cmd_sample, cmd_section5};
pub use render::render;

use serde_json::Value;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_EMPTY: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

/// A command's result: the canonical JSON document, the table rendered for
/// CSV and pretty output, and the exit code.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub json: Value,
    pub table: Option<Table>,
    pub exit: i32,
}

/// Rows of JSON objects with a frozen column order. The same rows appear in
/// the JSON document under `key`.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub key: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Value>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Wood(#[from] wood_engine::WoodError),
    #[error(transparent)]
    Diff(#[from] differential_lab::DiffError),
    #[error(transparent)]
    Bounds(#[from] scrollar_bounds::BoundsError),
    #[error(transparent)]
    Algebra(#[from] exact_algebra::AlgebraError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Parses arguments, runs the command and writes the rendered report.
/// Returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;
    let cli = match args::Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("hbn: {e}");
            EXIT_USAGE
        }
    }
}

/// Runs the parsed command without rendering.
pub fn dispatch(cli: &args::Cli) -> Result<Report, CliError> {
    use args::Command;
    let c = &cli.common;
    exact_algebra::PrimeField::new(c.p)?;
    match &cli.command {
        Command::Enumerate(a) => cmd_enumerate(c, a),
        Command::Sample(a) => cmd_sample(c, a),
        Command::Dominance(a) => cmd_dominance(c, a),
        Command::Section5(a) => cmd_section5(c, a),
    }
}

fn execute(cli: &args::Cli) -> Result<i32, CliError> {
    let c = &cli.common;
    let report = dispatch(cli)?;
    let text = render(&report, c.format)?;
    match &c.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(report.exit)
}
