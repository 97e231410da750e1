//! Command-line front end for the `bimac` library: expansions, Kostka
//! tables, nabla images, evaluations, stability sweeps and verification
//! reports, rendered as text, CSV, JSON or LaTeX.

pub mod args;
pub mod commands;
pub mod document;
pub mod golden;
pub mod render;
pub mod suites;

use std::fs;

use thiserror::Error;

pub use args::{BasisChoice, Cli, Command, Family, Format, Label, Suite, Variant};
pub use document::{CheckResult, Document, Report, Status};

/// Exit status for a run whose checks all passed.
pub const EXIT_PASS: u8 = 0;
/// Exit status for a run that recorded a failed check.
pub const EXIT_CHECK_FAILURE: u8 = 1;
/// Exit status for malformed or unsupported input.
pub const EXIT_USAGE: u8 = 2;
/// Exit status for unexpected internal failures.
pub const EXIT_INTERNAL: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Internal(_) | CliError::Io(_) => EXIT_INTERNAL,
        }
    }
}

impl From<bimac::Error> for CliError {
    fn from(e: bimac::Error) -> Self {
        use bimac::Error as E;
        match e {
            E::Partition(_) | E::DegreeMismatch(..) | E::InsufficientVariables(_) => CliError::Usage(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<bimac::partitions::PartitionError> for CliError {
    fn from(e: bimac::partitions::PartitionError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<bimac::coeffs::CoeffError> for CliError {
    fn from(e: bimac::coeffs::CoeffError) -> Self {
        CliError::Internal(e.to_string())
    }
}

/// Runs the parsed command and returns its document.
pub fn execute(cli: &Cli) -> Result<Document, CliError> {
    match &cli.command {
        Command::Expand { label, family, basis } => commands::expand(label, *family, *basis),
        Command::Kostka { degree, variant } => commands::kostka(*degree, *variant, cli.m),
        Command::Nabla { degree, operator } => commands::nabla(*degree, *operator),
        Command::Evaluate { label } => commands::evaluate(label, cli.n_vars, cli.m),
        Command::Verify { suite } => suites::run_suite(*suite, cli.max_n, cli.seed),
        Command::Sweep { label } => commands::sweep(label, cli.max_n.or(cli.m)),
    }
}

/// Executes, renders and writes the output; returns the exit status.
pub fn run(cli: &Cli) -> Result<u8, CliError> {
    let doc = execute(cli)?;
    let rendered = render::render(&doc, cli.format)?;
    match &cli.out {
        Some(path) => fs::write(path, rendered)?,
        None => print!("{rendered}"),
    }
    Ok(if doc.passed() { EXIT_PASS } else { EXIT_CHECK_FAILURE })
}
