#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;
use thiserror::Error;

use args::{Cli, Command};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Physics(dirac_hulthen::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl From<dirac_hulthen::Error> for CliError {
    fn from(e: dirac_hulthen::Error) -> Self {
        match e {
            dirac_hulthen::Error::InvalidParameters(msg) => CliError::Usage(msg),
            other => CliError::Physics(other),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Physics(_) => 2,
            _ => 1,
        }
    }
}

fn run(cli: &Cli) -> Result<commands::Report, CliError> {
    let c = &cli.common;
    match &cli.command {
        Command::Solve => commands::solve(c),
        Command::Table => commands::table(c),
        Command::Doublets(a) => commands::doublets(c, a),
        Command::Approx(a) => commands::approx(c, a),
        Command::Wavefunction(a) => commands::wavefunction(c, a),
        Command::Oracle(a) => commands::oracle(c, a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let written = report
        .table
        .to_bytes()
        .and_then(|bytes| output::emit(&bytes, cli.common.out.as_deref()));
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(e.exit_code());
    }
    if report.failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        for f in &report.failures {
            eprintln!("error: {f}");
        }
        ExitCode::from(2)
    }
}
