//! `hyperint` command-line front end.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 domain error,
//! 3 verification failure.

mod args;
mod commands;
mod error;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use error::CliError;

fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Reduce(a) => commands::reduce_cmd(a, cli.format, out),
        Command::Canonical(a) => commands::canonical_cmd(a, cli.format, out),
        Command::Eval(a) => commands::eval_cmd(&a.function, cli.format, out),
        Command::Orbit(a) => commands::orbit_cmd(&a.integral, cli.format, out),
        Command::Verify(a) => commands::verify_cmd(a, cli.format, out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Output(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
