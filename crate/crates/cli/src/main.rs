mod args;
mod commands;
mod operand;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hopf_core::Error;

use crate::args::Cli;

const EXIT_PARSE: u8 = 1;
const EXIT_DOMAIN: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;
const EXIT_CHECK_FAILED: u8 = 4;
const EXIT_INTERNAL: u8 = 5;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => EXIT_PARSE,
        Error::Domain(_) => EXIT_DOMAIN,
        Error::Inconclusive(_) => EXIT_INCONCLUSIVE,
        Error::Internal(_) => EXIT_INTERNAL,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_PARSE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    // Output is assembled in full before anything is written.
    match commands::execute(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(stdout, "{}", out.text);
            if out.failed {
                ExitCode::from(EXIT_CHECK_FAILED)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
