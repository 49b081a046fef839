//! Command line front end for `pratt-core`.
//!
//! [`run`] parses arguments, executes one command and returns the exit code
//! with the text destined for standard output and standard error. Exit
//! codes: 0 success or an affirmative answer, 1 a negative answer (with a
//! witness when one exists), 2 a search budget ran out, 3 a usage, parse or
//! input error.

mod commands;
pub mod error;
pub mod format;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;

pub use error::{CliError, CliResult};
pub use format::{
    load_structure, parse_chains, parse_crossword, parse_structure, parse_tuples, save_structure, write_chains,
    write_crossword, write_structure, Chains, Loaded,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_BUDGET: u8 = 2;
pub const EXIT_USAGE: u8 = 3;

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command named by `args`; the first item is the program name.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match commands::Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Output { code: EXIT_OK, stdout: text, stderr: String::new() }
                }
                _ => Output { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    let mut report = commands::Report::default();
    match commands::execute(cli, &mut report) {
        Ok(code) => Output { code, stdout: report.out, stderr: report.err },
        Err(e) => {
            report.err.push_str(&format!("error: {e}\n"));
            Output { code: EXIT_USAGE, stdout: report.out, stderr: report.err }
        }
    }
}
