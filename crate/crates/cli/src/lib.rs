//! Command-line front-end for the `sqmat` library: JSON input, report rendering and
//! the exit-code contract.
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success (including verification reports that say `fail`) |
//! | 2 | unreadable or malformed input, invalid option |
//! | 3 | shape error |
//! | 4 | the equation has no solution |
//! | 5 | singular matrix or null divisor |
//! | 6 | numeric failure |

pub mod cli;
pub mod commands;
pub mod error;
pub mod input;
pub mod report;

#[cfg(test)]
mod golden;

use std::ffi::OsString;
use std::fs;

use clap::Parser;

pub use cli::{Cli, Format};
pub use error::{CliError, CliResult};

/// What one invocation writes and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invocation {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses `args` (program name first) and runs the command. This is the
/// whole binary apart from writing the two streams.
pub fn run<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => {
            let (stdout, diag, code) = execute(&cli);
            Invocation {
                stdout: stdout.unwrap_or_default(),
                stderr: diag.map(|m| format!("sqmat: {m}\n")).unwrap_or_default(),
                code,
            }
        }
        Err(e) => {
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), text)
            } else {
                (text, String::new())
            };
            Invocation {
                stdout,
                stderr,
                code: e.exit_code(),
            }
        }
    }
}

/// Runs a parsed command line. Returns the rendered report (if any), the
/// diagnostic for standard error (if any) and the exit code.
pub fn execute(cli: &Cli) -> (Option<String>, Option<String>, i32) {
    match commands::run(cli) {
        Ok(outcome) => {
            let rendered = match cli.format {
                Format::Json => report::to_json(&outcome.report),
                Format::Text => report::to_text(&outcome.report),
            };
            let (diag, code) = match outcome.failure {
                Some(e) => (Some(e.to_string()), e.exit_code()),
                None => (None, 0),
            };
            match &cli.output {
                Some(path) => match fs::write(path, &rendered) {
                    Ok(()) => (None, diag, code),
                    Err(e) => {
                        let e = CliError::from(e);
                        (None, Some(e.to_string()), e.exit_code())
                    }
                },
                None => (Some(rendered), diag, code),
            }
        }
        Err(e) => (None, Some(e.to_string()), e.exit_code()),
    }
}
