//! Library surface of the command-line front end, exposed so integration
//! tests can drive the exact code paths the binary runs.

pub mod cli;
pub mod config;
pub mod sections;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use thiserror::Error;

pub use config::{RunConfig, Tolerances};
pub use sections::{build_report, ReportDoc};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Geometry(#[from] tensym::GeometryError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Parses arguments, runs the subcommand, writes its output, and returns the
/// process exit code: 0 all checks pass, 1 a check failed, 2 usage error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match cli::Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own message (help/version exit 0)
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let _ = e.print();
            return code;
        }
    };
    let json_mode = cli.json || matches!(cli.command, cli::Command::Report);
    match cli::execute(&cli) {
        Ok(outcome) => {
            let payload = if json_mode {
                let mut s = serde_json::to_string_pretty(&outcome.json).expect("serializable");
                s.push('\n');
                s
            } else {
                let mut s = outcome.text.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            };
            let write_result = match &cli.out {
                Some(path) => std::fs::write(path, payload.as_bytes()),
                None => std::io::stdout().write_all(payload.as_bytes()),
            };
            if let Err(e) = write_result {
                eprintln!("error: cannot write output: {e}");
                return EXIT_USAGE;
            }
            if outcome.pass {
                EXIT_PASS
            } else {
                EXIT_CHECK_FAILED
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}
