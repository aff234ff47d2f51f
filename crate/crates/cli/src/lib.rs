//! Batch front end: every subcommand writes one JSON document or CSV table to
//! stdout and diagnostics to stderr.
//!
//! Exit status: 0 when all requested checks pass, 1 on a tolerance failure,
//! 2 on bad flags or inputs, 3 on numerical non-convergence.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod output;
pub mod selftest;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

pub use args::{Cli, Command, Format};
pub use config::RunConfig;
pub use error::CliError;

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, diag: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(diag, "{}", e.render());
                    2
                }
            };
        }
    };
    let result = RunConfig::from_cli(&cli).and_then(|cfg| {
        let mut ctx = commands::Ctx {
            cli: &cli,
            cfg,
            out: &mut *out,
            diag: &mut *diag,
        };
        commands::dispatch(&mut ctx)
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(diag, "error: {e}");
            e.exit_code()
        }
    }
}
