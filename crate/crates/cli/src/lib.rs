//! Command-line front end for `tkmotive`: motive tables and point-count
//! verification for torus knots.
//!
//! [`run`] parses arguments and writes to the given streams, so the binary and
//! in-process callers behave identically. Exit codes: 0 success, 1 a
//! verification mismatch (or an inadmissible prime), 2 a usage error or any
//! failure that prevented a result.

mod args;
mod motive;
mod render;
mod sweep;
mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

use args::{Cli, Command};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

pub(crate) type Failure = Box<dyn std::error::Error>;

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let stream: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(stream, "{}", e.render());
            return u8::try_from(e.exit_code()).unwrap_or(EXIT_USAGE);
        }
    };
    let result = match &cli.command {
        Command::Motive(a) => motive::run(a, out),
        Command::Verify(a) => verify::run(a, out),
        Command::Sweep(a) => sweep::run(a, out),
    };
    let _ = out.flush();
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
