//! Command-line front end for the `subpower` library.

pub mod commands;
pub mod render;
pub mod suites;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

use commands::{execute, Cli, Status};

/// Parses `args`, runs the command and writes its output. Returns the
/// process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return e.exit_code();
        }
    };
    match execute(cli.command) {
        Ok(outcome) => match stdout.write_all(outcome.stdout.as_bytes()).and_then(|()| stdout.flush()) {
            Ok(()) => outcome.status.code(),
            Err(_) => Status::Io.code(),
        },
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message);
            failure.status.code()
        }
    }
}
