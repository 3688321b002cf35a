use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use octoramsey::cli::{run, Cli, ExitStatus};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitStatus::Usage.into() } else { ExitStatus::Holds.into() };
        }
    };
    let outcome = run(&cli, &mut std::io::stdin());
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    outcome.exit_status().into()
}
