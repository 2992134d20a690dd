//! `schubertkit`: compute, expand and verify double Schubert polynomials.
//!
//! Exit status is 0 when everything requested succeeded, 1 when a
//! verification check failed, and 2 on malformed input.

mod args;
mod corpus;
mod run;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(cap) = cli.degree_cap {
        // Read back by library calls that take no explicit cap.
        std::env::set_var("SCHUBERTKIT_DEGREE_CAP", cap.to_string());
    }
    let outcome = match &cli.command {
        Command::Compute(t) => run::compute(&cli, t),
        Command::Expand(e) => run::expand(&cli, e),
        Command::Verify(v) => run::verify(&cli, v),
        Command::Corpus(c) => corpus::write(&cli, c),
    };
    match outcome {
        Ok(run::Status::Pass) => ExitCode::SUCCESS,
        Ok(run::Status::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
