use std::process::ExitCode;

use clap::Parser;
use quadalg::cli::{exit_code, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = exit_code(run(&cli, &mut std::io::stdout().lock()));
    ExitCode::from(code as u8)
}
