use std::process::ExitCode;

use clap::Parser;
use efimov_cli::{configure_threads, Cli, Run};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads()
        .and_then(|()| Run::from_cli(cli))
        .and_then(|run| run.execute());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("efimov: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
