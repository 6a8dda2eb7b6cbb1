use std::process::ExitCode;

use clap::Parser;

use bvf_cli::app::{configure_threads, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| run(&cli));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("bvf: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
