use std::fs::File;
use std::io;
use std::process::ExitCode;

use clap::Parser;
use triot_cli::{emit, run_benchmark, BenchError, BenchmarkConfig, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: &Cli) -> Result<(), BenchError> {
    let config = BenchmarkConfig::from_cli(cli)?;
    let records = run_benchmark(&config)?;
    match &cli.out {
        Some(path) => {
            let mut file = File::create(path)?;
            emit(&records, cli.format, &mut file)?;
        }
        None => {
            let stdout = io::stdout();
            emit(&records, cli.format, &mut stdout.lock())?;
        }
    }
    Ok(())
}
