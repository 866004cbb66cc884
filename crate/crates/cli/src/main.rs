use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use dentcurve_cli::args::Cli;
use dentcurve_cli::{emit, run};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli).and_then(|out| emit(&out)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("dentcurve: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
