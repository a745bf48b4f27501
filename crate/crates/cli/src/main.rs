use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use expalg_cli::commands::format_of;
use expalg_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            // A closed pipe is not worth a second error.
            let _ = out.write_all(report.render(format_of(&cli)).as_bytes());
            ExitCode::from(report.outcome.exit_code())
        }
        Err(e) => {
            eprintln!("error: {}: {e}", e.kind());
            ExitCode::from(1)
        }
    }
}
