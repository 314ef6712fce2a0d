use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use verma_cli::args::Cli;
use verma_cli::{emit, run};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let job = cli.command.to_job();
    let start = Instant::now();
    match run(&job) {
        Ok(mut report) => {
            if cli.timing {
                report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            }
            let out = emit(&report, cli.format);
            if std::io::stdout().write_all(out.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(report.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
