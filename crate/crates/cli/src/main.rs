mod args;
mod commands;
mod error;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use serde_json::json;

use crate::args::{Cli, Format};
use crate::commands::Report;
use crate::error::{CliError, EXIT_INVALID};

const THREADS_VAR: &str = "FULLPROJ_THREADS";

fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(raw) = std::env::var(THREADS_VAR) {
        let n: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
            CliError::invalid(format!(
                "{THREADS_VAR} must be a positive integer, got {raw:?}"
            ))
        })?;
        builder = builder.num_threads(n);
    }
    builder
        .build()
        .map_err(|e| CliError::invalid(format!("thread pool: {e}")))
}

fn render(report: &Report, format: Format, elapsed_ms: u128) -> String {
    match format {
        Format::Table => report.table.clone(),
        Format::Csv => report.csv.clone(),
        Format::Json => {
            let record = json!({
                "command": report.command,
                "params": report.params,
                "result": report.result,
                "version": env!("CARGO_PKG_VERSION"),
                "elapsed_ms": commands::big_json(&elapsed_ms),
            });
            let mut out = serde_json::to_string(&record).expect("record serializes");
            out.push('\n');
            out
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };

    let started = Instant::now();
    let outcome =
        thread_pool().and_then(|pool| pool.install(|| commands::run(&cli.command, &cli.global)));
    match outcome {
        Ok(report) => {
            let text = render(&report, cli.global.format, started.elapsed().as_millis());
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::from(report.status as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
