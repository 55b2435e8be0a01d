use std::process::ExitCode;

use clap::Parser;
use neel_cli::args::{build_spec, Cli};
use neel_cli::run::{rejected, run_spec};
use neel_cli::to_json;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let (command, _) = cli.command.split();
    let outcome = match build_spec(&cli) {
        Ok(spec) => run_spec(&spec),
        Err(e) => rejected(Some(command), &e),
    };
    if let Some(error) = outcome.report.get("error") {
        eprintln!("neel: {}: {}", error["name"].as_str().unwrap_or("Error"), error["message"].as_str().unwrap_or(""));
    }
    print!("{}", to_json(&outcome.report));
    ExitCode::from(outcome.exit_code)
}
