use bianchi_periods::cli::{configure_workers, error_json, execute, Cli};
use bianchi_periods::Error;
use clap::error::ErrorKind;
use clap::Parser;
use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => e.exit(),
        Err(e) => {
            let first = e.to_string().lines().next().unwrap_or_default().to_string();
            let message = first.strip_prefix("error: ").unwrap_or(&first).to_string();
            eprintln!("{}", error_json(&Error::Usage(message)));
            return ExitCode::from(2);
        }
    };
    configure_workers();
    match execute(&cli.command) {
        Ok(outcome) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, format!("{}\n", outcome.json)),
                None => writeln!(std::io::stdout().lock(), "{}", outcome.json).or_else(|e| {
                    // a closed pipe downstream is not our failure
                    if e.kind() == std::io::ErrorKind::BrokenPipe {
                        Ok(())
                    } else {
                        Err(e)
                    }
                }),
            };
            if let Err(e) = written {
                let err = Error::Io(e.to_string());
                eprintln!("{}", error_json(&err));
                return ExitCode::from(2);
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("{}", error_json(&err));
            ExitCode::from(2)
        }
    }
}
