use std::process::ExitCode;

use clap::Parser;
use symrig_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let json = serde_json::to_string_pretty(&out.json).expect("reports serialize");
            if let Some(path) = &cli.json {
                if let Err(e) = std::fs::write(path, json.clone() + "\n") {
                    eprintln!("error: {path}: {e}");
                    return ExitCode::from(2);
                }
            }
            if cli.json_only {
                println!("{json}");
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
