use std::process::ExitCode;

use clap::Parser;
use dedarg_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(result) => {
            print!("{}", result.output);
            if cli.timing {
                eprintln!("elapsed: {:.3} ms", result.timing.as_secs_f64() * 1e3);
            }
            ExitCode::from(result.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(e.code as u8)
        }
    }
}
