use clap::Parser;
use std::process::ExitCode;

fn main() -> ExitCode {
    let mut cli = sltb::cli::Cli::parse();
    if let Some(dir) = std::env::var_os("SLTB_OUT") {
        cli.out = dir.into();
    }
    match sltb::execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
