mod args;
mod commands;
mod error;

use std::process::ExitCode;

use clap::Parser;

use crate::args::{Cli, Command};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            let line = rendered.lines().next().unwrap_or("invalid arguments");
            eprintln!("diambound: {}", line.trim_start_matches("error: "));
            return ExitCode::from(1);
        }
    };
    let outcome = match cli.command {
        Command::Bounds(a) => commands::bounds(&a),
        Command::Exact(a) => commands::exact(&a),
        Command::Generate(a) => commands::generate(&a),
        Command::Stats(a) => commands::stats(&a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let message = e.to_string().replace('\n', " ");
            eprintln!("diambound: {message}");
            ExitCode::from(e.exit_code())
        }
    }
}
