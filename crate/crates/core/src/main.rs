use std::io::Write;

use clap::Parser;

use sendov_core::cli::{execute, Cli, EXIT_INPUT_ERROR};

fn main() {
    let cli = Cli::parse();
    match execute(&cli.command) {
        Ok(out) => {
            let text = serde_json::to_string_pretty(&out.json).expect("serializable");
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            std::process::exit(out.exit_code);
        }
        Err(e) => {
            eprintln!("{}", serde_json::json!({ "error": e.to_string() }));
            std::process::exit(EXIT_INPUT_ERROR);
        }
    }
}
