use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use addbasis::cli::{execute, Cli, EXIT_INPUT};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = execute(&cli.command);
    if out.code == EXIT_INPUT {
        eprint!("{}", out.text);
    } else {
        let mut stdout = std::io::stdout().lock();
        let _ = stdout.write_all(out.text.as_bytes());
    }
    ExitCode::from(out.code as u8)
}
