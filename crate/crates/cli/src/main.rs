use std::io::Write;
use std::process::ExitCode;

use bernstir_cli::{render_reports, render_table, verify, Cli, Command};
use clap::Parser;

fn emit(text: &str) -> ExitCode {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Ok(()) => ExitCode::SUCCESS,
        // closed pipe and similar
        Err(e) => {
            eprintln!("bernstir: {e}");
            ExitCode::from(2)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Table(args) => emit(&render_table(args.family(), args.max_n, args.format)),
        Command::Verify(args) => match verify(&args) {
            Ok(reports) => {
                let text = render_reports(args.identity, &args.config(), &reports, args.format);
                let code = emit(&text);
                if code != ExitCode::SUCCESS {
                    return code;
                }
                if reports.iter().all(|r| r.passed()) {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            Err(e) => {
                eprintln!("bernstir: {e}");
                ExitCode::from(2)
            }
        },
    }
}
