mod args;
mod commands;
mod table;

use args::{Cli, Command, Format};
use clap::Parser;
use repstat_core::symstats::DEFAULT_CAP;
use repstat_core::Error;
use std::io::Write;
use std::process::ExitCode;
use table::Meta;

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Validation(_)
        | Error::UnsupportedField { .. }
        | Error::UnsupportedCharacteristic { .. } => 2,
        Error::ResourceLimit { .. } => 3,
        Error::Invariant(_) => 4,
    }
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("repstat: {msg}");
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = match cli.cap {
        Some(0) => return fail(2, "--cap must be at least 1"),
        Some(c) if c > DEFAULT_CAP => {
            eprintln!(
                "repstat: sweep cap raised from {DEFAULT_CAP} to {c}; large n may take a long time"
            );
            c
        }
        Some(c) => c,
        None => DEFAULT_CAP,
    };

    let result = match &cli.command {
        Command::Sym { cmd } => commands::run_sym(cmd, cap),
        Command::Gl { cmd } => commands::run_gl(cmd).map(|t| (t, None)),
        Command::Kirillov(a) => commands::run_kirillov(a).map(|t| (t, None)),
    };
    let (table, seed) = match result {
        Ok(v) => v,
        Err(e) => return fail(exit_code(&e), e),
    };

    let meta = Meta {
        invocation: std::env::args().skip(1).collect(),
        seed,
    };
    let text = match cli.format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(&meta),
    };

    let written = match &cli.out {
        Some(path) => std::fs::write(path, text.as_bytes())
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => match std::io::stdout().lock().write_all(text.as_bytes()) {
            // The reader went away (e.g. `| head`); nothing left to report.
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
            other => other.map_err(|e| format!("cannot write to stdout: {e}")),
        },
    };
    match written {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => fail(2, msg),
    }
}
