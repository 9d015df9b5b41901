mod commands;
mod config;

use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use cohocolim::simpset::io::to_json;
use cohocolim::Error;
use serde_json::json;

use commands::Outcome;
use config::{Cli, Command, Format, RunConfig};

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::Io(_) | Error::Json(_) | Error::Validation(_) | Error::Lookup(_) => 2,
        Error::UnsupportedCategory(_) => 3,
        Error::Precondition(_) | Error::Rejected(_) => 4,
        Error::Operator(_) => 1,
    }
}

/// Writes through a temporary file in the same directory.
fn write_atomic(path: &str, contents: &str) -> std::io::Result<()> {
    let target = Path::new(path);
    let tmp = target.with_extension("tmp-write");
    {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
    }
    std::fs::rename(&tmp, target)
}

fn render(cfg: &RunConfig, o: &Outcome) -> String {
    match cfg.format {
        Format::Json => {
            let report = json!({
                "tool": "cohocolim",
                "version": env!("CARGO_PKG_VERSION"),
                "config": cfg,
                "passed": o.passed,
                "result": o.result,
            });
            serde_json::to_string_pretty(&report).expect("serializable") + "\n"
        }
        Format::Text => format!("cohocolim {} {}\n{}", env!("CARGO_PKG_VERSION"), cfg.command, o.text),
    }
}

fn run(cli: &Cli, cfg: &RunConfig) -> Result<bool, Error> {
    let outcome = match &cli.command {
        Command::Resolve { poset, c, d } => commands::resolve(cfg, poset, c, d)?,
        Command::Verify { poset, suite } => commands::verify(cfg, poset, *suite)?,
        Command::Compute { diagram, model, complex } => commands::compute(cfg, diagram, *model, complex.as_deref())?,
    };
    let report = render(cfg, &outcome);
    match (&cli.command, &cfg.out) {
        (Command::Compute { .. }, Some(out)) => {
            let set = outcome.set.as_ref().expect("compute produces a set");
            write_atomic(out, &(to_json(set) + "\n"))?;
            print!("{report}");
        }
        (_, Some(out)) => write_atomic(out, &report)?,
        (_, None) => print!("{report}"),
    }
    Ok(outcome.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = RunConfig::new(&cli);
    match run(&cli, &cfg) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
