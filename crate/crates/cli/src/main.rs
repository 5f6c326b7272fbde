use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use rootgrade::execute;
use rootgrade_core::Limits;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Json,
    Pretty,
}

/// Exact computations with root-graded Lie algebras.
#[derive(Parser, Debug)]
#[command(name = "rootgrade", version)]
struct Args {
    /// validate, roots, parabolic, sections, character, minimal, realize,
    /// frobenius, nlu or explain
    command: String,
    specfile: PathBuf,
    #[arg(long, default_value_t = Limits::default().max_weyl_order)]
    max_weyl_order: usize,
    #[arg(long, default_value_t = Limits::default().max_rank)]
    max_rank: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let input = match std::fs::read(&args.specfile) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("rootgrade: cannot read {}: {e}", args.specfile.display());
            return ExitCode::from(2);
        }
    };
    let limits = Limits {
        max_rank: args.max_rank,
        max_weyl_order: args.max_weyl_order,
    };
    let response = execute(&args.command, &input, &limits, matches!(args.output, OutputFormat::Pretty));
    let _ = std::io::stdout().write_all(response.stdout.as_bytes());
    let _ = std::io::stderr().write_all(response.stderr.as_bytes());
    ExitCode::from(response.code as u8)
}
