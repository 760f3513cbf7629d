use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hyperspec::commands::{cmd_hyperop, cmd_laws, cmd_line, cmd_verify, Outcome};
use hyperspec::{CliError, EXIT_INPUT};
use hyperspec_core::galoisline::Law;

/// Hyperstructures on prime spectra of finite Hopf algebras.
#[derive(Parser)]
#[command(name = "hyperspec", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check hypergroup or hyperring axioms of a table file, builtin:K or builtin:S.
    Laws { input: String },
    /// Print the hyperoperation table of a Hopf algebra, or one entry.
    Hyperop {
        /// mu:p:n, addetale:p:k, or a Hopf data file.
        spec: String,
        #[arg(long, num_args = 2, value_names = ["F", "G"])]
        pair: Option<Vec<String>>,
        #[arg(long)]
        json: bool,
    },
    /// Run the law suite and print a traceability report.
    Verify {
        #[arg(long)]
        suite: Option<PathBuf>,
        /// Include per-check runtimes (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
    },
    /// Compare the two engines on the additive or multiplicative line over F_p.
    Line {
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum)]
        law: LawArg,
        #[arg(long = "max-degree")]
        max_degree: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LawArg {
    Add,
    Mul,
}

fn threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var("HYPERSPEC_THREADS") else {
        return Ok(());
    };
    let n: usize = v.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        CliError::Format(format!("HYPERSPEC_THREADS={v:?} is not a positive integer"))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Format(e.to_string()))
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    threads()?;
    match cli.cmd {
        Cmd::Laws { input } => cmd_laws(&input),
        Cmd::Hyperop { spec, pair, json } => {
            let pair = pair.as_ref().map(|v| (v[0].as_str(), v[1].as_str()));
            cmd_hyperop(&spec, pair, json)
        }
        Cmd::Verify { suite, timings } => cmd_verify(suite.as_deref(), timings).map(|(o, _)| o),
        Cmd::Line { p, law, max_degree } => {
            let law = match law {
                LawArg::Add => Law::Additive,
                LawArg::Mul => Law::Multiplicative,
            };
            cmd_line(p, law, max_degree)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
