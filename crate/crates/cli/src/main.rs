//! `soergel`: batch commands over soergel-core with text or JSON output.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage error, 3 resource refusal.

mod commands;

use std::io::Write;
use std::process::ExitCode;
use std::sync::mpsc;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use soergel_core::Error;

use commands::Outcome;

#[derive(Parser, Debug)]
#[command(name = "soergel", version, about = "Exact computations for the bimodule R_{k,l} (x) R_{k,l}")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Give up after this many seconds (exit 3).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    timeout: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Shape {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    k: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    l: u64,
}

impl Shape {
    fn kl(self) -> (usize, usize) {
        (self.k as usize, self.l as usize)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    /// `P_t` (`P` itself for `t = 0`).
    P,
    /// The free ring `R'`.
    Rprime,
    /// `R' / I_j`, with `I_j` checked against its closed formula.
    Ij,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the terms of Delta(1), their count and the degree.
    Delta {
        #[command(flatten)]
        shape: Shape,
    },
    /// Check that Delta is a bimodule map, its determinant form and the minor ideals.
    Verify {
        #[command(flatten)]
        shape: Shape,
        /// Ignore the variable budget.
        #[arg(long)]
        force: bool,
    },
    /// Graded dimensions of the Hochschild homology groups and the Euler characteristic check.
    Homology {
        #[command(flatten)]
        shape: Shape,
        /// Also compute the homology through iterated kernels and cokernels.
        #[arg(long)]
        direct: bool,
        #[arg(long)]
        force: bool,
    },
    /// Hilbert series of a quotient ring.
    Hilbert {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, value_enum, default_value_t = Target::P)]
        target: Target,
        /// Number of differentials `y_i - y'_i` added to `I` (target p).
        #[arg(long, default_value_t = 0)]
        t: usize,
        /// Index of the minor ideal (target ij).
        #[arg(long, default_value_t = 1)]
        j: usize,
        /// Also print the coefficients up to this power of q.
        #[arg(long)]
        expand: Option<i64>,
        #[arg(long)]
        force: bool,
    },
    /// Run every property suite up to a bound on k + l.
    Selftest {
        #[arg(long, default_value_t = 3)]
        max_kl: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        force: bool,
    },
}

fn run(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Delta { shape } => commands::delta(shape.kl()),
        Command::Verify { shape, force } => commands::verify(shape.kl(), force),
        Command::Homology { shape, direct, force } => commands::homology(shape.kl(), direct, force),
        Command::Hilbert {
            shape,
            target,
            t,
            j,
            expand,
            force,
        } => commands::hilbert(shape.kl(), target, t, j, expand, force),
        Command::Selftest { max_kl, seed, force } => commands::selftest(max_kl, seed, force),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ResourceLimit { .. } | Error::TooManyVariables(..) => 3,
        Error::InvalidShape { .. } | Error::NeedsKAtLeastL { .. } | Error::IndexOutOfRange { .. } | Error::Parse(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let result = match cli.timeout {
        None => run(cli.command),
        Some(secs) => {
            let (tx, rx) = mpsc::channel();
            let command = cli.command;
            std::thread::spawn(move || {
                let _ = tx.send(run(command));
            });
            match rx.recv_timeout(Duration::from_secs(secs)) {
                Ok(r) => r,
                Err(_) => {
                    eprintln!("error: no result within {secs} s; raise --timeout or reduce k and l");
                    return ExitCode::from(3);
                }
            }
        }
    };
    match result {
        Ok(out) => {
            let rendered = match format {
                Format::Text => out.text,
                Format::Json => serde_json::to_string_pretty(&out.json).expect("serializable") + "\n",
            };
            // a closed pipe downstream is not an error of ours
            let _ = std::io::stdout().lock().write_all(rendered.as_bytes());
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
