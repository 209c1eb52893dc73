//! `singer`: exhaustive verification of block companion Singer cycle counts.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use singer_core::report::{self, Command, Fault, Format, Mode, RunConfig, EXIT_UNVERIFIED, EXIT_USAGE};
use singer_core::Error;

const AFTER_HELP: &str = "\
Commands and their parameters:
  fibers    --q --m --n   fibers of the characteristic map on block companion matrices
  bounds    --q --m --n   fibers plus the lower and upper bounds
  splitting --q --m --n   ordered bases, splitting subspaces, pointed counts
  pointed   --q --m --n   pointed splitting subspace counts
  coprime   --q --r --n   coprime r-tuples (monic and degree < n)
  sigma     --q --n       coprime pairs with monic second entry
  toeplitz  --q --n       nonsingular n x n Toeplitz matrices
  trinomial --q --n       Toeplitz count through an irreducible X^2n - aX - b
  binomial  --q --d       irreducibility criterion for X^d - b, all nonzero b
  nilpotent --q --m       nilpotent m x m matrices
  all                     the full desk-scale matrix

Exit codes: 0 all match, 1 usage error, 2 conjecture mismatch,
3 mismatch against a proven statement, 4 ceiling exceeded or sampled only.";

#[derive(Debug, Parser)]
#[command(name = "singer", version, about, after_help = AFTER_HELP)]
struct Cli {
    /// fibers, coprime, sigma, toeplitz, splitting, pointed, bounds, binomial, trinomial, nilpotent or all.
    command: Command,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    d: Option<u32>,
    /// exhaustive or sample.
    #[arg(long, default_value = "exhaustive")]
    mode: Mode,
    #[arg(long, default_value_t = report::DEFAULT_SAMPLE_SIZE)]
    sample_size: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// json, csv or md.
    #[arg(long, default_value = "json")]
    format: Format,
    /// Largest search space scanned exhaustively.
    #[arg(long, env = "SINGER_CEILING", default_value_t = singer_core::census::DEFAULT_EXHAUSTIVE_CEILING)]
    ceiling: u64,
    /// Worker threads (default: all cores).
    #[arg(long)]
    workers: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, hide = true)]
    inject_fault: Option<Fault>,
    /// Record wall-clock time in the report.
    #[arg(long, hide = true)]
    timing: bool,
}

impl Cli {
    fn config(&self) -> RunConfig {
        RunConfig {
            command: self.command,
            q: self.q,
            m: self.m,
            n: self.n,
            r: self.r,
            d: self.d,
            mode: self.mode,
            sample_size: self.sample_size,
            seed: self.seed,
            format: self.format,
            ceiling: self.ceiling,
            workers: self.workers,
            fault: self.inject_fault,
            timing: self.timing,
        }
    }
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}\n\n{AFTER_HELP}");
    ExitCode::from(EXIT_USAGE as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    let config = cli.config();
    if let Err(e) = config.validate() {
        return usage(&e.to_string());
    }
    let report = match report::run(&config) {
        Ok(r) => r,
        Err(e @ (Error::InvalidConfig(_) | Error::Parse(_))) => return usage(&e.to_string()),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_UNVERIFIED as u8);
        }
    };
    for note in &report.notes {
        eprintln!("note: {note}");
    }
    let bytes = match report.serialize(config.format) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_UNVERIFIED as u8);
        }
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &bytes),
        None => io::stdout().lock().write_all(&bytes),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(EXIT_USAGE as u8);
    }
    ExitCode::from(report.exit_code as u8)
}
