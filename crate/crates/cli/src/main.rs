//! `isoint`: reflection factorizations and interval posets of Euclidean
//! isometries, from JSON on a file or stdin.
//!
//! Exit codes: 0 success, 1 unreadable or malformed input, 2 invalid
//! isometry, 3 invalid poset element, context or chain.

mod commands;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{Options, Report};
use input::Failure;

#[derive(Parser)]
#[command(name = "isoint", version, about = "Reflection factorizations and interval posets of Euclidean isometries")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format [default: dot for hasse, json otherwise]
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Required ambient dimension; also sizes an empty reflection list
    #[arg(long, global = true)]
    dim: Option<usize>,

    /// 0 picks the canonical factorization, other values a random maximal chain
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Use the augmented poset (hyperbolic tops only)
    #[arg(long, global = true)]
    augmented: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Type, move-set, min-set, reflection length and standard splitting
    Analyze { input: Option<PathBuf> },
    /// A minimal reflection factorization
    Factorize {
        input: Option<PathBuf>,
        /// Follow this maximal chain, listed from inv(w) down to e^E
        #[arg(long)]
        chain: Option<PathBuf>,
    },
    /// The maximal chain traced by a minimal factorization
    Chain {
        input: Option<PathBuf>,
        #[arg(long)]
        chain: Option<PathBuf>,
    },
    /// Compare elements "p" and "q"
    Order { input: Option<PathBuf> },
    /// Maximal lower bounds of "p" and "q"
    Meet { input: Option<PathBuf> },
    /// Minimal upper bounds of "p" and "q"
    Join { input: Option<PathBuf> },
    /// A verified bowtie below a hyperbolic top, optionally built from "U"
    Bowtie { input: Option<PathBuf> },
    /// Whether the model poset is a lattice
    Lattice { input: Option<PathBuf> },
    /// Meet and join of "elements" in the completed poset
    Complete { input: Option<PathBuf> },
    /// Hasse diagram of "elements"
    Hasse { input: Option<PathBuf> },
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let o = Options { dim: cli.dim, seed: cli.seed, augmented: cli.augmented };
    let read = |p: &Option<PathBuf>| input::read_input(p.as_deref());
    let read_chain = |p: &Option<PathBuf>| p.as_ref().map(|p| input::read_input(Some(p))).transpose();
    let (report, default): (Report, Format) = match &cli.command {
        Command::Analyze { input } => (commands::analyze(&read(input)?, &o)?, Format::Json),
        Command::Factorize { input, chain } => {
            (commands::factorize(&read(input)?, read_chain(chain)?.as_deref(), &o)?, Format::Json)
        }
        Command::Chain { input, chain } => {
            (commands::chain(&read(input)?, read_chain(chain)?.as_deref(), &o)?, Format::Json)
        }
        Command::Order { input } => (commands::order(&read(input)?, &o)?, Format::Json),
        Command::Meet { input } => (commands::meet(&read(input)?, &o)?, Format::Json),
        Command::Join { input } => (commands::join(&read(input)?, &o)?, Format::Json),
        Command::Bowtie { input } => (commands::bowtie(&read(input)?, &o)?, Format::Json),
        Command::Lattice { input } => (commands::lattice(&read(input)?, &o)?, Format::Json),
        Command::Complete { input } => (commands::complete(&read(input)?, &o)?, Format::Json),
        Command::Hasse { input } => (commands::hasse(&read(input)?, &o)?, Format::Dot),
    };
    match cli.format.unwrap_or(default) {
        Format::Json => Ok(serde_json::to_string_pretty(&report.json).expect("serializable") + "\n"),
        Format::Text => Ok(report.text),
        Format::Dot => report
            .dot
            .ok_or_else(|| Failure::Parse("dot output is available for chain, bowtie and hasse only".into())),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("isoint: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}
