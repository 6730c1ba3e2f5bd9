//! `circum-turan`: evaluate extremal numbers, build and check graphs, run the
//! enumeration oracle and the lemma audit.
//!
//! Exit codes: 0 success, 1 verification failure or oracle mismatch,
//! 2 usage, range or input error.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use circum_turan::formulas::Problem;
use circum_turan::invariants::ForbiddenFamily;
use circum_turan::oracle::Connectivity;
use clap::{Args, Parser, Subcommand};

use output::Format;

const FAMILY_HELP: &str =
    "Forbidden family: `K<r>,C>=<k>` (K_r and all cycles of length at least k) \
                           or `K<r>,P<k>` (K_r and the path on k vertices)";

#[derive(Parser, Debug)]
#[command(
    name = "circum-turan",
    version,
    about = "Exact Turán numbers for K_r together with long cycles or paths"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to this file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Node budget for exhaustive searches; overrides CIRCUM_TURAN_BUDGET.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form extremal number with status and extremal constructions.
    Exval(ExvalArgs),
    /// Build a named construction and print it as graph6.
    Construct(ConstructArgs),
    /// Test graph6 graphs (one per line) for freeness.
    Check(CheckArgs),
    /// Exhaustive maximum over free graphs, compared with the formula.
    Oracle(OracleArgs),
    /// Audit the arithmetic lemmas over a parameter grid.
    Audit(AuditArgs),
    /// Formula values over a range of n with the competing constructions.
    Table(TableArgs),
}

#[derive(Args, Debug)]
struct ExvalArgs {
    /// cycles, cycles2conn or paths.
    problem: Problem,
    n: usize,
    k: usize,
    r: usize,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    /// turan, F, H, Gr, G1, G2, G3, G4, KatonaXiao or tree.
    name: String,
    /// Parameters: turan n p; F n k r; H n a k; Gr n a k r; G1 n k; G2 n k r;
    /// G3 n k r; G4 n k; KatonaXiao n k r; tree n.
    #[arg(required = true)]
    params: Vec<usize>,
    /// Re-check the edge count and freeness before printing.
    #[arg(long)]
    verify: bool,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long, help = FAMILY_HELP)]
    family: ForbiddenFamily,
    /// Exit with status 1 if any graph has a violation.
    #[arg(long)]
    expect_free: bool,
    /// graph6 file; standard input if omitted.
    input: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct OracleArgs {
    n: usize,
    #[arg(long, help = FAMILY_HELP)]
    family: Option<ForbiddenFamily>,
    /// any, connected or two_connected.
    #[arg(long, default_value = "any")]
    connectivity: Connectivity,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    workers: Option<usize>,
    /// Largest n accepted by the enumerator.
    #[arg(long, default_value_t = circum_turan::oracle::DEFAULT_CAP)]
    cap: usize,
    /// Witnesses to print.
    #[arg(long, default_value_t = circum_turan::oracle::DEFAULT_WITNESS_CAP)]
    witnesses: usize,
    /// Run the randomized saturation search instead of enumeration.
    #[arg(long)]
    lower_bound: bool,
    /// Seed for --lower-bound.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug)]
struct AuditArgs {
    /// Range of k, as `a..b` (inclusive) or a single value.
    #[arg(long, default_value = "3..30", value_parser = commands::parse_range)]
    k: (usize, usize),
    #[arg(long, default_value_t = 200)]
    n_max: usize,
}

#[derive(Args, Debug)]
struct TableArgs {
    /// cycles, cycles2conn or paths.
    problem: Problem,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    r: usize,
    /// Range of n, as `a..b` (inclusive) or a single value.
    #[arg(long, value_parser = commands::parse_range)]
    n: (usize, usize),
}

/// A failure with its exit status.
#[derive(Debug)]
pub enum CliError {
    /// Exit 2: bad arguments, parameters out of range, malformed input.
    Usage(String),
    /// Exit 1: a check failed.
    Failed(String),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Failed(format!("I/O error: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(b) = cli.budget {
        // Read by every search through Budget::from_env.
        std::env::set_var("CIRCUM_TURAN_BUDGET", b.to_string());
    }
    let mut out = match output::open_sink(cli.output.as_deref()) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: cannot open output: {e}");
            return ExitCode::from(2);
        }
    };
    let result = match cli.command {
        Command::Exval(a) => commands::exval(&mut out, cli.format, a.problem, a.n, a.k, a.r),
        Command::Construct(a) => {
            commands::construct(&mut out, cli.format, &a.name, &a.params, a.verify)
        }
        Command::Check(a) => commands::check(
            &mut out,
            cli.format,
            &a.family,
            a.input.as_deref(),
            a.expect_free,
        ),
        Command::Oracle(a) => commands::oracle(&mut out, cli.format, &a, cli.budget),
        Command::Audit(a) => commands::audit(&mut out, cli.format, a.k, a.n_max),
        Command::Table(a) => commands::table(&mut out, cli.format, a.problem, a.k, a.r, a.n),
    };
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Ok(()), Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        (Err(CliError::Usage(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        (Err(CliError::Failed(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
