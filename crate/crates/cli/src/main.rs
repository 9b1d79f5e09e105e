//! `chromzero`: zero-free disks, exact identity checks and subtree series
//! for chromatic polynomials of small graphs.

mod commands;
mod output;
mod source;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::Format;
use source::GraphArgs;

#[derive(Parser, Debug)]
#[command(name = "chromzero", version, about = "Zero-free disks for chromatic polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum, env = "CHROMZERO_FORMAT")]
    format: Option<Format>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Zero-free radii for one graph, or the degree-only radii for --delta.
    Bounds(BoundsArgs),
    /// Degree-only radii next to the complete-graph radius and the true
    /// root radius of K_{Δ+1}.
    Table1,
    /// Exact identity checks and root containment for one graph.
    Verify(VerifyArgs),
    /// Rooted-subtree counts from the neighborhood profile (or the binomial
    /// profile for --delta), with radius of convergence and threshold.
    Series(SeriesArgs),
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub source: GraphArgs,
    /// Truncation order of the series form of the graph bound.
    #[arg(long, default_value_t = 64)]
    pub order: usize,
    /// Relative residual every computed chromatic root must meet.
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub source: GraphArgs,
    /// Largest polymer size for the activity bound, and the truncation order
    /// of the convergence check.
    #[arg(long, default_value_t = 5)]
    pub order: usize,
    /// Evaluation point for the partition identity (default: 2, 3, 5 and 10)
    /// and the convergence check.
    #[arg(long)]
    pub q: Option<f64>,
    /// Run the convergence check with this `a` (requires --q).
    #[arg(long, requires = "q")]
    pub a: Option<f64>,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    #[command(flatten)]
    pub source: GraphArgs,
    /// Number of coefficients.
    #[arg(long, default_value_t = 10)]
    pub order: usize,
    /// Also report the largest x with T(x)/x ≤ b.
    #[arg(long)]
    pub b: Option<f64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Bounds(args) => commands::bounds(args),
        Command::Table1 => commands::table1(),
        Command::Verify(args) => commands::verify(args),
        Command::Series(args) => commands::series(args),
    };
    let outcome = match result {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let format = cli.format.unwrap_or(outcome.default_format);
    if let Err(e) = output::emit(&outcome.rendered, format) {
        eprintln!("error: writing output: {e}");
        return ExitCode::from(commands::EXIT_ERROR);
    }
    for failure in &outcome.failures {
        eprintln!("check failed: {failure}");
    }
    if outcome.failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(commands::EXIT_CHECK_FAILED)
    }
}
