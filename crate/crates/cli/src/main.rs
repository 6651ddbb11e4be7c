//! permdn: analyze permutation groups given by generators.
//!
//! Exit codes: 0 ok, 1 verification failed, 2 input error, 3 budget
//! exhausted (partial result printed), 4 precondition not met.

mod output;
mod run;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "permdn", version, about = "Permutation-group distinguishing numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Random,
    Exact,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Tsv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Full classification report: transitivity, primitivity classes and
    /// the distinguishing number with a certificate.
    Analyze {
        file: PathBuf,
        /// Cap on elements scanned by the classification predicates.
        #[arg(long, default_value_t = 10_000_000)]
        cap: u64,
        /// Cap on colorings examined per exhaustive refutation.
        #[arg(long, default_value_t = 1 << 25)]
        budget: u64,
        /// Random trials per color count.
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        /// Seed for randomized searches (required with CI_DETERMINISTIC=1).
        #[arg(long)]
        seed: Option<u64>,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Distinguishing-number computation as JSON, or a single-k verdict.
    Distinguish {
        file: PathBuf,
        /// Restrict to one color count and report its verdict.
        #[arg(short, long)]
        k: Option<usize>,
        /// Search mode for --k: random sampling or exhaustive.
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        #[arg(long, default_value_t = 1 << 25)]
        budget: u64,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long)]
        seed: Option<u64>,
        /// Render certificates as partitions instead of color strings.
        #[arg(long)]
        as_partition: bool,
    },
    /// Re-check a coloring: exit 0 if distinguishing, 1 with a witness if
    /// not.
    Verify {
        file: PathBuf,
        /// Comma-separated color per point, e.g. 0,1,0,2.
        coloring: String,
        #[arg(long)]
        as_partition: bool,
    },
    /// Print a maximal block system, the quotient record, the kernel order
    /// and a lifted certificate when the preconditions hold.
    Reduce {
        file: PathBuf,
        #[arg(long, default_value_t = 1 << 25)]
        budget: u64,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long)]
        seed: Option<u64>,
        /// Also write the quotient record to this path.
        #[arg(long)]
        quotient_out: Option<PathBuf>,
    },
    /// Reproduce the bundled catalog: expected vs computed distinguishing
    /// numbers. Exits nonzero iff a decided value contradicts the table.
    Tables {
        /// Catalog file; defaults to the bundled one.
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long, default_value_t = 1 << 25)]
        budget: u64,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = TableFormat::Tsv)]
        out: TableFormat,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Analyze {
            file,
            cap,
            budget,
            trials,
            seed,
            json,
        } => run::analyze(&file, cap, budget, trials, seed, json),
        Command::Distinguish {
            file,
            k,
            mode,
            budget,
            trials,
            seed,
            as_partition,
        } => run::distinguish(&file, k, mode, budget, trials, seed, as_partition),
        Command::Verify {
            file,
            coloring,
            as_partition,
        } => run::verify(&file, &coloring, as_partition),
        Command::Reduce {
            file,
            budget,
            trials,
            seed,
            quotient_out,
        } => run::reduce(&file, budget, trials, seed, quotient_out.as_deref()),
        Command::Tables {
            catalog,
            budget,
            trials,
            seed,
            out,
        } => run::tables(catalog.as_deref(), budget, trials, seed, out),
    };
    match code {
        Ok(c) => ExitCode::from(c),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
