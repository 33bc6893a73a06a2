use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};
use serde_json::Value;

use codezeta::group::{EnumerationBound, DEFAULT_ENUMERATION_BOUND, ENUMERATION_BOUND_ENV};

mod input;
mod report;

#[derive(Parser)]
#[command(name = "codezeta", version, about = "Zeta functions of additive codes and small curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis of a code given as JSON.
    Analyze {
        file: PathBuf,
        /// Largest number of words any brute-force step may visit.
        #[arg(long, env = ENUMERATION_BOUND_ENV, default_value_t = DEFAULT_ENUMERATION_BOUND)]
        max_enum: u64,
        /// Truncation order of the zeta series and of PRRC.
        #[arg(long)]
        series_order: Option<usize>,
        /// Number of seeded perturbations of the dual distribution to test.
        #[arg(long, requires = "seed")]
        mutate: Option<usize>,
        #[arg(long, requires = "mutate")]
        seed: Option<u64>,
    },
    /// Weight counts of MDS codes of length n over an alphabet of size q.
    MdsTable {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
    },
    /// Point counts, zeta data and Riemann-Roch conditions for a plane curve.
    Curve {
        file: PathBuf,
        #[arg(long, default_value_t = 20)]
        order: usize,
    },
}

/// `Some(passed)` for reports carrying verdicts.
fn run(cli: Cli) -> Result<(Value, Option<bool>)> {
    match cli.command {
        Command::Analyze {
            file,
            max_enum,
            series_order,
            mutate,
            seed,
        } => {
            let code = input::read_code_spec(&file)?.build(EnumerationBound(max_enum))?;
            let opts = report::AnalyzeOptions {
                series_order,
                mutate: mutate.zip(seed),
            };
            let r = report::analyze(&code, &opts)?;
            Ok((r.body, Some(r.passed)))
        }
        Command::MdsTable { n, q } => Ok((report::mds_table(n, q)?, None)),
        Command::Curve { file, order } => {
            let curve = input::read_curve_spec(&file)?.build()?;
            let r = report::curve(&curve, order)?;
            Ok((r.body, Some(r.passed)))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors are input errors; help and version are not errors
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok((body, passed)) => {
            println!("{}", serde_json::to_string(&body).expect("serializable"));
            if passed == Some(false) {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
