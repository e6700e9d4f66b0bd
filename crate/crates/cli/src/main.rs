//! Command-line front end: compute preclusion numbers with certificates,
//! verify certificates, generate the named graph families, and run the
//! desk-scale claim scans.
//!
//! Exit codes: 0 success/verified, 1 counterexample found or certificate
//! invalid, 2 usage or parse error.

#![forbid(unsafe_code)]

mod commands;
mod io;

use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "mprec", version, about = "Matching preclusion toolkit")]
pub struct Cli {
    /// Graph input format.
    #[arg(
        long,
        global = true,
        value_enum,
        env = "MPREC_FORMAT",
        default_value = "graph6"
    )]
    pub format: Format,

    /// Report format.
    #[arg(
        long,
        global = true,
        value_enum,
        env = "MPREC_OUTPUT",
        default_value = "text"
    )]
    pub output: Output,

    /// Seed for sampled scans.
    #[arg(long, global = true, env = "MPREC_SEED")]
    pub seed: Option<u64>,

    /// Worker threads for batch and scan parallelism (default: all cores).
    #[arg(long, global = true, env = "MPREC_THREADS")]
    pub threads: Option<usize>,

    /// Edge-count cap for the subset-enumeration oracle.
    #[arg(long, global = true, env = "MPREC_ORACLE_CAP", default_value_t = 16)]
    pub oracle_cap: usize,

    /// Order cap for exhaustive enumeration.
    #[arg(long, global = true, env = "MPREC_ENUM_CAP", default_value_t = 7)]
    pub enum_cap: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact preclusion number with a certificate, per input graph.
    Mp {
        /// Input path, or '-' for stdin.
        #[arg(default_value = "-")]
        input: String,
    },
    /// Closed-form upper bounds, per input graph.
    Bounds {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Check a certificate against a graph.
    Certify {
        #[arg(default_value = "-")]
        input: String,
        /// Certificate JSON (the schema emitted by `mp`).
        #[arg(long)]
        certificate: String,
    },
    /// Emit a named construction.
    Generate {
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
    },
    /// Check one registered claim.
    VerifyTheorem {
        id: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Run the whole registered-claim plan.
    Scan {
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Complement-pair scan at one order.
    NgScan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Brute-force extremal edge counts s/f/g at one order.
    #[command(name = "s-f-g")]
    SFG {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Complete,
    Empty,
    Path,
    Cycle,
    Star,
    NearPmPlusIsolated,
    CompleteMinusEdge,
    CompleteMinusP3,
    CompleteMinusMatching,
    OneFactorUnion,
    NearFactorUnion,
    HamUnion,
    FWitness,
    CliqueSatellites,
    UniversalFactors,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads.max(1))
            .build_global();
    }
    match commands::run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
