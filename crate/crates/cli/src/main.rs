//! `intpoly`: integer-valued polynomials, quadratic ideals and WPC checks
//! from the command line.
//!
//! Exit codes: 0 success, 1 a mathematical negative (not a member, not
//! Pólya, not WPC), 2 usage, parse, budget or internal errors.

mod commands;
mod report;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use intpoly::domain::DomainSpec;
use report::Format;

#[derive(Parser)]
#[command(name = "intpoly", version, about = "Exact computations with integer-valued polynomials")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    format: Format,

    /// Write the result to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Worker threads. Output bytes do not depend on this.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
pub struct PolyInput {
    /// Comma-separated coefficients, constant term first.
    #[arg(long)]
    poly: Option<String>,
    /// File holding the coefficient list.
    #[arg(long)]
    poly_file: Option<PathBuf>,
}

impl PolyInput {
    pub fn text(&self) -> anyhow::Result<String> {
        match (&self.poly, &self.poly_file) {
            (Some(s), _) => Ok(s.clone()),
            (None, Some(path)) => Ok(read_input(path)?.split_whitespace().collect::<Vec<_>>().join("")),
            (None, None) => unreachable!("clap enforces the group"),
        }
    }
}

#[derive(Subcommand)]
pub enum Command {
    /// Regular basis G_0..G_N.
    Basis {
        #[arg(long)]
        domain: DomainSpec,
        #[arg(long)]
        upto: u64,
    },
    /// Decide whether a polynomial maps D into D.
    Membership {
        #[arg(long)]
        domain: DomainSpec,
        #[command(flatten)]
        poly: PolyInput,
    },
    /// Coordinates of a polynomial in the regular basis.
    Expand {
        #[arg(long)]
        domain: DomainSpec,
        #[command(flatten)]
        poly: PolyInput,
        /// Basis length; defaults to the degree of the polynomial.
        #[arg(long)]
        upto: Option<u64>,
    },
    /// Factorial and characteristic ideals for n = 0..=N.
    Ideals {
        #[arg(long)]
        domain: DomainSpec,
        #[arg(long)]
        upto: u64,
    },
    /// Pólya-Ostrowski group of one field, or a sweep over radicands.
    Pog {
        #[arg(long, required_unless_present = "sweep_from", conflicts_with_all = ["sweep_from", "sweep_to"])]
        domain: Option<DomainSpec>,
        #[arg(long, allow_hyphen_values = true, requires = "sweep_to")]
        sweep_from: Option<i64>,
        #[arg(long, allow_hyphen_values = true, requires = "sweep_from")]
        sweep_to: Option<i64>,
    },
    /// Class group of an imaginary quadratic field.
    Classgroup {
        #[arg(long)]
        domain: DomainSpec,
    },
    /// Presentation certificate up to a degree bound.
    VerifyPresentation {
        #[arg(long)]
        domain: DomainSpec,
        /// Prime power; defaults to p for Zloc:p.
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        maxdeg: u64,
    },
    /// Relations of the Fermat towers for several q.
    VerifyRelations {
        #[arg(long)]
        domain: DomainSpec,
        #[arg(long, value_delimiter = ',', required = true)]
        q: Vec<u64>,
        #[arg(long)]
        depth: usize,
    },
    /// Congruence conditions of a finite Z-algebra given as JSON.
    Wpc {
        /// Path to the algebra, or - for stdin.
        #[arg(long)]
        algebra: PathBuf,
        /// Also run the per-prime condition suite.
        #[arg(long)]
        conditions: bool,
    },
    /// Splitting of primes up to a bound in Q(sqrt d).
    SplitAnalysis {
        #[arg(long)]
        domain: DomainSpec,
        #[arg(long)]
        bound: u64,
    },
    /// Table of w_k(n).
    WTable {
        #[arg(long)]
        kmax: u64,
        #[arg(long)]
        nmax: u64,
    },
}

pub fn read_input(path: &PathBuf) -> anyhow::Result<String> {
    let mut s = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut s)?;
    } else {
        s = std::fs::read_to_string(path).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))?;
    }
    Ok(s)
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let report = match cli.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()?
            .install(|| commands::dispatch(&cli.command))?,
        None => commands::dispatch(&cli.command)?,
    };
    let bytes = report.render(cli.format)?;
    match &cli.output {
        Some(path) => std::fs::write(path, bytes)?,
        None => std::io::stdout().write_all(&bytes)?,
    }
    Ok(report.negative)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
