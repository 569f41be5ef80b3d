//! `frobex`: builds Frobenius algebras from named families or presentation
//! files and reports characteristic elements and semisimplicity.
//!
//! Exit codes: 0 success, 2 invalid input, 3 a mathematical invariant failed.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use frobex::presentation::parse_scalar;
use frobex::Rational;

use frobex_cli::report::Report;
use frobex_cli::run::{self, Options};

#[derive(Parser)]
#[command(name = "frobex", version, about = "Exact Frobenius algebras and quantum cohomology")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Specialize q to this nonzero rational (repeatable)
    #[arg(long, value_name = "R", allow_hyphen_values = true, value_parser = parse_rational)]
    specialize: Vec<Rational>,
    /// Semisimplicity tests to run, comma-separated (default: all)
    #[arg(long, value_delimiter = ',')]
    tests: Option<Vec<String>>,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
    /// Include per-phase timings
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct Flavor {
    #[arg(long, conflicts_with = "quantum")]
    classical: bool,
    /// Default
    #[arg(long)]
    quantum: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Cohomology of the Grassmannian of k-planes in C^n
    Grassmannian {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        flavor: Flavor,
        /// Compare the Hessian of the potential with omega
        #[arg(long)]
        verify_theorem: bool,
        /// Largest algebra dimension to build
        #[arg(long, default_value_t = run::default_cap())]
        cap: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Projective space of lines in C^n (the case k = 1)
    Projective {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        flavor: Flavor,
        #[arg(long)]
        verify_theorem: bool,
        #[arg(long, default_value_t = run::default_cap())]
        cap: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Complete intersection of even dimension from its ring relations
    Hypersurface {
        /// Complex dimension n (even)
        #[arg(long)]
        dim: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
        /// Rank of the primitive middle cohomology
        #[arg(long)]
        primitive_rank: usize,
        /// File with the intersection matrix of the primitive classes
        #[arg(long)]
        pairing: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Any presentation file
    Analyze {
        #[arg(long)]
        presentation: PathBuf,
        /// `auto` or a file of basis values
        #[arg(long)]
        functional: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    parse_scalar::<Rational>(s).map_err(|e| e.to_string())
}

fn options(c: &Common) -> Options {
    Options { specialize: c.specialize.clone(), tests: c.tests.clone(), timings: c.timings }
}

fn execute(cmd: &Command) -> anyhow::Result<(Report, bool)> {
    Ok(match cmd {
        Command::Grassmannian { k, n, flavor, verify_theorem, cap, common } => {
            (run::grassmannian(*k, *n, !flavor.classical, *verify_theorem, *cap, &options(common))?, common.json)
        }
        Command::Projective { n, flavor, verify_theorem, cap, common } => {
            (run::grassmannian(1, *n, !flavor.classical, *verify_theorem, *cap, &options(common))?, common.json)
        }
        Command::Hypersurface { dim, degrees, primitive_rank, pairing, common } => (
            run::hypersurface(*dim, degrees.clone(), *primitive_rank, pairing.as_deref(), &options(common))?,
            common.json,
        ),
        Command::Analyze { presentation, functional, common } => {
            (run::analyze(presentation, functional.as_deref(), &options(common))?, common.json)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli.command) {
        Ok((report, json)) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(frobex_cli::exit_code(&e))
        }
    }
}
