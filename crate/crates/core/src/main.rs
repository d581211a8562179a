use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use betti_core::io::{parse_diagram, render_diagram, Format};
use betti_core::rational::format_rational;
use betti_core::secant::{assemble_betti, verify_sweep};
use betti_core::{
    greedy_decompose, hochster_betti, multiplicity, pure_diagram, DegreeSequence, Error,
    SecantParams, SquarefreeIdeal,
};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Exact Betti diagrams, Boij–Söderberg decompositions and secant varieties of genus-2 curves.
#[derive(Parser)]
#[command(name = "betti", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the pure diagram of a degree sequence.
    Pure {
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        sequence: Vec<i64>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Print the Betti diagram of the k-th secant variety of a genus-2 curve.
    #[command(group(ArgGroup::new("ambient").required(true).args(["r", "degree"])))]
    Secant {
        #[arg(long)]
        k: u32,
        /// Dimension of the ambient projective space.
        #[arg(long)]
        r: Option<i64>,
        /// Degree of the embedding line bundle (r = degree - 2).
        #[arg(long)]
        degree: Option<i64>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Decompose a diagram into pure diagrams.
    Decompose {
        #[arg(long)]
        input: PathBuf,
        /// Input format; inferred from the file extension when omitted.
        #[arg(long, value_enum)]
        input_format: Option<Format>,
    },
    /// Print the multiplicity of a diagram.
    Multiplicity {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        input_format: Option<Format>,
    },
    /// Betti diagram of S/I for a squarefree monomial ideal I.
    Hochster {
        #[arg(long)]
        vars: usize,
        #[arg(long, allow_hyphen_values = true)]
        ideal: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Verify the secant diagrams over a (k, r) grid.
    Verify {
        #[arg(long, default_value_t = 0)]
        k_min: u32,
        #[arg(long, default_value_t = 6)]
        k_max: u32,
        /// Number of r values past the minimum r = 2k+3.
        #[arg(long, default_value_t = 12)]
        r_extra: i64,
        /// Print every check, not only failures.
        #[arg(long)]
        verbose: bool,
    },
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotInCone { reason, residual } => Failure::Check(format!(
                "not in the cone of pure diagrams: {reason}\nresidual:\n{}",
                render_diagram(&residual, Format::Table)
            )),
            e @ Error::NotDivisible { .. } => Failure::Check(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn read_diagram(path: &Path, format: Option<Format>) -> Result<betti_core::BettiDiagram, Failure> {
    let format = format.unwrap_or_else(|| match path.extension().and_then(|e| e.to_str()) {
        Some("csv") => Format::Csv,
        _ => Format::Json,
    });
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_diagram(&text, format)?)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Pure { sequence, format } => {
            let e = DegreeSequence::new(sequence)?;
            print!("{}", render_diagram(&pure_diagram(&e)?, format));
        }
        Command::Secant {
            k,
            r,
            degree,
            format,
        } => {
            let params = match (r, degree) {
                (Some(r), _) => SecantParams::new(k, r)?,
                (None, Some(d)) => SecantParams::from_degree(k, d)?,
                (None, None) => unreachable!("clap requires one of --r/--degree"),
            };
            print!("{}", render_diagram(&assemble_betti(&params)?, format));
        }
        Command::Decompose {
            input,
            input_format,
        } => {
            let d = read_diagram(&input, input_format)?;
            let t = greedy_decompose(&d)?;
            println!("# coefficient normalized sequence");
            print!("{t}");
            println!("# total {}", format_rational(&t.total()));
        }
        Command::Multiplicity {
            input,
            input_format,
        } => {
            let d = read_diagram(&input, input_format)?;
            println!("{}", format_rational(&multiplicity(&d)?));
        }
        Command::Hochster {
            vars,
            ideal,
            format,
        } => {
            let ideal = SquarefreeIdeal::parse(vars, &ideal)?;
            print!("{}", render_diagram(&hochster_betti(&ideal), format));
        }
        Command::Verify {
            k_min,
            k_max,
            r_extra,
            verbose,
        } => {
            if k_min > k_max || r_extra < 0 {
                return Err(Failure::Usage(
                    "need k-min <= k-max and r-extra >= 0".into(),
                ));
            }
            let reports = verify_sweep(k_min, k_max, r_extra);
            let mut failed = 0;
            for report in &reports {
                if verbose {
                    print!("{}", report.detailed());
                } else {
                    println!("{report}");
                }
                failed += usize::from(!report.passed());
            }
            println!(
                "{} grid points, {} passed, {} failed",
                reports.len(),
                reports.len() - failed,
                failed
            );
            if failed > 0 {
                return Err(Failure::Check(format!("{failed} grid points failed")));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_FAILURE)
        }
    }
}
