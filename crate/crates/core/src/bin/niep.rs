use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use niep::cli::{run, Command, Format, Input, JobSpec, OutputSpec, Params, EXIT_IO};
use niep::{GuoVariant, Pairing, Sign};

/// Nonnegative matrices with prescribed spectra, verified.
///
/// Inputs are JSON files or inline JSON text. Exit status: 0 ok, 1 I/O or
/// parse error, 2 a named condition failed, 3 verification failed.
#[derive(Parser, Debug)]
#[command(name = "niep", version)]
struct Args {
    /// check | realize-suleimanova | realize-pair | compose-even | compose-odd |
    /// compose-odd-sym | circulant | guo | guo-pair | verify | extract | batch
    command: String,
    /// Input files or inline JSON, in the order the command expects.
    inputs: Vec<String>,
    /// Scale of the second factor, in [0, 1] (default 1)
    #[arg(long)]
    gamma: Option<f64>,
    /// Sign of the second factor: + or - (default +)
    #[arg(long, allow_hyphen_values = true)]
    sign: Option<Sign>,
    /// Perturbation size for `guo`, at least 0
    #[arg(long)]
    t: Option<f64>,
    /// Perturbation of the first circulant for `guo-pair`
    #[arg(long)]
    t1: Option<f64>,
    /// Signed perturbation of the second circulant for `guo-pair`, |t2| <= t1 (default 0)
    #[arg(long, allow_hyphen_values = true)]
    t2: Option<f64>,
    /// Angle of the complex perturbation (default 0)
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<f64>,
    /// Branch of the perturbation: + or - (default +)
    #[arg(long, allow_hyphen_values = true)]
    branch: Option<Sign>,
    /// general | even-middle (default general)
    #[arg(long)]
    variant: Option<GuoVariant>,
    /// Comma-separated split of the last row of S (first members).
    #[arg(long, value_delimiter = ',')]
    phi1: Option<Vec<f64>>,
    /// Comma-separated split of the last row of S (second members).
    #[arg(long, value_delimiter = ',')]
    phi2: Option<Vec<f64>>,
    /// Verification tolerance; overrides NIEP_TOL and the default.
    #[arg(long)]
    tol: Option<f64>,
    /// How `realize-pair` pairs the lists: sorted | search | given (default sorted)
    #[arg(long)]
    pairing: Option<Pairing>,
    /// Largest power sum checked by `check`.
    #[arg(long)]
    k: Option<u32>,
    /// Largest exponent of the power-sum inequality checked by `check`.
    #[arg(long)]
    m: Option<u32>,
    /// json | csv | pretty
    #[arg(long, default_value = "json")]
    format: Format,
    /// Write the result here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let command: Command = match args.command.parse() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("niep: {e}");
            return ExitCode::from(EXIT_IO as u8);
        }
    };
    let job = JobSpec {
        command,
        inputs: args.inputs.into_iter().map(Input::Text).collect(),
        params: Params {
            gamma: args.gamma,
            sign: args.sign,
            t: args.t,
            t1: args.t1,
            t2: args.t2,
            theta: args.theta,
            branch: args.branch,
            variant: args.variant,
            phi1: args.phi1,
            phi2: args.phi2,
            tol: args.tol,
            pairing: args.pairing,
            k: args.k,
            m: args.m,
        },
        output: OutputSpec {
            path: args.out.clone(),
            format: args.format,
        },
    };
    let outcome = run(&job);
    match &args.out {
        Some(path) if outcome.exit_code != EXIT_IO => {
            eprintln!(
                "niep: {} -> {} (exit {})",
                command.name(),
                path.display(),
                outcome.exit_code
            );
        }
        _ => print!("{}", outcome.text),
    }
    ExitCode::from(outcome.exit_code as u8)
}
