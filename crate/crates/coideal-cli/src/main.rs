mod commands;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coideal_lab::coefficients::Bicharacter;
use coideal_lab::scalar::{CyclotomicScalar, LaurentScalar, Mode, Scalar};
use coideal_lab::shuffle::Algebra;
use serde_json::Value;

use crate::verify::Suite;

#[derive(Parser, Debug)]
#[command(
    name = "coideal-lab",
    version,
    about = "Exact computations in U_q^+(so_2n+1) and its right coideal subalgebras"
)]
struct Cli {
    /// Rank n. Defaults to 2, or to the rank of --bicharacter.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Generic q, or q a primitive t-th root of unity. Implied by --t.
    #[arg(long, global = true, value_enum)]
    mode: Option<ModeArg>,
    /// Order of q in cyclotomic mode (t > 4).
    #[arg(long, global = true)]
    t: Option<u32>,
    /// JSON file {n, parameters, matrix} with a custom bicharacter.
    #[arg(long, global = true, value_name = "FILE")]
    bicharacter: Option<PathBuf>,
    /// Largest total degree explored by span computations.
    #[arg(long, global = true, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
    degree_bound: u32,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ModeArg {
    Generic,
    Cyclotomic,
}

#[derive(Args, Debug, Clone)]
pub struct PhiArgs {
    /// Comma-separated set S, e.g. "1,2" or "".
    #[arg(long = "S", default_value = "", allow_hyphen_values = true)]
    pub set: String,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub m: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The element Φ^S(k,m): value, PBW decomposition, regularity and scheme.
    Phi(PhiArgs),
    /// Hopf coproduct of u[k,m] against the three-part formula; all (k,m) by default.
    Coproduct {
        #[arg(long, requires = "m")]
        k: Option<usize>,
        #[arg(long, requires = "k")]
        m: Option<usize>,
    },
    /// The subalgebra U_θ for a root sequence θ.
    Classify {
        /// Comma-separated root sequence, e.g. 5,1,0.
        #[arg(long)]
        theta: String,
    },
    /// Every U_θ of rank n.
    Enumerate,
    /// The inclusion Hasse diagram of all U_θ of rank n.
    Lattice,
    /// PBW decomposition of Φ^S(k,m) or of a product of letters.
    Decompose {
        #[arg(long = "S", allow_hyphen_values = true)]
        set: Option<String>,
        #[arg(long, requires = "m")]
        k: Option<usize>,
        #[arg(long, requires = "k")]
        m: Option<usize>,
        /// Comma-separated letters, e.g. 1,2,1 for x1·x2·x1.
        #[arg(long, conflicts_with_all = ["set", "k", "m"])]
        letters: Option<String>,
    },
    /// Run verification suites; exits 1 on the first failed assertion of any suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Option<Suite>,
    },
}

/// Resolved global options.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub n: usize,
    pub mode: Mode,
    pub bicharacter: Bicharacter,
    pub degree_bound: u32,
    pub json: bool,
}

/// What a command produced.
pub struct Report {
    pub text: String,
    pub json: Value,
    /// True when a comparison or verification failed.
    pub failed: bool,
}

/// Bad input or an unsupported configuration.
#[derive(Debug)]
pub struct InputError(pub String);

impl From<coideal_lab::error::Error> for InputError {
    fn from(e: coideal_lab::error::Error) -> Self {
        InputError(e.to_string())
    }
}

fn resolve(cli: &Cli) -> Result<RunConfig, InputError> {
    let mode = match (cli.mode, cli.t) {
        (Some(ModeArg::Generic), Some(_)) => return Err(InputError("--t requires cyclotomic mode".into())),
        (Some(ModeArg::Cyclotomic), None) => return Err(InputError("cyclotomic mode requires --t".into())),
        (_, Some(t)) if t <= 4 => return Err(InputError(format!("--t must exceed 4, got {t}"))),
        (_, Some(t)) => Mode::Cyclotomic(t),
        _ => Mode::Generic,
    };
    let bicharacter = match &cli.bicharacter {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))?;
            let bc = Bicharacter::from_json(&text)?;
            if cli.n.is_some_and(|n| n != bc.n()) {
                return Err(InputError(format!(
                    "--n {} disagrees with the bicharacter rank {}",
                    cli.n.unwrap(),
                    bc.n()
                )));
            }
            bc
        }
        None => {
            let n = cli.n.unwrap_or(2);
            if n == 0 {
                return Err(InputError("--n must be positive".into()));
            }
            Bicharacter::default_for(n)
        }
    };
    Ok(RunConfig { n: bicharacter.n(), mode, bicharacter, degree_bound: cli.degree_bound, json: cli.json })
}

fn dispatch<S: Scalar>(cfg: &RunConfig, command: &Command) -> Result<Report, InputError> {
    let alg: Algebra<S> = Algebra::new(cfg.bicharacter.clone(), cfg.mode)?;
    match command {
        Command::Phi(args) => commands::phi(cfg, &alg, args),
        Command::Coproduct { k, m } => commands::coproduct(&alg, k.zip(*m)),
        Command::Classify { theta } => commands::classify(cfg, &alg, theta),
        Command::Enumerate => commands::enumerate(cfg),
        Command::Lattice => commands::lattice(cfg, &alg),
        Command::Decompose { set, k, m, letters } => {
            commands::decompose(&alg, set.as_deref(), k.zip(*m), letters.as_deref())
        }
        Command::Verify { suite } => verify::run(cfg, &alg, *suite),
    }
}

fn configure_threads() -> Result<(), InputError> {
    if let Ok(v) = std::env::var("COIDEAL_LAB_THREADS") {
        let k: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|&k| k > 0)
            .ok_or_else(|| InputError(format!("COIDEAL_LAB_THREADS must be a positive integer, got '{v}'")))?;
        rayon::ThreadPoolBuilder::new().num_threads(k).build_global().map_err(|e| InputError(e.to_string()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = configure_threads().and_then(|_| resolve(&cli)).and_then(|cfg| {
        let report = match cfg.mode {
            Mode::Generic => dispatch::<LaurentScalar>(&cfg, &cli.command),
            Mode::Cyclotomic(_) => dispatch::<CyclotomicScalar>(&cfg, &cli.command),
        }?;
        Ok((cfg, report))
    });
    match outcome {
        Ok((cfg, report)) => {
            let out = if cfg.json {
                format!("{}\n", serde_json::to_string_pretty(&report.json).expect("serializable"))
            } else {
                report.text
            };
            // A closed pipe downstream is not an error of ours.
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            if report.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
