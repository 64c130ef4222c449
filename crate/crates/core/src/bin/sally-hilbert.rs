use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use sally_hilbert::classify::{classify, Status};
use sally_hilbert::problem::{builtin_example, BuiltinParams, ProblemSpec};
use sally_hilbert::report::{emit_classification, emit_hilbert, emit_report, Format};
use sally_hilbert::selftest::{self, DEFAULT_SEED};
use sally_hilbert::Error;

/// Hilbert coefficients, Sally modules and reduction numbers of m-primary ideals.
#[derive(Parser)]
#[command(name = "sally-hilbert", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the random suites of `selftest`.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Prime used by the local engine, overriding the spec.
    #[arg(long, global = true)]
    prime: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lengths, Hilbert data, Sally data and classification.
    Invariants { spec: PathBuf },
    /// Classification only.
    Classify { spec: PathBuf },
    /// Hilbert function and polynomial.
    Hilbert {
        spec: PathBuf,
        #[arg(long = "n-max")]
        n_max: Option<usize>,
    },
    /// Print the spec of a built-in example (ex32 or sec5).
    Example {
        name: String,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        lambda: Vec<usize>,
    },
    /// Run the acceptance catalog.
    Selftest,
}

enum Failure {
    Usage(String),
    Compute(Error),
    Theorem(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e.root() {
            Error::Parse { .. }
            | Error::UnknownVariable(_)
            | Error::ZeroPolynomial
            | Error::InvalidSpec(_)
            | Error::BadCharacteristic(_) => Failure::Usage(e.to_string()),
            Error::TheoremViolation(_) => Failure::Theorem(e.to_string()),
            _ => Failure::Compute(e),
        }
    }
}

fn load(path: &PathBuf, prime: Option<u64>) -> Result<ProblemSpec, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let mut spec = ProblemSpec::from_json(&text)?;
    if prime.is_some() {
        spec.options.prime = prime;
    }
    Ok(spec)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let format = if cli.json { Format::Json } else { Format::Text };
    match cli.command {
        Command::Invariants { spec } => {
            let spec = load(&spec, cli.prime)?;
            let analysis = spec.validate()?.analyze()?;
            let c = classify(&analysis);
            print!("{}", emit_report(&spec, &analysis, &c, format));
            finish(c.status)
        }
        Command::Classify { spec } => {
            let spec = load(&spec, cli.prime)?;
            let analysis = spec.validate()?.analyze()?;
            let c = classify(&analysis);
            print!("{}", emit_classification(&c, format));
            finish(c.status)
        }
        Command::Hilbert { spec, n_max } => {
            let spec = load(&spec, cli.prime)?;
            let problem = spec.validate()?;
            let n_max = n_max
                .or(spec.options.n_max)
                .unwrap_or_else(|| sally_hilbert::hilbert::default_n_max(problem.d));
            let (h, order) = problem.hilbert(n_max)?;
            print!("{}", emit_hilbert(&h, order, format));
            Ok(())
        }
        Command::Example { name, m, d, lambda } => {
            let mut spec = builtin_example(&name, &BuiltinParams { m, d, lambda })?;
            if cli.prime.is_some() {
                spec.options.prime = cli.prime;
            }
            println!("{}", spec.to_json());
            Ok(())
        }
        Command::Selftest => {
            let report = selftest::run(cli.seed.unwrap_or(DEFAULT_SEED));
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                println!("{report}");
            }
            if report.passed {
                Ok(())
            } else {
                Err(Failure::Theorem("selftest FAILED".into()))
            }
        }
    }
}

fn finish(status: Status) -> Result<(), Failure> {
    match status {
        Status::Pass => Ok(()),
        Status::Failed => Err(Failure::Theorem("classification cross-check FAILED".into())),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Compute(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Theorem(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
