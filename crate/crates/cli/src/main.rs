//! `milnor-spectra`: monodromy invariants of hyperplane arrangements from the
//! command line. Every command builds a JSON report; the text output is
//! rendered from that same report.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use milnor_core::{Arrangement, ExponentConvention};
use serde_json::{json, Value};

pub const THREADS_ENV: &str = "MILNOR_SPECTRA_THREADS";

#[derive(Parser, Debug)]
#[command(name = "milnor-spectra", version, about = "Milnor fiber monodromy of hyperplane arrangements")]
struct Cli {
    #[command(flatten)]
    input: InputArgs,

    /// Emit the JSON report instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Include wall-clock timing in the report
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Arrangement file
    #[arg(short, long, global = true, value_name = "FILE", conflicts_with = "builtin")]
    input: Option<PathBuf>,

    /// Built-in family, e.g. `braid:3`, `ceva:3`, `generic:2,5`, `triangle-medians`
    #[arg(long, global = true, value_name = "NAME[:PARAMS]")]
    builtin: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse the input and echo its canonical form
    Validate,
    /// Intersection lattice, Möbius values, Poincaré polynomial, Euler characteristic
    Lattice,
    /// Admissible eigenvalue orders per homology degree
    Bounds {
        /// Only this homology degree
        #[arg(long)]
        degree: Option<usize>,
        /// Use every stratum as a witness, not only dense ones
        #[arg(long)]
        all_strata: bool,
        /// Also report orders refined by the local monodromy at vertices
        #[arg(long)]
        refined: bool,
    },
    /// Monodromy zeta function and eigenvalue-one multiplicities
    Zeta,
    /// Characteristic polynomial of the monodromy on first homology
    Charpoly {
        /// Reduce to a generic plane section when the ambient dimension exceeds 2
        #[arg(long)]
        section: bool,
        #[command(flatten)]
        opts: SpectrumOpts,
    },
    /// Generic linear section of dimension K
    Section {
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Everything applicable, with cross-checks
    Report {
        #[command(flatten)]
        opts: SpectrumOpts,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct SpectrumOpts {
    /// Seed for the generic section
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Vanishing-order rule at vertices: reconciled, strict, paper-theorem
    #[arg(long, default_value = "reconciled")]
    exponent_convention: ExponentConvention,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Lattice => "lattice",
            Command::Bounds { .. } => "bounds",
            Command::Zeta => "zeta",
            Command::Charpoly { .. } => "charpoly",
            Command::Section { .. } => "section",
            Command::Report { .. } => "report",
        }
    }
}

/// A failure with a stable code; `internal` selects exit status 2.
#[derive(Debug)]
pub struct Failure {
    pub code: &'static str,
    pub message: String,
    pub internal: bool,
}

impl Failure {
    pub fn input(code: &'static str, message: impl Into<String>) -> Self {
        Self { code, message: message.into(), internal: false }
    }
}

impl From<milnor_core::Error> for Failure {
    fn from(e: milnor_core::Error) -> Self {
        Self { code: e.code(), message: e.to_string(), internal: e.is_internal() }
    }
}

fn load(input: &InputArgs) -> Result<(String, Arrangement), Failure> {
    match (&input.input, &input.builtin) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::input("IoError", format!("{}: {e}", path.display())))?;
            Ok((path.display().to_string(), milnor_core::parse_arrangement(&text)?))
        }
        (None, Some(spec)) => Ok((format!("builtin:{spec}"), milnor_core::builtin::parse_builtin_spec(spec)?)),
        (None, None) => Err(Failure::input("MissingInput", "pass --input FILE or --builtin NAME[:PARAMS]")),
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var(THREADS_ENV) else { return Ok(()) };
    let n: usize = raw
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::input("InvalidArgument", format!("{THREADS_ENV} must be a positive integer, got `{raw}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::input("InvalidArgument", e.to_string()))
}

fn execute(cli: &Cli) -> Result<(Value, Value, bool), Failure> {
    configure_threads()?;
    let (source, a) = load(&cli.input)?;
    let echo = json!({
        "source": source,
        "ambient_dim": a.ambient_dim(),
        "d": a.d(),
        "hyperplanes": a.hyperplanes().iter().map(ToString::to_string).collect::<Vec<_>>(),
    });
    let (result, ok) = match &cli.command {
        Command::Validate => (commands::validate(&a), true),
        Command::Lattice => (commands::lattice(&a)?, true),
        Command::Bounds { degree, all_strata, refined } => (commands::bounds(&a, *degree, !all_strata, *refined)?, true),
        Command::Zeta => (commands::zeta(&a)?, true),
        Command::Charpoly { section, opts } => {
            (commands::charpoly(&a, *section, opts.seed, opts.exponent_convention)?, true)
        }
        Command::Section { k, seed } => (commands::section(&a, *k, *seed)?, true),
        Command::Report { opts } => commands::report(&a, opts.seed, opts.exponent_convention)?,
    };
    Ok((echo, result, ok))
}

fn envelope(command: &str) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("tool".into(), json!("milnor-spectra"));
    m.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    m.insert("command".into(), json!(command));
    m
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let start = Instant::now();
    let mut report = envelope(cli.command.name());
    let status = match execute(&cli) {
        Ok((echo, result, ok)) => {
            report.insert("input".into(), echo);
            report.insert("result".into(), result);
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(f) => {
            report.insert("error".into(), json!({ "code": f.code, "message": f.message }));
            if !cli.json {
                eprintln!("error [{}]: {}", f.code, f.message);
            }
            ExitCode::from(if f.internal { 2 } else { 1 })
        }
    };
    if cli.timing {
        report.insert("timing".into(), json!({ "elapsed_ms": start.elapsed().as_secs_f64() * 1e3 }));
    }
    let report = Value::Object(report);
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    } else if report.get("error").is_none() {
        print!("{}", render::text(&report));
    }
    status
}
