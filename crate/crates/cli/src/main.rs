//! `workbench`: load simplicial sets and maps, run lifting checks, and emit
//! reports and excluded-middle certificates as canonical JSON.
//!
//! Exit codes: 0 the property holds or the construction succeeded, 1 the
//! property fails, 2 invalid input, 3 a precondition is unmet.

mod build;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;
use workbench_core::interchange::to_canonical_json;

#[derive(Parser, Debug)]
#[command(name = "workbench", version, about = "Finite simplicial sets, lifting checks and excluded-middle certificates")]
struct Cli {
    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check every invariant of a simplicial set file.
    Validate { sset: PathBuf },
    /// Right lifting property of a map against a family of monos.
    Check {
        #[arg(long)]
        map: PathBuf,
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        min: Option<usize>,
        /// Defaults to dim(total space) + 2.
        #[arg(long)]
        max: Option<usize>,
    },
    /// Split the base into the image and its complement.
    Decompose {
        #[arg(long)]
        map: PathBuf,
    },
    /// Is the map propositional (lifts against ∂Δⁿ ↪ Δⁿ for 1 ≤ n ≤ bound)?
    Prop {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        bound: Option<usize>,
        /// Also run the homotopy oracle (small inputs only).
        #[arg(long)]
        homotopy: bool,
    },
    /// Build an excluded-middle certificate.
    Lem {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Re-check a certificate against its map.
    Verify {
        #[arg(long)]
        cert: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
    /// Construct standard objects.
    Build {
        /// Write each object to its own file in this directory.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[command(subcommand)]
        what: build::BuildCommand,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FamilyArg {
    Boundary,
    Horn,
    Prism,
}

/// What a command produced: a JSON document and an exit code.
pub struct Outcome {
    pub code: u8,
    pub report: Value,
}

impl Outcome {
    pub fn new(code: u8, report: Value) -> Self {
        Outcome { code, report }
    }
}

/// Errors that end a command early, with their exit code.
#[derive(Debug)]
pub enum Failure {
    Invalid(String),
    Precondition(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Invalid(_) => 2,
            Failure::Precondition(_) => 3,
        }
    }

    fn report(&self) -> Value {
        let (kind, message) = match self {
            Failure::Invalid(m) => ("invalid_input", m),
            Failure::Precondition(m) => ("precondition_unmet", m),
        };
        serde_json::json!({ "error": { "kind": kind, "message": message } })
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("WORKBENCH_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .map_err(|_| Failure::Invalid(format!("WORKBENCH_THREADS must be a number, got `{value}`")))?;
    if threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Failure::Invalid(e.to_string()))?;
    }
    Ok(())
}

fn dispatch(cli: Cli) -> Result<Outcome, Failure> {
    configure_threads()?;
    match cli.command {
        Command::Validate { sset } => commands::validate(&sset),
        Command::Check {
            map,
            family,
            min,
            max,
        } => commands::check(&map, family, min, max),
        Command::Decompose { map } => commands::decompose(&map),
        Command::Prop {
            map,
            bound,
            homotopy,
        } => commands::prop(&map, bound, homotopy),
        Command::Lem { map, bound } => commands::lem(&map, bound),
        Command::Verify { cert, map } => commands::verify(&cert, &map),
        Command::Build { out_dir, what } => build::run(what, out_dir.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.clone();
    let outcome = dispatch(cli).unwrap_or_else(|f| {
        let message = match &f {
            Failure::Invalid(m) | Failure::Precondition(m) => m.clone(),
        };
        eprintln!("workbench: {message}");
        Outcome::new(f.code(), f.report())
    });
    let text = to_canonical_json(&outcome.report);
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, text) {
                eprintln!("workbench: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(outcome.code)
}
