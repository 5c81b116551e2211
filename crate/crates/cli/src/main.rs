//! `catcov`: command-line access to the category-covering toolkit.
//!
//! Every verb writes a JSON report to `-o` (or stdout) and a one-line
//! summary to stderr. Exit codes: 0 success/true, 1 checked property
//! false, 2 input or validation error, 3 budget exhausted.

mod commands;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use catcov_core::frac::{Budget, DEFAULT_COSET_ROWS, DEFAULT_TIETZE_STEPS};

#[derive(Debug, Parser)]
#[command(name = "catcov", version, about = "Coverings and gradings of finite categories")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the JSON report here instead of stdout.
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,

    /// Also write a DOT rendering of the constructed category.
    #[arg(long = "dot", global = true)]
    pub dot: Option<PathBuf>,

    /// Row budget for coset enumeration.
    #[arg(long = "coset-rows", global = true, default_value_t = DEFAULT_COSET_ROWS)]
    pub coset_rows: usize,

    /// Relator-insertion depth for the word search.
    #[arg(long = "search-depth", global = true, default_value_t = 12)]
    pub search_depth: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and validate a category, functor or action file.
    Validate { file: PathBuf },
    /// Fundamental group presentation at a base object.
    Pi1 {
        file: PathBuf,
        #[arg(long)]
        base: String,
        #[arg(long = "max-tietze", default_value_t = DEFAULT_TIETZE_STEPS)]
        max_tietze: usize,
    },
    /// Abelian invariants of the fundamental group.
    Abelianize {
        file: PathBuf,
        /// Base object; defaults to the first object.
        #[arg(long)]
        base: Option<String>,
        #[arg(long = "max-tietze", default_value_t = DEFAULT_TIETZE_STEPS)]
        max_tietze: usize,
    },
    /// Check that a functor is a covering.
    CoverCheck { functor: PathBuf },
    /// Check that a functor is a Galois covering.
    GaloisCheck { functor: PathBuf },
    /// Orbit category of a free group action.
    Orbit { action: PathBuf },
    /// Smash product of a grading at a groupoid object.
    Smash {
        grading: PathBuf,
        #[arg(long)]
        point: String,
    },
    /// Decide whether a grading is effective.
    Effective { grading: PathBuf },
    /// Grading associated with a free action and a choice of orbit
    /// representatives (one `--section` per orbit; least by default).
    Grade {
        action: PathBuf,
        #[arg(long)]
        section: Vec<String>,
    },
    /// Rebuild a free action's category as the smash of its associated
    /// grading and check the isomorphism.
    Roundtrip {
        action: PathBuf,
        #[arg(long)]
        section: Vec<String>,
        /// Orbit-category object to smash at; defaults to the first.
        #[arg(long)]
        point: Option<String>,
    },
    /// Ball of the universal covering.
    Universal {
        file: PathBuf,
        #[arg(long)]
        base: String,
        #[arg(long)]
        radius: usize,
    },
    /// DOT rendering of a category file.
    Dot { file: PathBuf },
}

impl Cli {
    pub fn budget(&self, tietze_steps: usize) -> Budget {
        Budget {
            tietze_steps,
            coset_rows: self.coset_rows,
            search_depth: self.search_depth,
        }
    }
}

/// How a verb ended, beyond its report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    False,
    Unknown,
}

impl Status {
    fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::False => 1,
            Status::Unknown => 3,
        }
    }
}

/// A finished verb: report body, optional DOT text, stderr summary.
pub struct Outcome {
    pub report: String,
    pub dot: Option<String>,
    pub summary: String,
    pub status: Status,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] catcov_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
}

fn emit(cli: &Cli, outcome: &Outcome) -> Result<(), CliError> {
    match &cli.output {
        Some(path) => fs::write(path, &outcome.report).map_err(|source| CliError::Write {
            path: path.clone(),
            source,
        })?,
        None => print!("{}", outcome.report),
    }
    if let (Some(path), Some(dot)) = (&cli.dot, &outcome.dot) {
        fs::write(path, dot).map_err(|source| CliError::Write {
            path: path.clone(),
            source,
        })?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = commands::run(&cli).and_then(|outcome| {
        emit(&cli, &outcome)?;
        Ok(outcome)
    });
    match result {
        Ok(outcome) => {
            eprintln!("{}", outcome.summary);
            ExitCode::from(outcome.status.code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
