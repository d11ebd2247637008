// Copyright contributors to the pqm project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! `pqm` — probabilistic quantum memory toolkit.
//!
//! Exit codes: 0 success, 1 usage error, 2 data/content error, 3 topology
//! violations. Every sampled command takes its seed from `--seed`, then the
//! `PQM_SEED` environment variable, then the documented default 1729.

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

/// Seed used when neither `--seed` nor `PQM_SEED` is given.
const DEFAULT_SEED: u64 = 1729;

#[derive(Parser)]
#[command(name = "pqm", version, about = "Probabilistic quantum memory toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Model {
    /// Weightless classifier, every class scale fixed at 1
    Qwc,
    /// Parametric variant: per-class scales tuned over the t grid
    Pqwc,
    /// k-nearest-neighbours baseline (best k ≤ 15 per fold)
    Knn,
}

impl Model {
    fn name(self) -> &'static str {
        match self {
            Model::Qwc => "qwc",
            Model::Pqwc => "pqwc",
            Model::Knn => "knn",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum OutputFormat {
    #[default]
    Json,
    Csv,
}

impl OutputFormat {
    fn name(self) -> &'static str {
        match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Score an input bitstring against a pattern memory (exact or sampled)
    Retrieve {
        /// Text file with one stored bit pattern per line (#-comments allowed)
        #[arg(long)]
        memory: PathBuf,
        /// Input bitstring to score
        #[arg(long)]
        input: String,
        /// Distance-scaling parameter in (0, 1]
        #[arg(long, default_value_t = 1.0)]
        t: f64,
        /// Sample this many shots instead of reporting exact probabilities
        #[arg(long)]
        shots: Option<u64>,
        /// RNG seed; defaults to PQM_SEED, then 1729
        #[arg(long)]
        seed: Option<u64>,
        /// Write output here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-validate a classifier over a categorical CSV dataset
    Bench {
        /// Headerless CSV; label in the last column; `?` marks missing cells
        dataset: PathBuf,
        /// Classifier to evaluate
        model: Model,
        /// Number of cross-validation folds
        #[arg(long, default_value_t = 10)]
        folds: usize,
        /// t grid: comma list ("0.2,0.5,1.0") or "uniform:K"
        /// (K points k/K, k = 1..K); pqwc defaults to uniform:15
        #[arg(long)]
        grid: Option<String>,
        /// RNG seed; defaults to PQM_SEED, then 1729
        #[arg(long)]
        seed: Option<u64>,
        /// json: full report; csv: per-fold rows — or, for pqwc with an
        /// explicit --grid, a per-t sweep of constant-t mean accuracies
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        /// Write output here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fold a memory and classical input into an n+1-qubit hardware-basis
    /// circuit and emit it as OpenQASM 2.0
    Compile {
        /// Text file with one stored bit pattern per line (#-comments allowed)
        #[arg(long)]
        memory: PathBuf,
        /// Input bitstring to fold in
        #[arg(long)]
        input: String,
        /// Distance-scaling parameter in (0, 1]
        #[arg(long, default_value_t = 1.0)]
        t: f64,
        /// Coupling graph JSON ({"qubits": N, "edges": [[a,b], …]}) or the
        /// built-in name "tenerife"; enables placement validation
        #[arg(long)]
        coupling: Option<String>,
        /// Comma-separated circuit→device qubit map, e.g. "2,4,3";
        /// defaults to the identity
        #[arg(long)]
        mapping: Option<String>,
        /// Write the QASM here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the superposition-recovery catalogue: exact P(c=0) next to
    /// sampled frequencies and their errors
    Table4 {
        /// Shots per catalogue row
        #[arg(long, default_value_t = 8192)]
        shots: u64,
        /// RNG seed; row i samples with seed+i. Defaults to PQM_SEED, then 1729
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        /// Write output here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Command failures, mapped onto the documented exit codes.
#[derive(Debug)]
enum CliError {
    /// Malformed flag values and the like — exit 1.
    Usage(String),
    /// Unreadable or invalid files, bitstrings, datasets — exit 2.
    Data(String),
    /// The placed circuit needs absent couplings — exit 3.
    Violations(usize),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
            CliError::Violations(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Data(msg) => f.write_str(msg),
            CliError::Violations(n) => write!(f, "{n} topology violation(s)"),
        }
    }
}

macro_rules! data_error_from {
    ($($ty:ty),* $(,)?) => {$(
        impl From<$ty> for CliError {
            fn from(err: $ty) -> Self {
                CliError::Data(err.to_string())
            }
        }
    )*};
}

data_error_from!(
    std::io::Error,
    serde_json::Error,
    pqm_classifier::ClassifierError,
    pqm_data::DataError,
    pqm_memory::MemoryError,
    pqm_nisq::NisqError,
    pqm_sim::SimError,
);

fn resolve_seed(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("PQM_SEED") {
        Ok(value) => value
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("PQM_SEED must be an integer, got `{value}`"))),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_SEED),
        Err(err) => Err(CliError::Usage(format!("PQM_SEED: {err}"))),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // help and version requests surface here as non-error kinds
            let is_usage_error = err.use_stderr();
            let _ = err.print();
            return if is_usage_error { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
