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

//! Subcommand implementations for the `pqm` binary.
//!
//! Every JSON payload carries a `config` object echoing the effective
//! invocation (resolved seed included) so runs can be reproduced from their
//! outputs alone.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use pqm_classifier::{evaluate_accuracy, knn_baseline, setup};
use pqm_data::{
    cross_validate, impute_mode, kfold_split, load_csv, one_hot_encode, CsvSchema, CvReport,
    EncodedDataset, ModelProtocol, ReportParams,
};
use pqm_memory::{
    build_store_and_retrieve_circuit, closed_form_p0, retrieve_exact, BitPattern, MemoryContent,
    MemoryError, PqmParameter,
};
use pqm_nisq::{
    emit_qasm, fold_classical_input, prepare_memory_subcircuit, validate_topology, CouplingGraph,
    ReducedCircuit,
};
use pqm_sim::sample_counts;
use serde::Serialize;
use serde_json::json;

use crate::{resolve_seed, CliError, Command, Model, OutputFormat};

pub fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Retrieve { memory, input, t, shots, seed, out } => {
            retrieve(&memory, &input, t, shots, seed, out.as_deref())
        }
        Command::Bench { dataset, model, folds, grid, seed, format, out } => {
            bench(&dataset, model, folds, grid.as_deref(), seed, format, out.as_deref())
        }
        Command::Compile { memory, input, t, coupling, mapping, out } => {
            compile(&memory, &input, t, coupling.as_deref(), mapping.as_deref(), out.as_deref())
        }
        Command::Table4 { shots, seed, format, out } => table4(shots, seed, format, out.as_deref()),
    }
}

/// Effective invocation, echoed into JSON outputs. Unset fields are omitted
/// from the serialized form.
#[derive(Serialize)]
struct RunConfig {
    command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    dataset: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    model: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    memory: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    input: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    t: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    grid: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    folds: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    shots: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coupling: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mapping: Option<Vec<usize>>,
    seed: u64,
    format: &'static str,
}

impl RunConfig {
    fn new(command: &'static str, seed: u64, format: &'static str) -> Self {
        RunConfig {
            command,
            dataset: None,
            model: None,
            memory: None,
            input: None,
            t: None,
            grid: None,
            folds: None,
            shots: None,
            coupling: None,
            mapping: None,
            seed,
            format,
        }
    }
}

/// Reads a memory file: one bit pattern per line, surrounding whitespace
/// ignored, blank lines and `#` comment lines skipped.
fn read_memory_file(path: &Path) -> Result<MemoryContent, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|err| CliError::Data(format!("{}: {err}", path.display())))?;
    let mut patterns = Vec::new();
    for (index, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let pattern: BitPattern = line.parse().map_err(|err: MemoryError| {
            CliError::Data(format!("{}:{}: {err}", path.display(), index + 1))
        })?;
        patterns.push(pattern);
    }
    MemoryContent::new(patterns)
        .map_err(|err| CliError::Data(format!("{}: {err}", path.display())))
}

fn parse_input(text: &str) -> Result<BitPattern, CliError> {
    text.parse().map_err(|err: MemoryError| CliError::Data(format!("--input: {err}")))
}

fn parse_t(t: f64) -> Result<PqmParameter, CliError> {
    PqmParameter::new(t).map_err(|err| CliError::Usage(format!("--t: {err}")))
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|err| CliError::Data(format!("{}: {err}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_pretty_json(value: &serde_json::Value) -> Result<String, CliError> {
    Ok(format!("{}\n", serde_json::to_string_pretty(value)?))
}

fn retrieve(
    memory_path: &Path,
    input: &str,
    t: f64,
    shots: Option<u64>,
    seed: Option<u64>,
    out: Option<&Path>,
) -> Result<(), CliError> {
    if shots == Some(0) {
        return Err(CliError::Usage("--shots must be at least 1".into()));
    }
    let seed = resolve_seed(seed)?;
    let memory = read_memory_file(memory_path)?;
    let input = parse_input(input)?;
    let scale = parse_t(t)?;

    let mut config = RunConfig::new("retrieve", seed, "json");
    config.memory = Some(memory_path.display().to_string());
    config.input = Some(input.to_string());
    config.t = Some(t);
    config.shots = shots;

    let result = match shots {
        None => {
            let outcome = retrieve_exact(&memory, &input, scale)?;
            json!({ "mode": "exact", "p0": outcome.p0, "p1": outcome.p1 })
        }
        Some(shots) => {
            // one circuit does both halves: storage writes the patterns,
            // retrieval then reuses the emptied registers
            let (circuit, control) = build_store_and_retrieve_circuit(&memory, &input, scale)?;
            let counts = sample_counts(&circuit, &[control], shots, seed)?;
            let frequencies: BTreeMap<&str, f64> =
                counts.iter().map(|(key, &v)| (key.as_str(), v as f64 / shots as f64)).collect();
            json!({ "mode": "shots", "shots": shots, "counts": counts, "frequencies": frequencies })
        }
    };
    write_output(out, &to_pretty_json(&json!({ "config": config, "result": result }))?)
}

/// `uniform:K` expands to {k/K : k = 1..K}; anything else is a comma list.
fn parse_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    if let Some(rest) = spec.strip_prefix("uniform:") {
        let k: usize = rest.parse().map_err(|_| {
            CliError::Usage(format!("--grid uniform:K needs an integer K, got `{rest}`"))
        })?;
        if k == 0 {
            return Err(CliError::Usage("--grid uniform:K needs K >= 1".into()));
        }
        return Ok((1..=k).map(|i| i as f64 / k as f64).collect());
    }
    spec.split(',')
        .map(|part| {
            part.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("--grid: `{part}` is not a number")))
        })
        .collect()
}

fn default_grid() -> Vec<f64> {
    (1..=15).map(|i| i as f64 / 15.0).collect()
}

fn mean_std(values: &[f64]) -> (f64, f64) {
    let mean = values.iter().sum::<f64>() / values.len() as f64;
    let variance = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / values.len() as f64;
    (mean, variance.sqrt())
}

fn gather(data: &EncodedDataset, indices: &[usize]) -> Vec<(BitPattern, String)> {
    indices.iter().map(|&i| data.patterns()[i].clone()).collect()
}

/// Per-fold baseline: k swept over 1..=min(15, train size), best k kept.
fn knn_cross_validate(
    name: &str,
    data: &EncodedDataset,
    folds: usize,
    seed: u64,
) -> Result<CvReport, CliError> {
    let plan = kfold_split(data, folds, seed)?;
    let mut per_fold = Vec::with_capacity(folds);
    for fold in &plan.folds {
        let train = gather(data, &fold.train);
        let test = gather(data, &fold.test);
        let (_, accuracy) = knn_baseline(&train, &test, 1..=train.len().min(15))?;
        per_fold.push(accuracy);
    }
    let (mean, std) = mean_std(&per_fold);
    Ok(CvReport {
        dataset: name.to_string(),
        model: "knn".to_string(),
        per_fold,
        mean,
        std,
        params: ReportParams { grid: Vec::new(), folds, seed },
    })
}

/// Constant-scale sweep: every class pinned to the same t, accuracy averaged
/// over the folds of a single split. No per-class tuning happens here.
fn sweep_csv(
    data: &EncodedDataset,
    folds: usize,
    seed: u64,
    ts: &[f64],
) -> Result<String, CliError> {
    let plan = kfold_split(data, folds, seed)?;
    let mut text = String::from("t,mean_accuracy,std\n");
    for &t in ts {
        let scale = parse_t(t)?;
        let mut accuracies = Vec::with_capacity(folds);
        for fold in &plan.folds {
            let train = gather(data, &fold.train);
            let test = gather(data, &fold.test);
            let mut classifier = setup(&train)?;
            classifier.set_all_scales(scale);
            accuracies.push(evaluate_accuracy(&classifier, &test)?);
        }
        let (mean, std) = mean_std(&accuracies);
        text.push_str(&format!("{t},{mean},{std}\n"));
    }
    Ok(text)
}

fn bench(
    dataset: &Path,
    model: Model,
    folds: usize,
    grid: Option<&str>,
    seed: Option<u64>,
    format: OutputFormat,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let seed = resolve_seed(seed)?;
    let raw = load_csv(dataset, &CsvSchema::default())
        .map_err(|err| CliError::Data(format!("{}: {err}", dataset.display())))?;
    let encoded = one_hot_encode(&impute_mode(&raw)?)?;
    for warning in encoded.warnings() {
        eprintln!("note: {warning}");
    }
    let name = dataset.file_stem().and_then(|s| s.to_str()).unwrap_or("dataset").to_string();

    let explicit_grid = grid.map(parse_grid).transpose()?;
    if explicit_grid.is_some() && model != Model::Pqwc {
        eprintln!("note: --grid only affects pqwc; ignoring it");
    }

    if model == Model::Pqwc && format == OutputFormat::Csv {
        if let Some(ts) = &explicit_grid {
            // explicit grid + csv asks for the accuracy-vs-t curve itself
            return write_output(out, &sweep_csv(&encoded, folds, seed, ts)?);
        }
    }

    let report = match model {
        Model::Qwc => cross_validate(&name, &encoded, &ModelProtocol::Plain, folds, seed)?,
        Model::Pqwc => {
            let grid = explicit_grid.unwrap_or_else(default_grid);
            cross_validate(&name, &encoded, &ModelProtocol::Tuned { grid }, folds, seed)?
        }
        Model::Knn => knn_cross_validate(&name, &encoded, folds, seed)?,
    };

    match format {
        OutputFormat::Json => {
            let mut config = RunConfig::new("bench", seed, format.name());
            config.dataset = Some(name);
            config.model = Some(model.name());
            config.folds = Some(folds);
            config.grid = Some(report.params.grid.clone());
            write_output(out, &to_pretty_json(&json!({ "config": config, "report": report }))?)
        }
        OutputFormat::Csv => {
            let mut text = String::from("fold,accuracy\n");
            for (index, accuracy) in report.per_fold.iter().enumerate() {
                text.push_str(&format!("{index},{accuracy}\n"));
            }
            write_output(out, &text)
        }
    }
}

fn load_coupling(spec: &str) -> Result<CouplingGraph, CliError> {
    if spec == "tenerife" {
        return Ok(CouplingGraph::tenerife());
    }
    let text =
        fs::read_to_string(spec).map_err(|err| CliError::Data(format!("{spec}: {err}")))?;
    CouplingGraph::from_json(&text).map_err(|err| CliError::Data(format!("{spec}: {err}")))
}

fn parse_mapping(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(|part| {
            part.trim().parse().map_err(|_| {
                CliError::Usage(format!("--mapping: `{part}` is not a qubit index"))
            })
        })
        .collect()
}

/// Builds the reduced circuit for `memory` ⊗ `input`. Shared by compile and
/// the catalogue command; the X layers are kept explicit so the emission is
/// the canonical folded form rather than the post-cancellation one.
fn reduce(memory: &MemoryContent, input: &BitPattern, t: PqmParameter) -> Result<ReducedCircuit, CliError> {
    let prep = prepare_memory_subcircuit(memory)?;
    Ok(fold_classical_input(memory.pattern_len(), input, &prep, t)?)
}

fn compile(
    memory_path: &Path,
    input: &str,
    t: f64,
    coupling: Option<&str>,
    mapping: Option<&str>,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let memory = read_memory_file(memory_path)?;
    let input = parse_input(input)?;
    let scale = parse_t(t)?;
    let reduced = reduce(&memory, &input, scale)?;
    let qasm = emit_qasm(reduced.circuit(), &[reduced.control_qubit()])?;

    let mut violations = 0usize;
    if let Some(spec) = coupling {
        let graph = load_coupling(spec)?;
        let placement = match mapping {
            Some(text) => parse_mapping(text)?,
            None => (0..reduced.circuit().num_qubits()).collect(),
        };
        let report = validate_topology(reduced.circuit(), &graph, &placement)
            .map_err(|err| CliError::Usage(format!("--mapping: {err}")))?;
        for issue in &report.violations {
            eprintln!(
                "violation: {} gate #{} needs coupling Q{}-Q{} (logical {}->{})",
                issue.gate,
                issue.gate_index,
                issue.physical.0,
                issue.physical.1,
                issue.logical.0,
                issue.logical.1,
            );
        }
        for issue in &report.advisories {
            eprintln!(
                "advisory: {} gate #{} runs against the coupling direction Q{}->Q{} and needs H-conjugation",
                issue.gate, issue.gate_index, issue.physical.0, issue.physical.1,
            );
        }
        eprintln!(
            "placement: {} violation(s), {} advisory(ies)",
            report.violations.len(),
            report.advisories.len(),
        );
        violations = report.violations.len();
    }

    write_output(out, &qasm)?;
    if violations > 0 {
        return Err(CliError::Violations(violations));
    }
    Ok(())
}

#[derive(Serialize)]
struct CatalogueResult {
    memory: Vec<&'static str>,
    exact: f64,
    sampled: f64,
    abs_error: f64,
}

fn table4(
    shots: u64,
    seed: Option<u64>,
    format: OutputFormat,
    out: Option<&Path>,
) -> Result<(), CliError> {
    if shots == 0 {
        return Err(CliError::Usage("--shots must be at least 1".into()));
    }
    let seed = resolve_seed(seed)?;

    let mut rows = Vec::with_capacity(pqm_cli::catalogue::ROWS.len());
    let mut squared = 0.0;
    for (index, entry) in pqm_cli::catalogue::ROWS.iter().enumerate() {
        let memory = entry.memory()?;
        let input = entry.input();
        let exact = closed_form_p0(&memory, &input, PqmParameter::ONE)?;
        let reduced = reduce(&memory, &input, PqmParameter::ONE)?;
        // rows get consecutive seeds so the whole table is reproducible
        // while no two rows share a sample stream
        let counts = sample_counts(
            reduced.circuit(),
            &[reduced.control_qubit()],
            shots,
            seed.wrapping_add(index as u64),
        )?;
        let zeros = counts.get("0").copied().unwrap_or(0);
        let sampled = zeros as f64 / shots as f64;
        squared += (exact - sampled).powi(2);
        rows.push(CatalogueResult {
            memory: entry.patterns.to_vec(),
            exact,
            sampled,
            abs_error: (exact - sampled).abs(),
        });
    }
    let mse = squared / rows.len() as f64;

    let mut config = RunConfig::new("table4", seed, format.name());
    config.shots = Some(shots);

    match format {
        OutputFormat::Json => write_output(
            out,
            &to_pretty_json(&json!({ "config": config, "rows": rows, "mse": mse }))?,
        ),
        OutputFormat::Csv => {
            let mut text = String::from("memory,exact,sampled,abs_error\n");
            for row in &rows {
                text.push_str(&format!(
                    "{},{},{},{}\n",
                    row.memory.join("|"),
                    row.exact,
                    row.sampled,
                    row.abs_error,
                ));
            }
            text.push_str(&format!("# mse = {mse}\n"));
            write_output(out, &text)
        }
    }
}
