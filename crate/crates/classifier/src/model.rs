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

//! Classifier setup, the expected-value decision rule, and parameter tuning.

use std::collections::{BTreeMap, BTreeSet};

use pqm_memory::{closed_form_p0, BitPattern, MemoryContent, MemoryError, PqmParameter};

use crate::error::ClassifierError;

/// One class of the classifier: its label, its pattern memory, and the
/// retrieval scale used when querying it.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassMemory {
    pub label: String,
    pub memory: MemoryContent,
    pub t: PqmParameter,
}

/// A trained classifier: one memory per distinct class label.
///
/// Classes are held in ascending label order, which makes every downstream
/// operation independent of the order training samples arrived in.
#[derive(Debug, Clone, PartialEq)]
pub struct PqmClassifier {
    classes: Vec<ClassMemory>,
}

impl PqmClassifier {
    pub fn classes(&self) -> &[ClassMemory] {
        &self.classes
    }

    pub fn pattern_len(&self) -> usize {
        self.classes[0].memory.pattern_len()
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.classes.iter().map(|c| c.label.as_str())
    }

    /// Sets the scale used when querying `label`'s memory; returns false if
    /// no class carries that label.
    pub fn set_scale(&mut self, label: &str, t: PqmParameter) -> bool {
        match self.classes.iter_mut().find(|c| c.label == label) {
            Some(class) => {
                class.t = t;
                true
            }
            None => false,
        }
    }

    /// Sets every class scale to `t`; `t = 1` restores the plain rule.
    pub fn set_all_scales(&mut self, t: PqmParameter) {
        for class in &mut self.classes {
            class.t = t;
        }
    }
}

/// The outcome of classifying a single pattern.
#[derive(Debug, Clone, PartialEq)]
pub struct PredictionReport {
    /// Per-class expected number of 1s read off the control qubit, in class
    /// (= ascending label) order. Each value lies in [0, 1].
    pub per_class: Vec<(String, f64)>,
    /// A label attaining the minimal expected value; ties break to the
    /// lexicographically smallest label.
    pub chosen: String,
}

/// Builds one memory per distinct label from labeled training patterns.
///
/// Patterns are deduplicated within each class (the storage circuit cannot
/// hold a pattern twice) and every scale starts at `t = 1`, i.e. the
/// non-parametric rule.
pub fn setup(train: &[(BitPattern, String)]) -> Result<PqmClassifier, ClassifierError> {
    if train.is_empty() {
        return Err(ClassifierError::EmptyTrainingSet);
    }
    let n = train[0].0.len();
    let mut by_label: BTreeMap<&str, BTreeSet<&BitPattern>> = BTreeMap::new();
    for (pattern, label) in train {
        if pattern.len() != n {
            return Err(MemoryError::LengthMismatch { expected: n, got: pattern.len() }.into());
        }
        by_label.entry(label).or_default().insert(pattern);
    }
    let classes = by_label
        .into_iter()
        .map(|(label, patterns)| {
            let memory = MemoryContent::new(patterns.into_iter().cloned().collect())?;
            Ok(ClassMemory { label: label.to_string(), memory, t: PqmParameter::ONE })
        })
        .collect::<Result<Vec<_>, ClassifierError>>()?;
    Ok(PqmClassifier { classes })
}

/// Expected number of 1s observed on the control qubit, `E(X) = P(c = 1)`.
///
/// With a single control qubit X is Bernoulli, so the expectation is just
/// `1 − P(c = 0)`; the exact closed form is used instead of sampled shots.
pub fn expected_ones(
    memory: &MemoryContent,
    input: &BitPattern,
    t: PqmParameter,
) -> Result<f64, ClassifierError> {
    let p0 = closed_form_p0(memory, input, t)?;
    Ok((1.0 - p0).clamp(0.0, 1.0))
}

/// Scores `input` against every class and picks the minimal expected value.
///
/// Minimizing `E(X)` is the same as maximizing `P(c = 0)`, i.e. choosing the
/// memory most similar to the input. Equal scores break to the smallest
/// label, which the ascending class order provides for free.
pub fn classify(
    classifier: &PqmClassifier,
    input: &BitPattern,
) -> Result<PredictionReport, ClassifierError> {
    let mut per_class = Vec::with_capacity(classifier.classes.len());
    for class in &classifier.classes {
        let e = expected_ones(&class.memory, input, class.t)?;
        per_class.push((class.label.clone(), e));
    }
    let mut chosen = 0;
    for (i, entry) in per_class.iter().enumerate().skip(1) {
        if entry.1 < per_class[chosen].1 {
            chosen = i;
        }
    }
    Ok(PredictionReport { chosen: per_class[chosen].0.clone(), per_class })
}

/// Fraction of `eval_set` classified correctly.
pub fn evaluate_accuracy(
    classifier: &PqmClassifier,
    eval_set: &[(BitPattern, String)],
) -> Result<f64, ClassifierError> {
    if eval_set.is_empty() {
        return Err(ClassifierError::EmptyEvalSet);
    }
    let mut hits = 0usize;
    for (pattern, label) in eval_set {
        if classify(classifier, pattern)?.chosen == *label {
            hits += 1;
        }
    }
    Ok(hits as f64 / eval_set.len() as f64)
}

/// Tunes each class scale by coordinate search over `grid`.
///
/// Memories are visited once, in ascending label order; for each, every grid
/// value is tried while the other classes keep their current scales, and the
/// value with the best `eval_set` accuracy is kept (earliest grid entry on
/// ties). The grid must contain 1.0: starting from the all-ones setup, the
/// current configuration is then always among the candidates, so accuracy
/// never drops below the untuned rule's.
pub fn tune_parameters(
    classifier: &PqmClassifier,
    eval_set: &[(BitPattern, String)],
    grid: &[f64],
) -> Result<PqmClassifier, ClassifierError> {
    if grid.is_empty() {
        return Err(ClassifierError::EmptyGrid);
    }
    let grid: Vec<PqmParameter> =
        grid.iter().map(|&v| PqmParameter::new(v)).collect::<Result<_, MemoryError>>()?;
    if !grid.iter().any(|t| t.value() == 1.0) {
        return Err(ClassifierError::GridMissingOne);
    }
    if eval_set.is_empty() {
        return Err(ClassifierError::EmptyEvalSet);
    }

    let mut tuned = classifier.clone();
    for index in 0..tuned.classes.len() {
        let mut best_t = grid[0];
        let mut best_accuracy = -1.0;
        for &candidate in &grid {
            tuned.classes[index].t = candidate;
            let accuracy = evaluate_accuracy(&tuned, eval_set)?;
            if accuracy > best_accuracy {
                best_accuracy = accuracy;
                best_t = candidate;
            }
        }
        tuned.classes[index].t = best_t;
    }
    Ok(tuned)
}
