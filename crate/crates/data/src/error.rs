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

use pqm_classifier::ClassifierError;
use pqm_memory::MemoryError;
use thiserror::Error;

/// Errors raised along the data pipeline.
#[derive(Debug, Error)]
pub enum DataError {
    #[error("cannot read dataset: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed row at line {line}: {detail}")]
    MalformedRow { line: u64, detail: String },

    #[error("label column {0:?} does not exist")]
    UnknownLabelColumn(String),

    #[error("label column index {index} out of range for {columns} columns")]
    LabelIndexOutOfRange { index: usize, columns: usize },

    #[error("dataset holds no rows")]
    EmptyDataset,

    #[error("attribute {column} has only missing values; its mode is undefined")]
    AttributeFullyMissing { column: usize },

    #[error("attribute {column} still holds the missing marker; impute before encoding")]
    UnimputedValue { column: usize },

    #[error("attribute {column} decodes to no single set bit")]
    UndecodableAttribute { column: usize },

    #[error("{0} folds make no sense; need at least 2")]
    BadFoldCount(usize),

    #[error("cannot split {samples} samples into {k} folds")]
    TooManyFolds { k: usize, samples: usize },

    #[error("paired test needs equal-length samples, got {a} and {b}")]
    UnpairedSamples { a: usize, b: usize },

    #[error("only {0} non-zero differences; at least 5 are required")]
    TooFewPairs(usize),

    #[error("significance level {0} is not within (0, 1)")]
    BadAlpha(f64),

    #[error(transparent)]
    Classifier(#[from] ClassifierError),

    #[error(transparent)]
    Memory(#[from] MemoryError),
}
