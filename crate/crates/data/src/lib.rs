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

//! The benchmark pipeline: categorical CSV ingestion, mode imputation,
//! one-hot binarization, seeded (stratified) k-fold splits, cross-validated
//! classifier evaluation, and the Wilcoxon signed-rank test for comparing
//! models across datasets.
//!
//! Binarization is one-hot per attribute — each attribute with v observed
//! values contributes v bits with exactly one set — so pattern length equals
//! the sum of attribute arities and every encoded pattern decodes back to
//! its original row.

mod cv;
mod encode;
mod error;
mod folds;
mod raw;
mod stats;

pub use cv::{cross_validate, CvReport, ModelProtocol, ReportParams};
pub use encode::{one_hot_encode, AttributeEncoding, EncodedDataset};
pub use error::DataError;
pub use folds::{kfold_split, FoldSpec, KfoldPlan};
pub use raw::{impute_mode, load_csv, CsvSchema, LabelColumn, RawDataset};
pub use stats::{wilcoxon_signed_rank, WilcoxonOutcome};
