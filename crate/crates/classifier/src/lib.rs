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

//! Weightless classification built on probabilistic quantum memories.
//!
//! One memory is kept per class label. To classify a pattern, each memory is
//! queried and the class whose control qubit is least likely to read 1 wins —
//! equivalently, the class whose memory sits closest to the input in
//! (cosine-weighted) Hamming distance. The parametric variant additionally
//! tunes a per-class scale `t`, which sharpens the distance response; with
//! every `t` left at 1 the two variants coincide.
//!
//! The expected control-qubit values come from the exact closed form rather
//! than sampled shots, so classification is deterministic. A Hamming-distance
//! KNN baseline is included for comparisons.

mod error;
mod knn;
mod model;
mod objective;

pub use error::ClassifierError;
pub use knn::{knn_baseline, knn_predict};
pub use model::{
    classify, evaluate_accuracy, expected_ones, setup, tune_parameters, ClassMemory,
    PqmClassifier, PredictionReport,
};
pub use objective::{maximize_f, objective_f};
