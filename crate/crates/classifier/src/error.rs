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

use pqm_memory::MemoryError;
use thiserror::Error;

/// Errors surfaced by classifier construction, tuning, and evaluation.
#[derive(Debug, Error, PartialEq)]
pub enum ClassifierError {
    #[error("training set is empty")]
    EmptyTrainingSet,

    #[error("evaluation set is empty")]
    EmptyEvalSet,

    #[error("parameter grid is empty")]
    EmptyGrid,

    #[error("parameter grid must contain 1.0 so tuning can fall back to it")]
    GridMissingOne,

    #[error("near distance {d_near} exceeds far distance {d_far}")]
    BadDistanceOrder { d_near: usize, d_far: usize },

    #[error("distance {d} exceeds the pattern length {n}")]
    DistanceOutOfRange { d: usize, n: usize },

    #[error("pattern length must be at least 1")]
    ZeroPatternLength,

    #[error("resolution {0} is too coarse; at least 1000 grid points are required")]
    BadResolution(usize),

    #[error("KNN needs non-empty train and test sets")]
    EmptyKnnSet,

    #[error("k range {lo}..={hi} is not within 1..={train_size}")]
    BadKRange { lo: usize, hi: usize, train_size: usize },

    #[error(transparent)]
    Memory(#[from] MemoryError),
}
