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

use thiserror::Error;

use pqm_sim::SimError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MemoryError {
    #[error("pattern must contain at least one bit")]
    EmptyPattern,

    #[error("invalid pattern character {0:?} (expected '0' or '1')")]
    BadPatternChar(char),

    #[error("pattern length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("memory must store at least one pattern")]
    EmptyMemory,

    #[error("duplicate stored pattern {0}")]
    DuplicatePattern(String),

    #[error("parameter t must lie in (0, 1], got {0}")]
    ParameterOutOfRange(f64),

    #[error("line {line}: {source}")]
    BadLine {
        line: usize,
        #[source]
        source: Box<MemoryError>,
    },

    #[error(transparent)]
    Sim(#[from] SimError),
}
