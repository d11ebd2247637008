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
use pqm_sim::SimError;
use thiserror::Error;

/// Errors raised while reducing, validating, or serializing circuits.
#[derive(Debug, Error)]
pub enum NisqError {
    #[error("memory preparation must act on the {expected}-qubit memory register, got {got} qubits")]
    PrepWidthMismatch { expected: usize, got: usize },

    #[error("memory preparation touches the control qubit")]
    PrepTouchesControl,

    #[error("hardware preparation supports 1 pattern or 2 patterns differing in one bit, not {count} patterns")]
    UnsupportedMemoryCount { count: usize },

    #[error("hardware preparation needs the 2 patterns to differ in exactly one bit, these differ in {differing}")]
    UnsupportedMemoryPair { differing: usize },

    #[error("gate {0} has no decomposition into the hardware basis")]
    NotDecomposable(String),

    #[error("gate {0} is outside the hardware basis")]
    NonBasisGate(String),

    #[error("coupling edge ({a}, {b}) references a qubit outside 0..{qubits}")]
    EdgeOutOfRange { a: usize, b: usize, qubits: usize },

    #[error("coupling edge ({0}, {0}) is a self-loop")]
    SelfLoop(usize),

    #[error("coupling graph JSON is invalid: {0}")]
    GraphJson(String),

    #[error("mapping covers {got} logical qubits, circuit has {expected}")]
    MappingWrongLength { expected: usize, got: usize },

    #[error("mapping targets physical qubit {physical}, device has {qubits}")]
    MappingOutOfRange { physical: usize, qubits: usize },

    #[error("mapping reuses physical qubit {0}")]
    MappingNotInjective(usize),

    #[error("QASM line {line}: {detail}")]
    QasmParse { line: usize, detail: String },

    #[error(transparent)]
    Memory(#[from] MemoryError),

    #[error(transparent)]
    Sim(#[from] SimError),
}
