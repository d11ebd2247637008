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

/// Errors raised by state, gate, and circuit construction or application.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum SimError {
    #[error("qubit {qubit} out of range for a {num_qubits}-qubit system")]
    QubitOutOfRange { qubit: usize, num_qubits: usize },

    #[error("gate operands must be distinct, got {0:?}")]
    DuplicateOperands(Vec<usize>),

    #[error("multi-controlled X needs at least one control")]
    NoControls,

    #[error("amplitude-split divisor j must be at least 1, got {0}")]
    BadSplitDivisor(usize),

    #[error("basis index {index} out of range for {num_qubits} qubits")]
    BasisOutOfRange { index: usize, num_qubits: usize },

    #[error("amplitude vector length {0} is not a nonzero power of two")]
    BadAmplitudeCount(usize),

    #[error("state norm squared is {0}, expected 1 within 1e-10")]
    NotNormalized(f64),

    #[error("invalid register list: {0}")]
    BadRegisters(String),

    #[error("state has {state} qubits but the circuit is over {circuit}")]
    QubitCountMismatch { state: usize, circuit: usize },

    #[error("no qubits selected for measurement")]
    EmptyMeasurement,

    #[error("shots must be at least 1")]
    ZeroShots,
}
