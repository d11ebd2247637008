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

//! Folding the classical input out of the retrieval circuit.
//!
//! Retrieval only ever *reads* the input register, so its qubits can stay
//! classical: each input-controlled XOR collapses to an X applied when the
//! classical bit is 1, and the register disappears. What remains acts on
//! the n memory qubits plus the control — n+1 qubits in total — and is
//! written directly in the hardware basis, with the zero-phase gates
//! expanded as X·PHASE·X and their controlled form as X·CPHASE·X.

use std::f64::consts::PI;
use std::ops::Range;

use pqm_memory::{BitPattern, MemoryContent, PqmParameter};
use pqm_sim::{Circuit, Gate};

use crate::error::NisqError;

/// A retrieval circuit over just the memory register and the control, with
/// the input baked in classically.
#[derive(Debug, Clone)]
pub struct ReducedCircuit {
    circuit: Circuit,
    classical_input: BitPattern,
}

impl ReducedCircuit {
    pub fn circuit(&self) -> &Circuit {
        &self.circuit
    }

    pub fn classical_input(&self) -> &BitPattern {
        &self.classical_input
    }

    pub fn memory_qubits(&self) -> Range<usize> {
        0..self.classical_input.len()
    }

    /// The qubit measured to read the retrieval outcome.
    pub fn control_qubit(&self) -> usize {
        self.classical_input.len()
    }

    /// Exact P(c = 0) of the reduced circuit run from |0…0⟩.
    pub fn p0(&self) -> Result<f64, NisqError> {
        let state = self.circuit.run(0)?;
        Ok(state.prob_of_qubit(self.control_qubit(), false)?)
    }

    /// Rewrites the underlying circuit with an equivalence-preserving pass.
    pub fn map_circuit<F: FnOnce(&Circuit) -> Circuit>(self, pass: F) -> ReducedCircuit {
        ReducedCircuit { circuit: pass(&self.circuit), classical_input: self.classical_input }
    }
}

/// Checks that a preparation circuit fits the memory register and never
/// touches the control, and returns its ops.
fn prep_ops<'a>(memory_prep: &'a Circuit, n: usize) -> Result<&'a [Gate], NisqError> {
    match memory_prep.num_qubits() {
        width if width == n => Ok(memory_prep.ops()),
        width if width == n + 1 => {
            if memory_prep.ops().iter().any(|g| g.qubits().contains(&n)) {
                return Err(NisqError::PrepTouchesControl);
            }
            Ok(memory_prep.ops())
        }
        width => Err(NisqError::PrepWidthMismatch { expected: n, got: width }),
    }
}

/// Builds the n+1-qubit retrieval circuit for a classical `input`.
///
/// `memory_prep` must act only on the memory register (n or n+1 qubits
/// wide). The emitted body keeps every X layer of the folding explicit —
/// [`crate::cancel_adjacent_x`] strips the pairs that cancel.
pub fn fold_classical_input(
    n: usize,
    input: &BitPattern,
    memory_prep: &Circuit,
    t: PqmParameter,
) -> Result<ReducedCircuit, NisqError> {
    if input.len() != n {
        return Err(pqm_memory::MemoryError::LengthMismatch { expected: n, got: input.len() }
            .into());
    }
    let mut circuit = Circuit::new(&[("m", n), ("c", 1)])?;
    let c = n;
    let theta = PI / (2.0 * n as f64 * t.value());

    circuit.extend(prep_ops(memory_prep, n)?.iter().cloned())?;
    circuit.push(Gate::H { target: c })?;
    for j in 0..n {
        // the input-controlled XOR, with the input bit now classical
        if input.bit(j) {
            circuit.push(Gate::X { target: j })?;
        }
        circuit.push(Gate::X { target: j })?;
    }
    for j in 0..n {
        // zero-phase as X·PHASE·X
        circuit.push(Gate::X { target: j })?;
        circuit.push(Gate::Phase { target: j, theta })?;
        circuit.push(Gate::X { target: j })?;
    }
    for j in 0..n {
        // controlled zero-phase of both leftover exponents as X·CPHASE·X
        circuit.push(Gate::X { target: j })?;
        circuit.push(Gate::CPhase { control: c, target: j, theta: -2.0 * theta })?;
        circuit.push(Gate::X { target: j })?;
    }
    for j in 0..n {
        circuit.push(Gate::X { target: j })?;
        if input.bit(j) {
            circuit.push(Gate::X { target: j })?;
        }
    }
    circuit.push(Gate::H { target: c })?;

    Ok(ReducedCircuit { circuit, classical_input: input.clone() })
}

/// Direct hardware preparation for the memory shapes the experiments used:
/// a single pattern (X gates), or two patterns differing in exactly one bit
/// (X gates for the shared bits, H on the differing one). Anything richer
/// needs the full storage-circuit simulation instead.
pub fn prepare_memory_subcircuit(memory: &MemoryContent) -> Result<Circuit, NisqError> {
    let n = memory.pattern_len();
    let mut circuit = Circuit::new(&[("m", n)])?;
    match memory.patterns() {
        [single] => {
            for j in single.ones() {
                circuit.push(Gate::X { target: j })?;
            }
        }
        [first, second] => {
            let differing: Vec<usize> =
                (0..n).filter(|&j| first.bit(j) != second.bit(j)).collect();
            if differing.len() != 1 {
                return Err(NisqError::UnsupportedMemoryPair { differing: differing.len() });
            }
            for j in 0..n {
                if j == differing[0] {
                    circuit.push(Gate::H { target: j })?;
                } else if first.bit(j) {
                    circuit.push(Gate::X { target: j })?;
                }
            }
        }
        patterns => return Err(NisqError::UnsupportedMemoryCount { count: patterns.len() }),
    }
    Ok(circuit)
}
