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

use num_complex::Complex64;
use pqm_sim::{Circuit, Gate};

use crate::content::MemoryContent;
use crate::error::MemoryError;

/// Builds the storage circuit over registers p (n), u (2), m (n).
///
/// Run it from [`storage_initial_index`] — that is |0…0; 01; 0…0⟩, with the
/// u2 flag marking the not-yet-written branch. Each iteration loads one
/// pattern onto p, copies it onto m inside the flagged branch, marks m with
/// 1s exactly where m agrees with p, and conditioned on full agreement peels
/// a 1/√(p+1−i) share of the flagged amplitude into the written (u2 = 0)
/// branch before uncomputing the marks, the copy, and the load.
///
/// The final iteration's divisor is 1, which drains the flagged branch
/// completely: simulation confirms the run ends in the product state
/// |0…0⟩ ⊗ |00⟩ ⊗ |M⟩, i.e. u ends at |00⟩, not at its initial |01⟩, and m
/// carries amplitude 1/√p on every stored pattern.
pub fn build_storage_circuit(memory: &MemoryContent) -> Result<Circuit, MemoryError> {
    let n = memory.pattern_len();
    let p = memory.count();
    let mut circuit = Circuit::new(&[("p", n), ("u", 2), ("m", n)])?;
    let (u1, u2) = (n, n + 1);
    let m0 = n + 2;
    let m_all: Vec<usize> = (m0..m0 + n).collect();
    for (idx, pattern) in memory.patterns().iter().enumerate() {
        let load: Vec<Gate> = pattern.ones().map(|j| Gate::X { target: j }).collect();
        circuit.extend(load.clone())?;
        for j in 0..n {
            circuit.push(Gate::Ccx { controls: [j, u2], target: m0 + j })?;
        }
        for j in 0..n {
            circuit.push(Gate::Cx { control: j, target: m0 + j })?;
            circuit.push(Gate::X { target: m0 + j })?;
        }
        circuit.push(Gate::Mcx { controls: m_all.clone(), target: u1 })?;
        circuit.push(Gate::AmpSplit { control: u1, target: u2, j: p - idx })?;
        circuit.push(Gate::Mcx { controls: m_all.clone(), target: u1 })?;
        for j in 0..n {
            circuit.push(Gate::X { target: m0 + j })?;
            circuit.push(Gate::Cx { control: j, target: m0 + j })?;
        }
        for j in 0..n {
            circuit.push(Gate::Ccx { controls: [j, u2], target: m0 + j })?;
        }
        circuit.extend(load)?;
    }
    Ok(circuit)
}

/// Basis index of the storage start state |0…0; 01; 0…0⟩ for pattern size n.
pub fn storage_initial_index(n: usize) -> usize {
    // u2 is qubit n+1 of 2n+2, i.e. bit n of the big-endian index.
    1 << n
}

/// Runs the storage circuit and returns the m-register amplitudes.
///
/// Valid because the final state is exactly |0…0⟩|00⟩ ⊗ |M⟩ (see
/// [`build_storage_circuit`]); with p and u zero, the m value is the low n
/// bits of the basis index, so |M⟩ is the first 2^n amplitudes.
pub fn memory_amplitudes(memory: &MemoryContent) -> Result<Vec<Complex64>, MemoryError> {
    let n = memory.pattern_len();
    let circuit = build_storage_circuit(memory)?;
    let state = circuit.run(storage_initial_index(n))?;
    Ok(state.amplitudes()[..1 << n].to_vec())
}
