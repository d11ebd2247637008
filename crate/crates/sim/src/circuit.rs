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

use std::collections::BTreeMap;
use std::ops::Range;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::SimError;
use crate::gate::Gate;
use crate::state::StateVector;

/// A named contiguous qubit range inside a circuit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Register {
    pub name: String,
    pub start: usize,
    pub len: usize,
}

impl Register {
    pub fn range(&self) -> Range<usize> {
        self.start..self.start + self.len
    }
}

/// An ordered gate list over named registers.
///
/// Registers are allocated contiguously in declaration order, and the
/// basis-state index of the whole system is the big-endian reading of the
/// concatenated registers: the first register holds the most significant
/// bits.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    num_qubits: usize,
    registers: Vec<Register>,
    ops: Vec<Gate>,
}

impl Circuit {
    /// Builds an empty circuit over `(name, width)` registers.
    pub fn new(registers: &[(&str, usize)]) -> Result<Self, SimError> {
        if registers.is_empty() {
            return Err(SimError::BadRegisters("no registers given".into()));
        }
        let mut regs = Vec::with_capacity(registers.len());
        let mut start = 0usize;
        for (name, len) in registers {
            if *len == 0 {
                return Err(SimError::BadRegisters(format!("register {name} has width 0")));
            }
            if regs.iter().any(|r: &Register| r.name == *name) {
                return Err(SimError::BadRegisters(format!("duplicate register name {name}")));
            }
            regs.push(Register { name: (*name).into(), start, len: *len });
            start += len;
        }
        Ok(Self { num_qubits: start, registers: regs, ops: Vec::new() })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn registers(&self) -> &[Register] {
        &self.registers
    }

    /// Qubit range of a register by name.
    pub fn register(&self, name: &str) -> Option<Range<usize>> {
        self.registers.iter().find(|r| r.name == name).map(Register::range)
    }

    /// Appends a gate after validating its operands.
    pub fn push(&mut self, gate: Gate) -> Result<(), SimError> {
        gate.validate(self.num_qubits)?;
        self.ops.push(gate);
        Ok(())
    }

    pub fn extend<I: IntoIterator<Item = Gate>>(&mut self, gates: I) -> Result<(), SimError> {
        for g in gates {
            self.push(g)?;
        }
        Ok(())
    }

    pub fn ops(&self) -> &[Gate] {
        &self.ops
    }

    pub fn gate_count(&self) -> usize {
        self.ops.len()
    }

    /// Replaces the gate list wholesale (used by compiler passes); every gate
    /// is re-validated.
    pub fn with_ops(&self, ops: Vec<Gate>) -> Result<Self, SimError> {
        let mut out = Self {
            num_qubits: self.num_qubits,
            registers: self.registers.clone(),
            ops: Vec::new(),
        };
        out.extend(ops)?;
        Ok(out)
    }

    /// Runs the circuit from a computational basis state.
    pub fn run(&self, initial: usize) -> Result<StateVector, SimError> {
        let mut state = StateVector::from_basis(self.num_qubits, initial)?;
        self.run_on(&mut state)?;
        Ok(state)
    }

    /// Runs the circuit on an existing state (e.g. an injected memory).
    pub fn run_on(&self, state: &mut StateVector) -> Result<(), SimError> {
        if state.num_qubits() != self.num_qubits {
            return Err(SimError::QubitCountMismatch {
                state: state.num_qubits(),
                circuit: self.num_qubits,
            });
        }
        for gate in &self.ops {
            state.apply(gate)?;
        }
        Ok(())
    }
}

/// Runs `circuit` from |0…0⟩ and draws `shots` samples of the listed qubits.
///
/// Keys are bitstrings in `measured_qubits` order; values sum to `shots`.
/// Outcomes never observed are absent. Equal seeds give bit-identical
/// histograms: sampling reads a ChaCha8 stream over the exact joint
/// distribution, so no platform-dependent ordering is involved.
pub fn sample_counts(
    circuit: &Circuit,
    measured_qubits: &[usize],
    shots: u64,
    rng_seed: u64,
) -> Result<BTreeMap<String, u64>, SimError> {
    if measured_qubits.is_empty() {
        return Err(SimError::EmptyMeasurement);
    }
    if shots == 0 {
        return Err(SimError::ZeroShots);
    }
    let state = circuit.run(0)?;
    let probs = state.marginal_probs(measured_qubits)?;
    let cdf: Vec<f64> = probs
        .iter()
        .scan(0.0, |acc, p| {
            *acc += p;
            Some(*acc)
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut counts = vec![0u64; probs.len()];
    for _ in 0..shots {
        let u = rng.random::<f64>();
        let bin = cdf.partition_point(|&c| c <= u).min(probs.len() - 1);
        counts[bin] += 1;
    }
    let width = measured_qubits.len();
    let mut histogram = BTreeMap::new();
    for (bin, &count) in counts.iter().enumerate() {
        if count > 0 {
            histogram.insert(format!("{bin:0width$b}"), count);
        }
    }
    Ok(histogram)
}
