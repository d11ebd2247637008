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

//! Compilation of retrieval circuits towards near-term hardware.
//!
//! The full retrieval circuit carries the classical input in a quantum
//! register it never needs: folding replaces every input-controlled gate
//! by a plain X conditioned on the classical bit, shrinking 2n+1 qubits to
//! n+1 (the memory register plus the control). The folded circuit is
//! expressed in the portable basis {X, H, PHASE, CPHASE, CNOT}; a peephole
//! pass then strips the X pairs the folding leaves adjacent, a validator
//! checks two-qubit gates against a device coupling graph, and the result
//! can be emitted as OpenQASM 2.0 text.

mod error;
mod graph;
mod passes;
mod qasm;
mod reduce;
mod topology;

pub use error::NisqError;
pub use graph::CouplingGraph;
pub use passes::{cancel_adjacent_x, decompose_to_basis};
pub use qasm::{emit_qasm, parse_qasm};
pub use reduce::{fold_classical_input, prepare_memory_subcircuit, ReducedCircuit};
pub use topology::{validate_topology, PairIssue, TopologyReport};
