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

//! Probabilistic quantum memory over bit patterns.
//!
//! A memory of `p` distinct n-bit patterns is the uniform superposition with
//! amplitude 1/√p on each stored pattern. This crate builds the storage
//! circuit that writes that state one pattern at a time, the retrieval
//! circuit that scores an input against the whole memory in superposition,
//! and a closed-form oracle for the retrieval probability:
//!
//! ```text
//! P(c = 0) = (1/p) · Σ_k cos²( π·d_H(input, pattern_k) / (2nt) )
//! ```
//!
//! where `d_H` is Hamming distance and `t ∈ (0, 1]` scales the phase step
//! (t = 1 is the plain memory; smaller t sharpens the distance response).
//! [`retrieve_exact`] evaluates the same probability by running the circuit
//! and reading amplitudes, with no sampling noise; the two routes agree to
//! 1e-9 and the test suites hold them against each other.

mod content;
mod error;
mod pattern;
mod retrieval;
mod storage;

pub use content::{MemoryContent, PqmParameter};
pub use error::MemoryError;
pub use pattern::{hamming, BitPattern};
pub use retrieval::{
    build_retrieval_circuit, build_store_and_retrieve_circuit, closed_form_p0,
    closed_form_p0_of, retrieve_exact, retrieve_exact_with, MemoryPrep, RetrievalOutcome,
};
pub use storage::{build_storage_circuit, memory_amplitudes, storage_initial_index};
