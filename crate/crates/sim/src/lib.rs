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

//! Exact dense state-vector simulation of the small gate set that
//! probabilistic-quantum-memory circuits require, with deterministic
//! seeded sampling.
//!
//! # Conventions
//!
//! Qubit 0 is the *leftmost* bit of a pattern string. A basis state is
//! therefore indexed by the big-endian integer reading of the qubit values
//! in register order: on three qubits, `|011⟩` is index 3 and qubit 0 holds
//! its most significant bit. This matches the left-to-right notation of
//! stored patterns such as `|0111010101⟩`.
//!
//! Gate kernels update amplitudes in place over masked index pairs; nothing
//! here ever materializes a `2^q × 2^q` matrix. Sampling uses ChaCha8, a
//! portable counter-based generator, so histograms built from the same seed
//! are bit-identical across platforms.
//!
//! ```
//! use pqm_sim::{Circuit, Gate};
//!
//! let mut bell = Circuit::new(&[("q", 2)]).unwrap();
//! bell.push(Gate::H { target: 0 }).unwrap();
//! bell.push(Gate::Cx { control: 0, target: 1 }).unwrap();
//! let state = bell.run(0).unwrap();
//! assert!((state.amplitude(0).re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
//! assert!((state.amplitude(3).re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
//! ```

mod circuit;
mod error;
mod gate;
mod state;

pub use circuit::{sample_counts, Circuit, Register};
pub use error::SimError;
pub use gate::Gate;
pub use state::StateVector;

pub use num_complex::Complex64;
