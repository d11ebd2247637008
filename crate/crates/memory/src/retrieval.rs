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
use pqm_sim::{Circuit, Gate, StateVector};

use crate::content::{MemoryContent, PqmParameter};
use crate::error::MemoryError;
use crate::pattern::{hamming, BitPattern};
use crate::storage::memory_amplitudes;

/// Exact retrieval probabilities, read from amplitudes without sampling.
#[derive(Debug, Clone, PartialEq)]
pub struct RetrievalOutcome {
    /// Probability of reading 0 on the control qubit — the memory's score
    /// for the input (higher means closer to the stored set).
    pub p0: f64,
    /// Complement; p0 + p1 = 1 within 1e-9.
    pub p1: f64,
    /// Distribution of the memory register over the stored patterns after
    /// post-selecting c = 0; `None` when p0 is (numerically) zero.
    pub per_pattern: Option<Vec<(BitPattern, f64)>>,
}

/// How [`retrieve_exact_with`] prepares the memory state on the m register.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MemoryPrep {
    /// Write 1/√p amplitudes directly. Fast default; bypasses the storage
    /// circuit entirely.
    Inject,
    /// Run the full storage circuit on 2n+2 qubits and carry its m-register
    /// state over. Exists so the two routes can be held against each other.
    StorageCircuit,
}

/// Builds the retrieval circuit over registers i (n), m (n), c (1).
///
/// Gate order: load the input onto i; H on c; mark each m_j with the
/// complement of (m_j ⊕ i_j) so agreements read 1; kick a phase of
/// θ = π/(2nt) onto every still-0 (disagreeing) m_j, then −2θ of the same
/// shape controlled on c; unmark; H on c. Interference between the two c
/// branches turns the phase difference into P(c=0) =
/// (1/p)·Σ cos²(θ·d_H(input, pattern)).
pub fn build_retrieval_circuit(
    n: usize,
    input: &BitPattern,
    t: PqmParameter,
) -> Result<Circuit, MemoryError> {
    if input.len() != n {
        return Err(MemoryError::LengthMismatch { expected: n, got: input.len() });
    }
    let mut circuit = Circuit::new(&[("i", n), ("m", n), ("c", 1)])?;
    let m0 = n;
    let c = 2 * n;
    let theta = std::f64::consts::PI / (2.0 * n as f64 * t.value());
    for j in input.ones() {
        circuit.push(Gate::X { target: j })?;
    }
    circuit.push(Gate::H { target: c })?;
    for j in 0..n {
        circuit.push(Gate::Cx { control: j, target: m0 + j })?;
        circuit.push(Gate::X { target: m0 + j })?;
    }
    for j in 0..n {
        circuit.push(Gate::ZeroPhase { target: m0 + j, theta })?;
    }
    for j in 0..n {
        circuit.push(Gate::CZeroPhase { control: c, target: m0 + j, theta: -2.0 * theta })?;
    }
    for j in 0..n {
        circuit.push(Gate::X { target: m0 + j })?;
        circuit.push(Gate::Cx { control: j, target: m0 + j })?;
    }
    circuit.push(Gate::H { target: c })?;
    Ok(circuit)
}

/// Storage and retrieval chained into one circuit runnable from |0…0⟩,
/// e.g. for shot sampling. Returns the circuit and its control qubit.
///
/// An initial X raises the u2 write flag (storage expects to start from
/// |0…0; 01; 0…0⟩). The storage pass then leaves p back at |0…0⟩ and u at
/// |00⟩, so retrieval reuses them: p doubles as the input register and
/// u1 as the control. Total width stays at the storage circuit's 2n+2.
pub fn build_store_and_retrieve_circuit(
    memory: &MemoryContent,
    input: &BitPattern,
    t: PqmParameter,
) -> Result<(Circuit, usize), MemoryError> {
    let n = memory.pattern_len();
    if input.len() != n {
        return Err(MemoryError::LengthMismatch { expected: n, got: input.len() });
    }
    let storage = crate::storage::build_storage_circuit(memory)?;
    let c = n; // u1
    let relocate = |q: usize| {
        if q < n {
            q // input register i_j → p_j
        } else if q < 2 * n {
            q + 2 // m_j → m_j, past the two u qubits
        } else {
            c
        }
    };
    let retrieval = build_retrieval_circuit(n, input, t)?;
    let mut ops: Vec<Gate> = vec![Gate::X { target: n + 1 }];
    ops.extend(storage.ops().iter().cloned());
    ops.extend(retrieval.ops().iter().map(|g| g.remap(relocate)));
    Ok((storage.with_ops(ops)?, c))
}

/// Scores `input` against `memory` exactly, preparing the memory by
/// amplitude injection. See [`retrieve_exact_with`].
pub fn retrieve_exact(
    memory: &MemoryContent,
    input: &BitPattern,
    t: PqmParameter,
) -> Result<RetrievalOutcome, MemoryError> {
    retrieve_exact_with(memory, input, t, MemoryPrep::Inject)
}

/// Scores `input` against `memory` by running the retrieval circuit and
/// reading the control qubit's marginal from the final amplitudes.
pub fn retrieve_exact_with(
    memory: &MemoryContent,
    input: &BitPattern,
    t: PqmParameter,
    prep: MemoryPrep,
) -> Result<RetrievalOutcome, MemoryError> {
    let n = memory.pattern_len();
    if input.len() != n {
        return Err(MemoryError::LengthMismatch { expected: n, got: input.len() });
    }
    let circuit = build_retrieval_circuit(n, input, t)?;
    let m_amps = match prep {
        MemoryPrep::Inject => {
            let mut amps = vec![Complex64::ZERO; 1 << n];
            let share = 1.0 / (memory.count() as f64).sqrt();
            for pat in memory.patterns() {
                amps[pat.value()] = Complex64::new(share, 0.0);
            }
            amps
        }
        MemoryPrep::StorageCircuit => memory_amplitudes(memory)?,
    };
    // Embed |0…0⟩_i ⊗ |M⟩_m ⊗ |0⟩_c: with i and c zero, the basis index is
    // the m value shifted past the trailing c bit.
    let mut amps = vec![Complex64::ZERO; 1 << (2 * n + 1)];
    for (m_val, a) in m_amps.iter().enumerate() {
        amps[m_val << 1] = *a;
    }
    let mut state = StateVector::from_amplitudes(amps)?;
    circuit.run_on(&mut state)?;

    let c = 2 * n;
    let p0 = state.prob_of_qubit(c, false)?;
    let p1 = state.prob_of_qubit(c, true)?;
    let per_pattern = per_pattern_distribution(&state, memory, p0);
    Ok(RetrievalOutcome { p0, p1, per_pattern })
}

/// Memory-register distribution conditional on c = 0, over stored patterns.
fn per_pattern_distribution(
    state: &StateVector,
    memory: &MemoryContent,
    p0: f64,
) -> Option<Vec<(BitPattern, f64)>> {
    if p0 <= 1e-15 {
        return None;
    }
    let n = memory.pattern_len();
    let m_mask = (1 << n) - 1;
    let mut by_value = vec![0.0f64; 1 << n];
    for (index, amp) in state.amplitudes().iter().enumerate() {
        if index & 1 == 0 {
            by_value[(index >> 1) & m_mask] += amp.norm_sqr();
        }
    }
    Some(
        memory
            .patterns()
            .iter()
            .map(|pat| (pat.clone(), by_value[pat.value()] / p0))
            .collect(),
    )
}

/// Closed-form retrieval probability over an explicit pattern list.
///
/// Unlike [`MemoryContent`], the list may repeat patterns: the formula is a
/// plain average of cos²(θ·d_H) terms and is well-defined for multisets.
pub fn closed_form_p0_of(
    patterns: &[BitPattern],
    input: &BitPattern,
    t: PqmParameter,
) -> Result<f64, MemoryError> {
    if patterns.is_empty() {
        return Err(MemoryError::EmptyMemory);
    }
    let n = input.len();
    let theta = std::f64::consts::PI / (2.0 * n as f64 * t.value());
    let mut total = 0.0;
    for pat in patterns {
        let d = hamming(input, pat)?;
        total += (theta * d as f64).cos().powi(2);
    }
    Ok(total / patterns.len() as f64)
}

/// Closed-form P(c = 0) for a memory: (1/p)·Σ_k cos²(π·d_H(input, p^k)/(2nt)).
pub fn closed_form_p0(
    memory: &MemoryContent,
    input: &BitPattern,
    t: PqmParameter,
) -> Result<f64, MemoryError> {
    closed_form_p0_of(memory.patterns(), input, t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> BitPattern {
        s.parse().unwrap()
    }

    fn mem(patterns: &[&str]) -> MemoryContent {
        MemoryContent::new(patterns.iter().map(|s| pat(s)).collect()).unwrap()
    }

    #[test]
    fn circuit_width_is_2n_plus_1() {
        let c = build_retrieval_circuit(4, &pat("0000"), PqmParameter::ONE).unwrap();
        assert_eq!(c.num_qubits(), 9);
        assert_eq!(c.register("c"), Some(8..9));
    }

    #[test]
    fn stored_input_scores_one() {
        let out = retrieve_exact(&mem(&["0110"]), &pat("0110"), PqmParameter::ONE).unwrap();
        assert!((out.p0 - 1.0).abs() < 1e-12);
        assert!(out.p1.abs() < 1e-12);
    }

    #[test]
    fn antipodal_input_scores_zero_and_has_no_conditional() {
        let out = retrieve_exact(&mem(&["1111"]), &pat("0000"), PqmParameter::ONE).unwrap();
        assert!(out.p0.abs() < 1e-12);
        assert_eq!(out.per_pattern, None);
    }

    #[test]
    fn closed_form_matches_known_values() {
        // Two patterns at distances {0, 1} of n = 3: (1 + cos²(π/6))/2.
        let p0 = closed_form_p0(&mem(&["000", "010"]), &pat("000"), PqmParameter::ONE).unwrap();
        assert!((p0 - 0.875).abs() < 1e-12);
        // Single pattern at full distance vanishes.
        let p0 = closed_form_p0(&mem(&["111"]), &pat("000"), PqmParameter::ONE).unwrap();
        assert!(p0.abs() < 1e-12);
        // Scaled variant: d = 1, n = 10, t = 0.044.
        let p0 = closed_form_p0_of(
            &[pat("0110010101")],
            &pat("0111010101"),
            PqmParameter::new(0.044).unwrap(),
        )
        .unwrap();
        assert!((p0 - (std::f64::consts::PI / 0.88).cos().powi(2)).abs() < 1e-12);
        assert!((p0 - 0.83).abs() < 0.005);
    }

    #[test]
    fn closed_form_accepts_repeated_patterns() {
        let single = closed_form_p0_of(&[pat("01")], &pat("00"), PqmParameter::ONE).unwrap();
        let repeated =
            closed_form_p0_of(&[pat("01"), pat("01")], &pat("00"), PqmParameter::ONE).unwrap();
        assert!((single - repeated).abs() < 1e-15);
    }

    #[test]
    fn p0_decreases_with_distance_at_t_one() {
        let n = 5;
        let input = pat("00000");
        let mut last = f64::INFINITY;
        for d in 0..=n {
            let bits: String = (0..n).map(|j| if j < d { '1' } else { '0' }).collect();
            let p0 =
                closed_form_p0(&mem(&[&bits]), &input, PqmParameter::ONE).unwrap();
            assert!(p0 < last, "d={d}: {p0} not below {last}");
            last = p0;
        }
    }

    #[test]
    fn chained_storage_retrieval_matches_the_closed_form() {
        let cases = [
            (vec!["0011", "1100", "0110"], "0111"),
            (vec!["000", "001"], "101"),
            (vec!["01"], "11"),
        ];
        for (patterns, input) in cases {
            let patterns: Vec<&str> = patterns;
            let memory = mem(&patterns);
            let t = PqmParameter::new(0.7).unwrap();
            let (circuit, c) =
                build_store_and_retrieve_circuit(&memory, &pat(input), t).unwrap();
            assert_eq!(circuit.num_qubits(), 2 * memory.pattern_len() + 2);
            let state = circuit.run(0).unwrap();
            let p0 = state.prob_of_qubit(c, false).unwrap();
            let expected = closed_form_p0(&memory, &pat(input), t).unwrap();
            assert!(
                (p0 - expected).abs() < 1e-9,
                "chained circuit for {patterns:?}/{input}: {p0} vs {expected}"
            );
        }
    }

    #[test]
    fn outcome_invariants_hold() {
        let out = retrieve_exact(&mem(&["0011", "1100", "0110"]), &pat("0111"), PqmParameter::ONE)
            .unwrap();
        assert!((out.p0 + out.p1 - 1.0).abs() < 1e-9);
        let per = out.per_pattern.unwrap();
        let total: f64 = per.iter().map(|(_, q)| q).sum();
        assert!((total - 1.0).abs() < 1e-9);
    }

    #[test]
    fn length_mismatches_are_rejected() {
        assert!(matches!(
            retrieve_exact(&mem(&["0011"]), &pat("011"), PqmParameter::ONE),
            Err(MemoryError::LengthMismatch { .. })
        ));
        assert!(matches!(
            build_retrieval_circuit(3, &pat("0111"), PqmParameter::ONE),
            Err(MemoryError::LengthMismatch { .. })
        ));
    }
}
