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

//! Circuit rewrites: lowering to the hardware basis and X-pair cancellation.

use pqm_sim::{Circuit, Gate};

use crate::error::NisqError;

/// Rewrites a circuit into the {X, H, PHASE, CPHASE, CNOT} basis.
///
/// Zero-phase gates become X·PHASE·X on the same qubit; their controlled
/// form keeps the control on CPHASE and conjugates only the target. Gates
/// already in the basis pass through; Toffoli-class gates and the storage
/// amplitude splitter have no translation here and are rejected.
pub fn decompose_to_basis(circuit: &Circuit) -> Result<Circuit, NisqError> {
    let mut out = Vec::with_capacity(circuit.gate_count());
    for gate in circuit.ops() {
        match *gate {
            Gate::X { .. }
            | Gate::H { .. }
            | Gate::Phase { .. }
            | Gate::CPhase { .. }
            | Gate::Cx { .. } => out.push(gate.clone()),
            Gate::ZeroPhase { target, theta } => {
                out.push(Gate::X { target });
                out.push(Gate::Phase { target, theta });
                out.push(Gate::X { target });
            }
            Gate::CZeroPhase { control, target, theta } => {
                out.push(Gate::X { target });
                out.push(Gate::CPhase { control, target, theta });
                out.push(Gate::X { target });
            }
            Gate::Ccx { .. } | Gate::Mcx { .. } | Gate::AmpSplit { .. } => {
                return Err(NisqError::NotDecomposable(gate.name().to_owned()));
            }
        }
    }
    Ok(circuit.with_ops(out)?)
}

/// Removes adjacent self-inverse X pairs: two X gates on the same qubit
/// with no intervening gate touching that qubit annihilate.
///
/// A single pass suffices. Each incoming X either erases the most recent
/// surviving gate on its qubit (when that gate is an X) or is appended;
/// erasing exposes an older gate on the qubit only if *no* gate between
/// them touched it — impossible, since the erased X was pushed past those
/// same gates. The pass is therefore idempotent.
pub fn cancel_adjacent_x(circuit: &Circuit) -> Circuit {
    let mut out: Vec<Gate> = Vec::with_capacity(circuit.gate_count());
    for gate in circuit.ops() {
        if let Gate::X { target } = *gate {
            let last_touch = out.iter().rposition(|g| g.qubits().contains(&target));
            if let Some(i) = last_touch {
                if matches!(out[i], Gate::X { .. }) {
                    out.remove(i);
                    continue;
                }
            }
        }
        out.push(gate.clone());
    }
    // dropping gates cannot invalidate operands
    circuit.with_ops(out).expect("subset of a valid circuit")
}

#[cfg(test)]
mod tests {
    use super::*;
    use pqm_sim::StateVector;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn random_state(num_qubits: usize, rng: &mut ChaCha8Rng) -> StateVector {
        let dim = 1 << num_qubits;
        let mut amps: Vec<pqm_sim::Complex64> = (0..dim)
            .map(|_| {
                pqm_sim::Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
            })
            .collect();
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        for a in &mut amps {
            *a /= norm;
        }
        StateVector::from_amplitudes(amps).unwrap()
    }

    fn assert_same_action(a: &Circuit, b: &Circuit, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..8 {
            let mut run_a = random_state(a.num_qubits(), &mut rng);
            let mut run_b = run_a.clone();
            a.run_on(&mut run_a).unwrap();
            b.run_on(&mut run_b).unwrap();
            for index in 0..run_a.amplitudes().len() {
                let diff = run_a.amplitude(index) - run_b.amplitude(index);
                assert!(diff.norm() < 1e-12, "amplitude {index} drifted by {}", diff.norm());
            }
        }
    }

    #[test]
    fn zero_phase_lowers_to_three_basis_gates() {
        let mut circuit = Circuit::new(&[("m", 1)]).unwrap();
        circuit.push(Gate::ZeroPhase { target: 0, theta: PI / 6.0 }).unwrap();
        let lowered = decompose_to_basis(&circuit).unwrap();
        assert_eq!(lowered.gate_count(), 3);
        assert_same_action(&circuit, &lowered, 3);
    }

    #[test]
    fn controlled_zero_phase_matches_on_every_basis_state() {
        // n = 2, t = 1 retrieval angle: the controlled gate carries -2θ = -π/2
        let mut circuit = Circuit::new(&[("m", 1), ("c", 1)]).unwrap();
        circuit.push(Gate::CZeroPhase { control: 1, target: 0, theta: -PI / 2.0 }).unwrap();
        let lowered = decompose_to_basis(&circuit).unwrap();
        assert_eq!(lowered.gate_count(), 3);
        for basis in 0..4 {
            let mut direct = StateVector::from_basis(2, basis).unwrap();
            let mut via_basis = direct.clone();
            circuit.run_on(&mut direct).unwrap();
            lowered.run_on(&mut via_basis).unwrap();
            for index in 0..4 {
                let diff = direct.amplitude(index) - via_basis.amplitude(index);
                assert!(diff.norm() < 1e-12);
            }
        }
    }

    #[test]
    fn basis_circuits_pass_through_unchanged() {
        let mut circuit = Circuit::new(&[("q", 2)]).unwrap();
        circuit.push(Gate::H { target: 0 }).unwrap();
        circuit.push(Gate::Cx { control: 0, target: 1 }).unwrap();
        circuit.push(Gate::Phase { target: 1, theta: 0.25 }).unwrap();
        circuit.push(Gate::CPhase { control: 1, target: 0, theta: -0.5 }).unwrap();
        let lowered = decompose_to_basis(&circuit).unwrap();
        assert_eq!(lowered.ops(), circuit.ops());
    }

    #[test]
    fn toffoli_class_gates_are_rejected() {
        let mut circuit = Circuit::new(&[("q", 3)]).unwrap();
        circuit.push(Gate::Ccx { controls: [0, 1], target: 2 }).unwrap();
        assert!(matches!(
            decompose_to_basis(&circuit).unwrap_err(),
            NisqError::NotDecomposable(name) if name == "ccx"
        ));
    }

    #[test]
    fn adjacent_x_pairs_annihilate() {
        let mut circuit = Circuit::new(&[("q", 2)]).unwrap();
        circuit.push(Gate::X { target: 0 }).unwrap();
        circuit.push(Gate::X { target: 1 }).unwrap();
        circuit.push(Gate::X { target: 0 }).unwrap();
        circuit.push(Gate::X { target: 1 }).unwrap();
        assert_eq!(cancel_adjacent_x(&circuit).gate_count(), 0);
    }

    #[test]
    fn intervening_gates_block_cancellation() {
        let mut circuit = Circuit::new(&[("q", 1)]).unwrap();
        circuit.push(Gate::X { target: 0 }).unwrap();
        circuit.push(Gate::H { target: 0 }).unwrap();
        circuit.push(Gate::X { target: 0 }).unwrap();
        assert_eq!(cancel_adjacent_x(&circuit).gate_count(), 3);
    }

    #[test]
    fn gates_on_other_qubits_do_not_block() {
        let mut circuit = Circuit::new(&[("q", 2)]).unwrap();
        circuit.push(Gate::X { target: 0 }).unwrap();
        circuit.push(Gate::H { target: 1 }).unwrap();
        circuit.push(Gate::X { target: 0 }).unwrap();
        let slim = cancel_adjacent_x(&circuit);
        assert_eq!(slim.gate_count(), 1);
        assert!(matches!(slim.ops()[0], Gate::H { target: 1 }));
    }

    #[test]
    fn two_qubit_gates_count_as_touching_both() {
        let mut circuit = Circuit::new(&[("q", 2)]).unwrap();
        circuit.push(Gate::X { target: 1 }).unwrap();
        circuit.push(Gate::CPhase { control: 0, target: 1, theta: 0.1 }).unwrap();
        circuit.push(Gate::X { target: 1 }).unwrap();
        assert_eq!(cancel_adjacent_x(&circuit).gate_count(), 3);
    }

    #[test]
    fn cancellation_is_idempotent_and_preserves_action() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for trial in 0..30 {
            let num_qubits = rng.random_range(1..=4);
            let mut circuit = Circuit::new(&[("q", num_qubits)]).unwrap();
            for _ in 0..rng.random_range(0..40) {
                let target = rng.random_range(0..num_qubits);
                let gate = match rng.random_range(0..4) {
                    0 | 1 => Gate::X { target },
                    2 => Gate::H { target },
                    _ => {
                        if num_qubits == 1 {
                            Gate::Phase { target, theta: 0.3 }
                        } else {
                            let control = (target + 1) % num_qubits;
                            Gate::CPhase { control, target, theta: 0.3 }
                        }
                    }
                };
                circuit.push(gate).unwrap();
            }
            let once = cancel_adjacent_x(&circuit);
            let twice = cancel_adjacent_x(&once);
            assert_eq!(once.ops(), twice.ops(), "pass not idempotent on trial {trial}");
            assert!(once.gate_count() <= circuit.gate_count());
            assert_same_action(&circuit, &once, 100 + trial);
        }
    }
}
