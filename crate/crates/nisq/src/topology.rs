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

//! Checking a placed circuit against a device coupling graph.

use pqm_sim::{Circuit, Gate};

use crate::error::NisqError;
use crate::graph::CouplingGraph;

/// One two-qubit gate whose placement conflicts with (or merely strains)
/// the coupling graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairIssue {
    /// Index of the gate in the circuit's op list.
    pub gate_index: usize,
    /// Gate mnemonic, e.g. `"cx"`.
    pub gate: String,
    /// (control, target) as circuit qubit indices.
    pub logical: (usize, usize),
    /// (control, target) as device qubit indices under the mapping.
    pub physical: (usize, usize),
}

/// Outcome of [`validate_topology`].
///
/// `violations` are gates between uncoupled device qubits — the placement
/// is unusable as-is. `advisories` are CNOTs whose coupling exists only in
/// the reverse direction; they run after conjugating both sides with
/// Hadamards, at extra depth, so they are worth flagging but not fatal.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TopologyReport {
    pub violations: Vec<PairIssue>,
    pub advisories: Vec<PairIssue>,
}

impl TopologyReport {
    /// True when no gate needs an absent coupling.
    pub fn placeable(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Validates `mapping` (circuit qubit → device qubit) for every two-qubit
/// gate of a basis circuit against `graph`.
///
/// CPHASE is symmetric, so either edge direction satisfies it. CNOT wants
/// the edge in control→target orientation; the reverse orientation is
/// reported as an advisory. Single-qubit gates never constrain placement
/// and pass regardless of kind; multi-qubit gates outside the basis have
/// no defined placement cost and are rejected.
pub fn validate_topology(
    circuit: &Circuit,
    graph: &CouplingGraph,
    mapping: &[usize],
) -> Result<TopologyReport, NisqError> {
    if mapping.len() != circuit.num_qubits() {
        return Err(NisqError::MappingWrongLength {
            expected: circuit.num_qubits(),
            got: mapping.len(),
        });
    }
    for &physical in mapping {
        if physical >= graph.num_qubits() {
            return Err(NisqError::MappingOutOfRange { physical, qubits: graph.num_qubits() });
        }
    }
    let mut seen = mapping.to_vec();
    seen.sort_unstable();
    if let Some(dup) = seen.windows(2).find(|w| w[0] == w[1]) {
        return Err(NisqError::MappingNotInjective(dup[0]));
    }

    let mut report = TopologyReport::default();
    for (gate_index, gate) in circuit.ops().iter().enumerate() {
        let (control, target) = match *gate {
            Gate::Cx { control, target } | Gate::CPhase { control, target, .. } => {
                (control, target)
            }
            ref single if single.qubits().len() == 1 => continue,
            ref other => return Err(NisqError::NonBasisGate(other.name().to_owned())),
        };
        let physical = (mapping[control], mapping[target]);
        let issue = PairIssue {
            gate_index,
            gate: gate.name().to_owned(),
            logical: (control, target),
            physical,
        };
        match *gate {
            Gate::CPhase { .. } => {
                if !graph.connects(physical.0, physical.1) {
                    report.violations.push(issue);
                }
            }
            _ => {
                if graph.has_edge(physical.0, physical.1) {
                    // oriented correctly
                } else if graph.has_edge(physical.1, physical.0) {
                    report.advisories.push(issue);
                } else {
                    report.violations.push(issue);
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line_graph() -> CouplingGraph {
        // 0 → 1 → 2
        CouplingGraph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn cnot_with_the_edge_passes() {
        let mut circuit = Circuit::new(&[("q", 2)]).unwrap();
        circuit.push(Gate::Cx { control: 0, target: 1 }).unwrap();
        let report = validate_topology(&circuit, &line_graph(), &[0, 1]).unwrap();
        assert!(report.placeable());
        assert!(report.advisories.is_empty());
    }

    #[test]
    fn reversed_cnot_is_an_advisory_not_a_violation() {
        let mut circuit = Circuit::new(&[("q", 2)]).unwrap();
        circuit.push(Gate::Cx { control: 1, target: 0 }).unwrap();
        let report = validate_topology(&circuit, &line_graph(), &[0, 1]).unwrap();
        assert!(report.placeable());
        assert_eq!(report.advisories.len(), 1);
        assert_eq!(report.advisories[0].physical, (1, 0));
    }

    #[test]
    fn cphase_accepts_either_direction_but_not_absence() {
        let mut circuit = Circuit::new(&[("q", 2)]).unwrap();
        circuit.push(Gate::CPhase { control: 1, target: 0, theta: 0.1 }).unwrap();
        let ok = validate_topology(&circuit, &line_graph(), &[0, 1]).unwrap();
        assert!(ok.placeable() && ok.advisories.is_empty());

        let apart = validate_topology(&circuit, &line_graph(), &[0, 2]).unwrap();
        assert_eq!(apart.violations.len(), 1);
        assert_eq!(apart.violations[0].gate, "cphase");
        assert_eq!(apart.violations[0].logical, (1, 0));
        assert_eq!(apart.violations[0].physical, (2, 0));
    }

    #[test]
    fn mapping_is_checked_before_gates() {
        let circuit = Circuit::new(&[("q", 2)]).unwrap();
        assert!(matches!(
            validate_topology(&circuit, &line_graph(), &[0]).unwrap_err(),
            NisqError::MappingWrongLength { expected: 2, got: 1 }
        ));
        assert!(matches!(
            validate_topology(&circuit, &line_graph(), &[0, 7]).unwrap_err(),
            NisqError::MappingOutOfRange { physical: 7, qubits: 3 }
        ));
        assert!(matches!(
            validate_topology(&circuit, &line_graph(), &[1, 1]).unwrap_err(),
            NisqError::MappingNotInjective(1)
        ));
    }

    #[test]
    fn multi_qubit_gates_outside_the_basis_are_rejected() {
        let mut circuit = Circuit::new(&[("q", 2)]).unwrap();
        circuit.push(Gate::CZeroPhase { control: 0, target: 1, theta: 0.2 }).unwrap();
        assert!(matches!(
            validate_topology(&circuit, &line_graph(), &[0, 1]).unwrap_err(),
            NisqError::NonBasisGate(name) if name == "czero_phase"
        ));
    }
}
