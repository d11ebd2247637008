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

use crate::error::SimError;

/// One gate application inside a circuit.
///
/// Controls are listed before targets; every operand must name a distinct
/// qubit. Angles are radians.
#[derive(Debug, Clone, PartialEq)]
pub enum Gate {
    /// Bit flip.
    X { target: usize },
    /// Hadamard: |0⟩ ↦ (|0⟩+|1⟩)/√2, |1⟩ ↦ (|0⟩−|1⟩)/√2.
    H { target: usize },
    /// Controlled bit flip.
    Cx { control: usize, target: usize },
    /// Doubly controlled bit flip (Toffoli).
    Ccx { controls: [usize; 2], target: usize },
    /// Bit flip conditioned on every listed control being |1⟩.
    Mcx { controls: Vec<usize>, target: usize },
    /// diag(1, e^{iθ}): phase on the |1⟩ component.
    Phase { target: usize, theta: f64 },
    /// diag(e^{iθ}, 1): phase on the |0⟩ component.
    ZeroPhase { target: usize, theta: f64 },
    /// `Phase` on the target, applied only where the control is |1⟩.
    CPhase { control: usize, target: usize, theta: f64 },
    /// `ZeroPhase` on the target, applied only where the control is |1⟩.
    CZeroPhase { control: usize, target: usize, theta: f64 },
    /// Memory-write rotation: where the control is |1⟩, mixes the target's
    /// components as
    ///
    /// ```text
    /// |10⟩ ↦ √((j−1)/j)·|10⟩ − (1/√j)·|11⟩
    /// |11⟩ ↦ (1/√j)·|10⟩ + √((j−1)/j)·|11⟩
    /// ```
    ///
    /// peeling a 1/√j share of amplitude off the |11⟩ branch. Identity on
    /// the control-0 subspace. Requires j ≥ 1.
    AmpSplit { control: usize, target: usize, j: usize },
}

impl Gate {
    /// Short lowercase mnemonic, for error messages and reports.
    pub fn name(&self) -> &'static str {
        match self {
            Gate::X { .. } => "x",
            Gate::H { .. } => "h",
            Gate::Cx { .. } => "cx",
            Gate::Ccx { .. } => "ccx",
            Gate::Mcx { .. } => "mcx",
            Gate::Phase { .. } => "phase",
            Gate::ZeroPhase { .. } => "zero_phase",
            Gate::CPhase { .. } => "cphase",
            Gate::CZeroPhase { .. } => "czero_phase",
            Gate::AmpSplit { .. } => "amp_split",
        }
    }

    /// The same gate with every operand rewritten by `f`, for embedding a
    /// circuit into a larger register layout.
    pub fn remap(&self, f: impl Fn(usize) -> usize) -> Gate {
        match self {
            Gate::X { target } => Gate::X { target: f(*target) },
            Gate::H { target } => Gate::H { target: f(*target) },
            Gate::Cx { control, target } => {
                Gate::Cx { control: f(*control), target: f(*target) }
            }
            Gate::Ccx { controls, target } => Gate::Ccx {
                controls: [f(controls[0]), f(controls[1])],
                target: f(*target),
            },
            Gate::Mcx { controls, target } => Gate::Mcx {
                controls: controls.iter().map(|&c| f(c)).collect(),
                target: f(*target),
            },
            Gate::Phase { target, theta } => Gate::Phase { target: f(*target), theta: *theta },
            Gate::ZeroPhase { target, theta } => {
                Gate::ZeroPhase { target: f(*target), theta: *theta }
            }
            Gate::CPhase { control, target, theta } => {
                Gate::CPhase { control: f(*control), target: f(*target), theta: *theta }
            }
            Gate::CZeroPhase { control, target, theta } => {
                Gate::CZeroPhase { control: f(*control), target: f(*target), theta: *theta }
            }
            Gate::AmpSplit { control, target, j } => {
                Gate::AmpSplit { control: f(*control), target: f(*target), j: *j }
            }
        }
    }

    /// Operand qubits in declaration order, controls first.
    pub fn qubits(&self) -> Vec<usize> {
        match self {
            Gate::X { target } | Gate::H { target } => vec![*target],
            Gate::Phase { target, .. } | Gate::ZeroPhase { target, .. } => vec![*target],
            Gate::Cx { control, target }
            | Gate::CPhase { control, target, .. }
            | Gate::CZeroPhase { control, target, .. }
            | Gate::AmpSplit { control, target, .. } => vec![*control, *target],
            Gate::Ccx { controls, target } => vec![controls[0], controls[1], *target],
            Gate::Mcx { controls, target } => {
                let mut qs = controls.clone();
                qs.push(*target);
                qs
            }
        }
    }

    pub(crate) fn validate(&self, num_qubits: usize) -> Result<(), SimError> {
        let qs = self.qubits();
        for &q in &qs {
            if q >= num_qubits {
                return Err(SimError::QubitOutOfRange { qubit: q, num_qubits });
            }
        }
        let mut seen = qs.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != qs.len() {
            return Err(SimError::DuplicateOperands(qs));
        }
        match self {
            Gate::Mcx { controls, .. } if controls.is_empty() => Err(SimError::NoControls),
            Gate::AmpSplit { j: 0, .. } => Err(SimError::BadSplitDivisor(0)),
            _ => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn operands_must_be_distinct() {
        let g = Gate::Cx { control: 1, target: 1 };
        assert_eq!(g.validate(3), Err(SimError::DuplicateOperands(vec![1, 1])));
    }

    #[test]
    fn operands_must_be_in_range() {
        let g = Gate::H { target: 4 };
        assert_eq!(
            g.validate(4),
            Err(SimError::QubitOutOfRange { qubit: 4, num_qubits: 4 })
        );
    }

    #[test]
    fn remap_rewrites_every_operand() {
        let shift = |q: usize| q + 3;
        assert_eq!(
            Gate::Cx { control: 0, target: 1 }.remap(shift),
            Gate::Cx { control: 3, target: 4 }
        );
        assert_eq!(
            Gate::Mcx { controls: vec![0, 2], target: 1 }.remap(shift),
            Gate::Mcx { controls: vec![3, 5], target: 4 }
        );
        let phase = Gate::CPhase { control: 1, target: 0, theta: 0.25 }.remap(shift);
        assert_eq!(phase, Gate::CPhase { control: 4, target: 3, theta: 0.25 });
    }

    #[test]
    fn mcx_needs_controls_and_split_needs_positive_j() {
        assert_eq!(
            Gate::Mcx { controls: vec![], target: 0 }.validate(2),
            Err(SimError::NoControls)
        );
        assert_eq!(
            Gate::AmpSplit { control: 0, target: 1, j: 0 }.validate(2),
            Err(SimError::BadSplitDivisor(0))
        );
        assert!(Gate::AmpSplit { control: 0, target: 1, j: 1 }.validate(2).is_ok());
    }
}
