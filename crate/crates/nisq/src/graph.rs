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

//! Device coupling graphs.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::NisqError;

/// Directed qubit couplings of a device: an edge (a, b) means a can control
/// a two-qubit gate targeting b.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CouplingGraph {
    num_qubits: usize,
    edges: BTreeSet<(usize, usize)>,
}

/// On-disk shape: {"qubits": n, "edges": [[a, b], …]}.
#[derive(Serialize, Deserialize)]
struct GraphFile {
    qubits: usize,
    edges: Vec<(usize, usize)>,
}

impl CouplingGraph {
    pub fn new(
        num_qubits: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, NisqError> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(NisqError::SelfLoop(a));
            }
            if a >= num_qubits || b >= num_qubits {
                return Err(NisqError::EdgeOutOfRange { a, b, qubits: num_qubits });
            }
            set.insert((a, b));
        }
        Ok(CouplingGraph { num_qubits, edges: set })
    }

    pub fn from_json(text: &str) -> Result<Self, NisqError> {
        let file: GraphFile =
            serde_json::from_str(text).map_err(|e| NisqError::GraphJson(e.to_string()))?;
        CouplingGraph::new(file.qubits, file.edges)
    }

    pub fn to_json(&self) -> String {
        let file = GraphFile {
            qubits: self.num_qubits,
            edges: self.edges.iter().copied().collect(),
        };
        serde_json::to_string_pretty(&file).expect("graph serializes")
    }

    /// The 5-qubit device layout the experiments ran on.
    pub fn tenerife() -> Self {
        CouplingGraph::from_json(include_str!("../fixtures/tenerife.json"))
            .expect("bundled fixture is valid")
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Directed coupling a → b.
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a, b))
    }

    /// Coupling in either direction — the symmetric view.
    pub fn connects(&self, a: usize, b: usize) -> bool {
        self.has_edge(a, b) || self.has_edge(b, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_device_matches_its_published_layout() {
        let g = CouplingGraph::tenerife();
        assert_eq!(g.num_qubits(), 5);
        let expected = [(2, 0), (2, 1), (1, 0), (3, 2), (3, 4), (4, 2)];
        assert_eq!(g.edges().count(), expected.len());
        for (a, b) in expected {
            assert!(g.has_edge(a, b), "missing {a} → {b}");
        }
        assert!(!g.has_edge(0, 1), "edges are directed");
        assert!(g.connects(0, 1));
        assert!(!g.connects(3, 0));
    }

    #[test]
    fn json_round_trips() {
        let g = CouplingGraph::tenerife();
        assert_eq!(CouplingGraph::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn invalid_graphs_are_rejected() {
        assert!(matches!(
            CouplingGraph::new(3, [(1, 1)]).unwrap_err(),
            NisqError::SelfLoop(1)
        ));
        assert!(matches!(
            CouplingGraph::new(3, [(0, 3)]).unwrap_err(),
            NisqError::EdgeOutOfRange { a: 0, b: 3, qubits: 3 }
        ));
        assert!(matches!(
            CouplingGraph::from_json("{\"qubits\": 2}").unwrap_err(),
            NisqError::GraphJson(_)
        ));
    }
}
