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

//! Frozen QASM emissions for the one- and two-qubit catalogued memories.
//!
//! The goldens pin the emission byte-for-byte: any drift in folding order,
//! angle formatting, or header layout shows up as a diff here. Run the
//! ignored `regenerate_golden_files` test to rewrite them after an
//! intentional format change.

use std::fs;
use std::path::PathBuf;

use pqm_memory::{BitPattern, MemoryContent, PqmParameter};
use pqm_nisq::{emit_qasm, fold_classical_input, parse_qasm, prepare_memory_subcircuit};

/// (memory patterns, golden file, exact P(c=0) for the all-zeros input at t=1)
const CASES: [(&[&str], &str, f64); 6] = [
    (&["0"], "mem_0.qasm", 1.0),
    (&["0", "1"], "mem_0_1.qasm", 0.5),
    (&["1"], "mem_1.qasm", 0.0),
    (&["00"], "mem_00.qasm", 1.0),
    (&["00", "01"], "mem_00_01.qasm", 0.75),
    (&["11"], "mem_11.qasm", 0.0),
];

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn emission(patterns: &[&str]) -> String {
    let memory =
        MemoryContent::new(patterns.iter().map(|s| s.parse().unwrap()).collect()).unwrap();
    let n = memory.pattern_len();
    let input: BitPattern = "0".repeat(n).parse().unwrap();
    let prep = prepare_memory_subcircuit(&memory).unwrap();
    let reduced = fold_classical_input(n, &input, &prep, PqmParameter::ONE).unwrap();
    emit_qasm(reduced.circuit(), &[reduced.control_qubit()]).unwrap()
}

#[test]
fn emissions_match_the_committed_goldens() {
    for (patterns, name, _) in CASES {
        let expected = fs::read_to_string(golden_path(name))
            .unwrap_or_else(|e| panic!("missing golden {name}: {e}"));
        assert_eq!(emission(patterns), expected, "emission drifted from {name}");
    }
}

#[test]
fn goldens_round_trip_through_the_simulator() {
    for (_, name, expected_p0) in CASES {
        let text = fs::read_to_string(golden_path(name)).unwrap();
        let (circuit, measured) = parse_qasm(&text).unwrap();
        assert_eq!(measured.len(), 1);
        let state = circuit.run(0).unwrap();
        let p0 = state.prob_of_qubit(measured[0], false).unwrap();
        assert!(
            (p0 - expected_p0).abs() < 1e-9,
            "{name} parsed back to p0 = {p0}, expected {expected_p0}"
        );
        assert_eq!(emit_qasm(&circuit, &measured).unwrap(), text, "{name} not byte-stable");
    }
}

#[test]
#[ignore = "rewrites the committed goldens; run only after an intentional format change"]
fn regenerate_golden_files() {
    fs::create_dir_all(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")).unwrap();
    for (patterns, name, _) in CASES {
        fs::write(golden_path(name), emission(patterns)).unwrap();
    }
}
