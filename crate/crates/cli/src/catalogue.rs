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

//! The superposition-recovery catalogue: every published (pattern size,
//! memory state) configuration, scored for the all-zeros input at t = 1.

use pqm_memory::{BitPattern, MemoryContent, MemoryError};

/// One catalogue configuration.
///
/// `published` is the expected P(c = 0) exactly as the reference table
/// prints it (four decimals). The true closed-form values of the
/// `"1000"` and `"1110"` rows are cos²(π/8) = 0.85355339… and
/// cos²(3π/8) = 0.14644661…; the published 0.8535/0.1465 pair is off by
/// 5.34e-5 in opposite directions (a truncation and a mis-rounding of the
/// same low-precision intermediate). Tests that pin the published column
/// carry that caveat.
#[derive(Debug, Clone, Copy)]
pub struct CatalogueRow {
    pub patterns: &'static [&'static str],
    pub published: f64,
}

/// All 21 rows, in table order. The reference's prose says twenty, but the
/// table itself lists 3 + 3 + 6 + 9 configurations.
pub const ROWS: [CatalogueRow; 21] = [
    CatalogueRow { patterns: &["0"], published: 1.0000 },
    CatalogueRow { patterns: &["0", "1"], published: 0.5000 },
    CatalogueRow { patterns: &["1"], published: 0.0000 },
    CatalogueRow { patterns: &["00"], published: 1.0000 },
    CatalogueRow { patterns: &["00", "01"], published: 0.7500 },
    CatalogueRow { patterns: &["11"], published: 0.0000 },
    CatalogueRow { patterns: &["000"], published: 1.0000 },
    CatalogueRow { patterns: &["000", "010"], published: 0.8750 },
    CatalogueRow { patterns: &["000", "100"], published: 0.8750 },
    CatalogueRow { patterns: &["000", "001"], published: 0.8750 },
    CatalogueRow { patterns: &["110", "111"], published: 0.1250 },
    CatalogueRow { patterns: &["111"], published: 0.0000 },
    CatalogueRow { patterns: &["0000"], published: 1.0000 },
    CatalogueRow { patterns: &["0000", "0100"], published: 0.9268 },
    CatalogueRow { patterns: &["1000"], published: 0.8535 },
    CatalogueRow { patterns: &["0100", "1100"], published: 0.6768 },
    CatalogueRow { patterns: &["1010"], published: 0.5000 },
    CatalogueRow { patterns: &["0110", "1110"], published: 0.3232 },
    CatalogueRow { patterns: &["1110"], published: 0.1465 },
    CatalogueRow { patterns: &["0111", "1111"], published: 0.0732 },
    CatalogueRow { patterns: &["1111"], published: 0.0000 },
];

impl CatalogueRow {
    pub fn memory(&self) -> Result<MemoryContent, MemoryError> {
        MemoryContent::new(self.patterns.iter().map(|s| s.parse()).collect::<Result<_, _>>()?)
    }

    /// The all-zeros probe every catalogue row is scored against.
    pub fn input(&self) -> BitPattern {
        "0".repeat(self.patterns[0].len()).parse().expect("zeros always parse")
    }
}
