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

use std::collections::HashSet;
use std::str::FromStr;

use crate::error::MemoryError;
use crate::pattern::BitPattern;

/// The ordered, pairwise-distinct pattern list a memory stores.
///
/// Distinctness matters to the storage circuit: the write rotation's
/// bookkeeping assumes each pattern is written once, and a repeated write
/// would leak amplitude back out of already-stored branches. Closed-form
/// evaluation would tolerate repeats, but the type keeps one rule for every
/// route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MemoryContent {
    patterns: Vec<BitPattern>,
}

impl MemoryContent {
    pub fn new(patterns: Vec<BitPattern>) -> Result<Self, MemoryError> {
        let first = patterns.first().ok_or(MemoryError::EmptyMemory)?;
        let n = first.len();
        let mut seen = HashSet::with_capacity(patterns.len());
        for pat in &patterns {
            if pat.len() != n {
                return Err(MemoryError::LengthMismatch { expected: n, got: pat.len() });
            }
            if !seen.insert(pat.clone()) {
                return Err(MemoryError::DuplicatePattern(pat.to_string()));
            }
        }
        Ok(Self { patterns })
    }

    /// Parses the plain-text memory format: one bitstring per line, with
    /// blank lines and `#` comments (whole-line or trailing) ignored.
    pub fn from_text(text: &str) -> Result<Self, MemoryError> {
        let mut patterns = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let pat = BitPattern::from_str(line).map_err(|e| MemoryError::BadLine {
                line: idx + 1,
                source: Box::new(e),
            })?;
            patterns.push(pat);
        }
        Self::new(patterns)
    }

    /// Pattern length n.
    pub fn pattern_len(&self) -> usize {
        self.patterns[0].len()
    }

    /// Number of stored patterns p.
    pub fn count(&self) -> usize {
        self.patterns.len()
    }

    pub fn patterns(&self) -> &[BitPattern] {
        &self.patterns
    }
}

/// The retrieval scale parameter t, constrained to (0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PqmParameter(f64);

impl PqmParameter {
    pub fn new(t: f64) -> Result<Self, MemoryError> {
        if t.is_finite() && t > 0.0 && t <= 1.0 {
            Ok(Self(t))
        } else {
            Err(MemoryError::ParameterOutOfRange(t))
        }
    }

    /// The plain (non-parametric) memory.
    pub const ONE: PqmParameter = PqmParameter(1.0);

    pub fn value(self) -> f64 {
        self.0
    }
}

impl Default for PqmParameter {
    fn default() -> Self {
        Self::ONE
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BitPattern {
        s.parse().unwrap()
    }

    #[test]
    fn accepts_distinct_equal_length_patterns() {
        let m = MemoryContent::new(vec![p("0110"), p("0101")]).unwrap();
        assert_eq!(m.pattern_len(), 4);
        assert_eq!(m.count(), 2);
    }

    #[test]
    fn rejects_empty_mixed_and_duplicate() {
        assert_eq!(MemoryContent::new(vec![]).unwrap_err(), MemoryError::EmptyMemory);
        assert_eq!(
            MemoryContent::new(vec![p("01"), p("011")]).unwrap_err(),
            MemoryError::LengthMismatch { expected: 2, got: 3 }
        );
        assert_eq!(
            MemoryContent::new(vec![p("01"), p("01")]).unwrap_err(),
            MemoryError::DuplicatePattern("01".into())
        );
    }

    #[test]
    fn parses_text_with_comments_and_blanks() {
        let m = MemoryContent::from_text("# stored set\n0110  \n\n0101 # second\n").unwrap();
        assert_eq!(m.count(), 2);
        assert_eq!(m.patterns()[1], p("0101"));
    }

    #[test]
    fn text_errors_carry_line_numbers() {
        let err = MemoryContent::from_text("0110\n012\n").unwrap_err();
        assert_eq!(
            err,
            MemoryError::BadLine {
                line: 2,
                source: Box::new(MemoryError::BadPatternChar('2'))
            }
        );
    }

    #[test]
    fn parameter_range_is_half_open() {
        assert!(PqmParameter::new(1.0).is_ok());
        assert!(PqmParameter::new(0.044).is_ok());
        for bad in [0.0, -0.2, 1.0001, f64::NAN, f64::INFINITY] {
            assert!(PqmParameter::new(bad).is_err(), "{bad} accepted");
        }
    }
}
