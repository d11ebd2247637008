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

//! One-hot binarization of categorical datasets.

use pqm_memory::BitPattern;

use crate::error::DataError;
use crate::raw::RawDataset;

/// How one attribute maps into the bit pattern: `values[i]` is encoded by
/// setting bit `start + i` (and only it) within the attribute's bit block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttributeEncoding {
    pub start: usize,
    pub values: Vec<String>,
}

impl AttributeEncoding {
    pub fn width(&self) -> usize {
        self.values.len()
    }
}

/// A binarized dataset plus the map needed to decode it again.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodedDataset {
    patterns: Vec<(BitPattern, String)>,
    attributes: Vec<AttributeEncoding>,
    warnings: Vec<String>,
}

impl EncodedDataset {
    pub fn patterns(&self) -> &[(BitPattern, String)] {
        &self.patterns
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn pattern_len(&self) -> usize {
        self.attributes.iter().map(AttributeEncoding::width).sum()
    }

    pub fn attributes(&self) -> &[AttributeEncoding] {
        &self.attributes
    }

    /// Notes emitted during encoding, e.g. constant attributes.
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Distinct labels in first-seen order.
    pub fn labels(&self) -> Vec<&str> {
        let mut labels: Vec<&str> = Vec::new();
        for (_, label) in &self.patterns {
            if !labels.contains(&label.as_str()) {
                labels.push(label);
            }
        }
        labels
    }

    /// Maps an encoded pattern back to its attribute values.
    pub fn decode(&self, pattern: &BitPattern) -> Result<Vec<String>, DataError> {
        if pattern.len() != self.pattern_len() {
            return Err(pqm_memory::MemoryError::LengthMismatch {
                expected: self.pattern_len(),
                got: pattern.len(),
            }
            .into());
        }
        let mut values = Vec::with_capacity(self.attributes.len());
        for (column, attribute) in self.attributes.iter().enumerate() {
            let mut found: Option<&str> = None;
            for (offset, value) in attribute.values.iter().enumerate() {
                if pattern.bit(attribute.start + offset) {
                    if found.is_some() {
                        return Err(DataError::UndecodableAttribute { column });
                    }
                    found = Some(value);
                }
            }
            match found {
                Some(value) => values.push(value.to_string()),
                None => return Err(DataError::UndecodableAttribute { column }),
            }
        }
        Ok(values)
    }
}

/// Binarizes an imputed dataset: each attribute with v distinct values
/// becomes v bits, exactly one set per row; values are numbered in
/// first-seen order. Attributes with a single observed value still emit
/// their one (constant) bit, with a warning recorded.
pub fn one_hot_encode(data: &RawDataset) -> Result<EncodedDataset, DataError> {
    let marker = data.missing_marker();

    let mut attributes: Vec<AttributeEncoding> = Vec::with_capacity(data.attribute_count());
    let mut warnings = Vec::new();
    let mut start = 0;
    for column in 0..data.attribute_count() {
        let mut values: Vec<String> = Vec::new();
        for (row, _) in data.rows() {
            let value = &row[column];
            if value == marker {
                return Err(DataError::UnimputedValue { column });
            }
            if !values.contains(value) {
                values.push(value.clone());
            }
        }
        if values.len() == 1 {
            warnings.push(format!(
                "attribute {column} has the single value {:?}; it encodes to a constant bit",
                values[0]
            ));
        }
        let width = values.len();
        attributes.push(AttributeEncoding { start, values });
        start += width;
    }

    let pattern_len = start;
    let patterns = data
        .rows()
        .iter()
        .map(|(row, label)| {
            let mut bits = vec![false; pattern_len];
            for (column, attribute) in attributes.iter().enumerate() {
                let offset = attribute
                    .values
                    .iter()
                    .position(|v| v == &row[column])
                    .expect("every observed value was collected above");
                bits[attribute.start + offset] = true;
            }
            Ok((BitPattern::new(bits)?, label.clone()))
        })
        .collect::<Result<Vec<_>, DataError>>()?;

    Ok(EncodedDataset { patterns, attributes, warnings })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(rows: &[(&[&str], &str)]) -> RawDataset {
        RawDataset::new(
            rows.iter()
                .map(|(attrs, label)| {
                    (attrs.iter().map(|s| s.to_string()).collect(), label.to_string())
                })
                .collect(),
            "?",
        )
        .unwrap()
    }

    #[test]
    fn second_of_three_values_encodes_as_010() {
        let data = raw(&[(&["a"], "l"), (&["b"], "l"), (&["c"], "l")]);
        let encoded = one_hot_encode(&data).unwrap();
        assert_eq!(encoded.patterns()[1].0.to_string(), "010");
    }

    #[test]
    fn two_binary_attributes_make_four_bit_patterns() {
        let data = raw(&[(&["x", "u"], "l"), (&["y", "v"], "l")]);
        let encoded = one_hot_encode(&data).unwrap();
        assert_eq!(encoded.pattern_len(), 4);
        assert_eq!(encoded.patterns()[0].0.to_string(), "1010");
        assert_eq!(encoded.patterns()[1].0.to_string(), "0101");
    }

    #[test]
    fn pattern_length_is_the_arity_sum() {
        let data = raw(&[
            (&["a", "x", "1"], "l"),
            (&["b", "x", "2"], "l"),
            (&["c", "x", "3"], "m"),
            (&["a", "x", "4"], "m"),
        ]);
        let encoded = one_hot_encode(&data).unwrap();
        let arity_sum: usize = data.arities().iter().sum();
        assert_eq!(encoded.pattern_len(), arity_sum);
        assert_eq!(encoded.pattern_len(), 3 + 1 + 4);
    }

    #[test]
    fn constant_attribute_warns_but_encodes() {
        let data = raw(&[(&["same", "a"], "l"), (&["same", "b"], "l")]);
        let encoded = one_hot_encode(&data).unwrap();
        assert_eq!(encoded.warnings().len(), 1);
        assert!(encoded.warnings()[0].contains("attribute 0"));
        assert_eq!(encoded.pattern_len(), 3);
    }

    #[test]
    fn decoding_recovers_the_original_row() {
        let data = raw(&[
            (&["a", "x", "1"], "l"),
            (&["b", "y", "2"], "m"),
            (&["c", "x", "1"], "l"),
        ]);
        let encoded = one_hot_encode(&data).unwrap();
        for ((pattern, _), (row, _)) in encoded.patterns().iter().zip(data.rows()) {
            assert_eq!(&encoded.decode(pattern).unwrap(), row);
        }
    }

    #[test]
    fn leftover_markers_are_rejected() {
        let data = raw(&[(&["a", "?"], "l"), (&["b", "x"], "l")]);
        assert!(matches!(
            one_hot_encode(&data).unwrap_err(),
            DataError::UnimputedValue { column: 1 }
        ));
    }

    #[test]
    fn garbage_patterns_do_not_decode() {
        let data = raw(&[(&["a"], "l"), (&["b"], "l")]);
        let encoded = one_hot_encode(&data).unwrap();
        assert!(matches!(
            encoded.decode(&"11".parse().unwrap()).unwrap_err(),
            DataError::UndecodableAttribute { column: 0 }
        ));
        assert!(matches!(
            encoded.decode(&"00".parse().unwrap()).unwrap_err(),
            DataError::UndecodableAttribute { column: 0 }
        ));
    }
}
