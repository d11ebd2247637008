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

//! Raw categorical datasets: CSV ingestion and missing-value imputation.

use std::path::Path;

use crate::error::DataError;

/// Which CSV column holds the class label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelColumn {
    Index(usize),
    Name(String),
}

/// How to read a dataset file.
#[derive(Debug, Clone)]
pub struct CsvSchema {
    pub has_header: bool,
    pub label: LabelColumn,
    /// Cell content standing for "value unknown", usually `?`.
    pub missing_marker: String,
}

impl Default for CsvSchema {
    /// Headerless rows with the label in the last column and `?` markers —
    /// the layout of the categorical UCI files.
    fn default() -> Self {
        CsvSchema {
            has_header: false,
            label: LabelColumn::Index(usize::MAX),
            missing_marker: "?".into(),
        }
    }
}

/// A table of categorical attribute values plus one label per row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawDataset {
    rows: Vec<(Vec<String>, String)>,
    missing_marker: String,
}

impl RawDataset {
    /// Builds a dataset from pre-parsed rows; every row must carry the same
    /// number of attributes.
    pub fn new(
        rows: Vec<(Vec<String>, String)>,
        missing_marker: impl Into<String>,
    ) -> Result<Self, DataError> {
        if rows.is_empty() {
            return Err(DataError::EmptyDataset);
        }
        let width = rows[0].0.len();
        for (line, (attributes, _)) in rows.iter().enumerate() {
            if attributes.len() != width {
                return Err(DataError::MalformedRow {
                    line: line as u64 + 1,
                    detail: format!("expected {width} attributes, found {}", attributes.len()),
                });
            }
        }
        Ok(RawDataset { rows, missing_marker: missing_marker.into() })
    }

    pub fn rows(&self) -> &[(Vec<String>, String)] {
        &self.rows
    }

    pub fn attribute_count(&self) -> usize {
        self.rows[0].0.len()
    }

    pub fn missing_marker(&self) -> &str {
        &self.missing_marker
    }

    /// Number of distinct non-missing values observed per attribute.
    pub fn arities(&self) -> Vec<usize> {
        (0..self.attribute_count())
            .map(|column| {
                let mut seen: Vec<&str> = Vec::new();
                for (attributes, _) in &self.rows {
                    let value = attributes[column].as_str();
                    if value != self.missing_marker && !seen.contains(&value) {
                        seen.push(value);
                    }
                }
                seen.len()
            })
            .collect()
    }
}

fn csv_error(err: csv::Error) -> DataError {
    let line = err.position().map(|p| p.line()).unwrap_or(0);
    DataError::MalformedRow { line, detail: err.to_string() }
}

/// Reads a categorical CSV file into a [`RawDataset`].
///
/// The label column is removed from the attribute list; `LabelColumn::Name`
/// requires a header row. `LabelColumn::Index(usize::MAX)` is shorthand for
/// "last column". Cells are trimmed of surrounding whitespace.
pub fn load_csv(path: &Path, schema: &CsvSchema) -> Result<RawDataset, DataError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(schema.has_header)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(csv_error)?;

    let mut label_index: Option<usize> = match &schema.label {
        LabelColumn::Index(i) => Some(*i),
        LabelColumn::Name(name) => {
            if !schema.has_header {
                return Err(DataError::UnknownLabelColumn(name.clone()));
            }
            let headers = reader.headers().map_err(csv_error)?;
            match headers.iter().position(|h| h == name) {
                Some(i) => Some(i),
                None => return Err(DataError::UnknownLabelColumn(name.clone())),
            }
        }
    };

    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(csv_error)?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        let width = record.len();
        let index = match label_index {
            Some(usize::MAX) => width - 1,
            Some(i) if i < width => i,
            Some(i) => return Err(DataError::LabelIndexOutOfRange { index: i, columns: width }),
            None => unreachable!("label index resolved above"),
        };
        label_index = Some(index);
        if width < 2 {
            return Err(DataError::MalformedRow {
                line,
                detail: "a row needs at least one attribute and a label".into(),
            });
        }
        let mut attributes = Vec::with_capacity(width - 1);
        let mut label = String::new();
        for (column, value) in record.iter().enumerate() {
            if column == index {
                label = value.to_string();
            } else {
                attributes.push(value.to_string());
            }
        }
        rows.push((attributes, label));
    }
    RawDataset::new(rows, schema.missing_marker.clone())
}

/// Replaces every missing marker by the attribute's most frequent
/// non-missing value; frequency ties break to the value seen first.
pub fn impute_mode(data: &RawDataset) -> Result<RawDataset, DataError> {
    let marker = data.missing_marker().to_string();
    let mut modes: Vec<Option<String>> = Vec::with_capacity(data.attribute_count());
    for column in 0..data.attribute_count() {
        // counts in first-seen order, so max_by over a stable iteration
        // cannot reorder ties
        let mut counts: Vec<(&str, usize)> = Vec::new();
        for (attributes, _) in data.rows() {
            let value = attributes[column].as_str();
            if value == marker {
                continue;
            }
            match counts.iter_mut().find(|(v, _)| *v == value) {
                Some(entry) => entry.1 += 1,
                None => counts.push((value, 1)),
            }
        }
        let mut mode: Option<(&str, usize)> = None;
        for (value, count) in &counts {
            // strict > keeps the first-seen value on frequency ties
            if mode.is_none_or(|(_, best)| *count > best) {
                mode = Some((value, *count));
            }
        }
        match mode {
            None => return Err(DataError::AttributeFullyMissing { column }),
            Some((value, _)) => modes.push(Some(value.to_string())),
        }
    }

    let rows = data
        .rows()
        .iter()
        .map(|(attributes, label)| {
            let attributes = attributes
                .iter()
                .enumerate()
                .map(|(column, value)| {
                    if *value == marker {
                        modes[column].clone().expect("checked above")
                    } else {
                        value.clone()
                    }
                })
                .collect();
            (attributes, label.clone())
        })
        .collect();
    RawDataset::new(rows, marker)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_csv(content: &str) -> tempfile::NamedTempFile {
        let mut file = tempfile::NamedTempFile::new().unwrap();
        file.write_all(content.as_bytes()).unwrap();
        file
    }

    fn column(data: &RawDataset, index: usize) -> Vec<String> {
        data.rows().iter().map(|(a, _)| a[index].clone()).collect()
    }

    #[test]
    fn toy_csv_loads_every_row() {
        let file = write_csv("a,x,yes\nb,y,no\na,x,yes\n");
        let data = load_csv(file.path(), &CsvSchema::default()).unwrap();
        assert_eq!(data.rows().len(), 3);
        assert_eq!(data.attribute_count(), 2);
        assert_eq!(data.rows()[1], (vec!["b".into(), "y".into()], "no".into()));
    }

    #[test]
    fn missing_markers_survive_loading() {
        let file = write_csv("a,?,yes\n?,y,no\n");
        let data = load_csv(file.path(), &CsvSchema::default()).unwrap();
        assert_eq!(column(&data, 1), vec!["?", "y"]);
        assert_eq!(column(&data, 0), vec!["a", "?"]);
    }

    #[test]
    fn nine_attribute_game_layout_parses() {
        let row = "x,x,x,o,o,b,b,o,x,positive\n";
        let file = write_csv(&row.repeat(4));
        let data = load_csv(file.path(), &CsvSchema::default()).unwrap();
        assert_eq!(data.attribute_count(), 9);
        assert!(data.rows().iter().all(|(_, l)| l == "positive"));
    }

    #[test]
    fn header_names_resolve_the_label_column() {
        let file = write_csv("color,size,class\nred,small,a\nblue,big,b\n");
        let schema = CsvSchema {
            has_header: true,
            label: LabelColumn::Name("class".into()),
            missing_marker: "?".into(),
        };
        let data = load_csv(file.path(), &schema).unwrap();
        assert_eq!(data.rows()[0], (vec!["red".into(), "small".into()], "a".into()));

        let bad = CsvSchema { label: LabelColumn::Name("nope".into()), ..schema };
        assert!(matches!(
            load_csv(file.path(), &bad).unwrap_err(),
            DataError::UnknownLabelColumn(name) if name == "nope"
        ));
    }

    #[test]
    fn ragged_rows_report_their_line() {
        let file = write_csv("a,b,yes\na,yes\n");
        match load_csv(file.path(), &CsvSchema::default()).unwrap_err() {
            DataError::MalformedRow { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn forced_mode_fills_the_gap() {
        let file = write_csv("a,1,l\na,1,l\n?,1,l\nb,1,l\n");
        let data = impute_mode(&load_csv(file.path(), &CsvSchema::default()).unwrap()).unwrap();
        assert_eq!(column(&data, 0), vec!["a", "a", "a", "b"]);
    }

    #[test]
    fn imputing_complete_data_is_identity() {
        let file = write_csv("a,1,l\nb,2,l\n");
        let data = load_csv(file.path(), &CsvSchema::default()).unwrap();
        assert_eq!(impute_mode(&data).unwrap(), data);
    }

    #[test]
    fn mode_ties_go_to_the_first_seen_value() {
        let file = write_csv("b,1,l\na,1,l\n?,1,l\na,1,l\nb,1,l\n");
        let data = impute_mode(&load_csv(file.path(), &CsvSchema::default()).unwrap()).unwrap();
        // b and a both occur twice; b appeared first
        assert_eq!(column(&data, 0), vec!["b", "a", "b", "a", "b"]);
    }

    #[test]
    fn fully_missing_attribute_is_an_error() {
        let file = write_csv("?,1,l\n?,2,l\n");
        let err = impute_mode(&load_csv(file.path(), &CsvSchema::default()).unwrap()).unwrap_err();
        assert!(matches!(err, DataError::AttributeFullyMissing { column: 0 }));
    }

    #[test]
    fn arities_count_distinct_non_missing_values() {
        let file = write_csv("a,x,l\nb,x,l\n?,y,l\n");
        let data = load_csv(file.path(), &CsvSchema::default()).unwrap();
        assert_eq!(data.arities(), vec![2, 2]);
    }
}
