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

//! Uniform-weight Hamming KNN, the classical baseline.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use pqm_memory::{hamming, BitPattern, MemoryError};

use crate::error::ClassifierError;

/// Majority vote among the k nearest training patterns.
///
/// Neighbours are ordered by (distance, training index) so boundary ties are
/// resolved deterministically. Vote ties go to the label with the smaller
/// summed distance inside the neighbourhood, then to the smaller label.
pub fn knn_predict(
    train: &[(BitPattern, String)],
    input: &BitPattern,
    k: usize,
) -> Result<String, ClassifierError> {
    if train.is_empty() {
        return Err(ClassifierError::EmptyKnnSet);
    }
    if k < 1 || k > train.len() {
        return Err(ClassifierError::BadKRange { lo: k, hi: k, train_size: train.len() });
    }
    let mut scored: Vec<(usize, usize)> = train
        .iter()
        .enumerate()
        .map(|(index, (pattern, _))| Ok((hamming(input, pattern)?, index)))
        .collect::<Result<_, MemoryError>>()?;
    scored.sort_unstable();

    let mut votes: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for (distance, index) in &scored[..k] {
        let entry = votes.entry(train[*index].1.as_str()).or_insert((0, 0));
        entry.0 += 1;
        entry.1 += distance;
    }
    let mut winner: Option<(&str, usize, usize)> = None;
    for (label, (count, summed)) in votes {
        let better = match winner {
            None => true,
            Some((_, best_count, best_summed)) => {
                count > best_count || (count == best_count && summed < best_summed)
            }
        };
        if better {
            winner = Some((label, count, summed));
        }
    }
    Ok(winner.expect("k >= 1 yields at least one vote").0.to_string())
}

/// Sweeps k over `k_range` and returns the (k, accuracy) pair that scores
/// best on `test`, smallest k on ties — mirroring a protocol that selects k
/// on the evaluation split itself.
pub fn knn_baseline(
    train: &[(BitPattern, String)],
    test: &[(BitPattern, String)],
    k_range: RangeInclusive<usize>,
) -> Result<(usize, f64), ClassifierError> {
    if train.is_empty() || test.is_empty() {
        return Err(ClassifierError::EmptyKnnSet);
    }
    let (lo, hi) = (*k_range.start(), *k_range.end());
    if lo < 1 || hi > train.len() || lo > hi {
        return Err(ClassifierError::BadKRange { lo, hi, train_size: train.len() });
    }
    let mut best_k = lo;
    let mut best_accuracy = -1.0;
    for k in lo..=hi {
        let mut hits = 0usize;
        for (pattern, label) in test {
            if knn_predict(train, pattern, k)? == *label {
                hits += 1;
            }
        }
        let accuracy = hits as f64 / test.len() as f64;
        if accuracy > best_accuracy {
            best_accuracy = accuracy;
            best_k = k;
        }
    }
    Ok((best_k, best_accuracy))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labeled(items: &[(&str, &str)]) -> Vec<(BitPattern, String)> {
        items.iter().map(|(p, l)| (p.parse().unwrap(), l.to_string())).collect()
    }

    #[test]
    fn one_neighbour_recovers_an_exact_match() {
        let train = labeled(&[("0001", "x"), ("1110", "y"), ("0111", "z")]);
        assert_eq!(knn_predict(&train, &"1110".parse().unwrap(), 1).unwrap(), "y");
    }

    #[test]
    fn balanced_equidistant_vote_is_deterministic() {
        let train = labeled(&[("00", "a"), ("11", "b")]);
        // 01 is at distance 1 from both; counts and summed distances tie, so
        // the smaller label wins.
        assert_eq!(knn_predict(&train, &"01".parse().unwrap(), 2).unwrap(), "a");
    }

    #[test]
    fn closer_votes_outrank_equal_counts() {
        let train = labeled(&[("0000", "far"), ("1110", "far"), ("0011", "near"), ("0111", "near")]);
        // input 0111: near candidates at distance 0+1, far at 3+1.
        assert_eq!(knn_predict(&train, &"0111".parse().unwrap(), 4).unwrap(), "near");
    }

    #[test]
    fn leading_bit_toy_set_is_learned_perfectly() {
        let train = labeled(&[("00", "0"), ("01", "0"), ("10", "1"), ("11", "1")]);
        let (best_k, accuracy) = knn_baseline(&train, &train, 1..=1).unwrap();
        assert_eq!((best_k, accuracy), (1, 1.0));
    }

    #[test]
    fn k_sweep_prefers_the_smallest_winning_k() {
        let train = labeled(&[("000", "x"), ("001", "x"), ("110", "y"), ("111", "y")]);
        let (best_k, accuracy) = knn_baseline(&train, &train, 1..=4).unwrap();
        assert_eq!(best_k, 1);
        assert_eq!(accuracy, 1.0);
    }

    #[test]
    fn range_validation_matches_the_train_size() {
        let train = labeled(&[("01", "x")]);
        let test = labeled(&[("01", "x")]);
        assert_eq!(
            knn_baseline(&train, &test, 1..=2).unwrap_err(),
            ClassifierError::BadKRange { lo: 1, hi: 2, train_size: 1 }
        );
        assert_eq!(knn_baseline(&[], &test, 1..=1).unwrap_err(), ClassifierError::EmptyKnnSet);
    }
}
