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

//! Seeded k-fold splitting, stratified by label where possible.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::encode::EncodedDataset;
use crate::error::DataError;

/// One cross-validation fold, as index lists into the dataset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldSpec {
    pub train: Vec<usize>,
    pub test: Vec<usize>,
}

/// The folds plus how they were drawn.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KfoldPlan {
    pub folds: Vec<FoldSpec>,
    /// False when some class had fewer than k samples and the split fell
    /// back to plain shuffling; callers should surface that as a warning.
    pub stratified: bool,
}

/// Splits the dataset into k folds, shuffling with the given seed.
///
/// When every class holds at least k samples the shuffle happens per class
/// and samples are dealt round-robin, so each fold sees the dataset's label
/// mix; otherwise the whole index range is shuffled and dealt directly.
/// The same seed always produces the same folds.
pub fn kfold_split(data: &EncodedDataset, k: usize, seed: u64) -> Result<KfoldPlan, DataError> {
    if k < 2 {
        return Err(DataError::BadFoldCount(k));
    }
    if k > data.len() {
        return Err(DataError::TooManyFolds { k, samples: data.len() });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut by_label: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    for (index, (_, label)) in data.patterns().iter().enumerate() {
        by_label.entry(label).or_default().push(index);
    }
    let stratified = by_label.values().all(|members| members.len() >= k);

    let mut test_sets: Vec<Vec<usize>> = vec![Vec::new(); k];
    if stratified {
        let mut cursor = 0usize;
        for members in by_label.values() {
            let mut members = members.clone();
            members.shuffle(&mut rng);
            for index in members {
                test_sets[cursor % k].push(index);
                cursor += 1;
            }
        }
    } else {
        let mut all: Vec<usize> = (0..data.len()).collect();
        all.shuffle(&mut rng);
        for (position, index) in all.into_iter().enumerate() {
            test_sets[position % k].push(index);
        }
    }

    let folds = test_sets
        .into_iter()
        .map(|mut test| {
            test.sort_unstable();
            let train = (0..data.len()).filter(|i| !test.contains(i)).collect();
            FoldSpec { train, test }
        })
        .collect();
    Ok(KfoldPlan { folds, stratified })
}
