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

//! Two-sided Wilcoxon signed-rank test for paired accuracy comparisons.
//!
//! Zero differences are dropped; tied magnitudes receive averaged ranks.
//! Up to 25 informative pairs the p-value comes from the exact null
//! distribution (every sign assignment equally likely, conditioned on the
//! observed tie pattern); beyond that, from the normal approximation with
//! continuity correction and tie-adjusted variance.

use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::DataError;

/// Largest sample size handled by exact enumeration.
const EXACT_LIMIT: usize = 25;

/// Result of the signed-rank test.
#[derive(Debug, Clone, PartialEq)]
pub struct WilcoxonOutcome {
    /// min(W+, W−); may be half-integral under ties.
    pub w: f64,
    pub p_value: f64,
    /// p_value < alpha. All-zero differences never reject.
    pub reject: bool,
    /// Pairs remaining after zero differences are dropped.
    pub n_used: usize,
    /// Whether the exact distribution was used (vs. normal approximation).
    pub exact: bool,
}

/// Doubled ranks of |d|, averaged over ties. Doubling keeps them integral:
/// a tie group covering 1-based ranks lo..=hi gets the rank (lo+hi)/2.
fn doubled_ranks(magnitudes: &[f64]) -> (Vec<u64>, Vec<usize>) {
    let n = magnitudes.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| magnitudes[i].partial_cmp(&magnitudes[j]).unwrap());

    let mut doubled = vec![0u64; n];
    let mut tie_sizes = Vec::new();
    let mut start = 0;
    while start < n {
        let mut end = start;
        while end + 1 < n && magnitudes[order[end + 1]] == magnitudes[order[start]] {
            end += 1;
        }
        // 1-based ranks start+1 ..= end+1 average to ((start+1)+(end+1))/2
        let rank2 = (start + end + 2) as u64;
        for &index in &order[start..=end] {
            doubled[index] = rank2;
        }
        tie_sizes.push(end - start + 1);
        start = end + 1;
    }
    (doubled, tie_sizes)
}

/// Null distribution of the doubled W+ as sign-assignment counts: entry s
/// holds how many of the 2^n assignments reach a doubled rank sum of s.
fn null_counts(doubled: &[u64]) -> Vec<u64> {
    let total: u64 = doubled.iter().sum();
    let mut counts = vec![0u64; total as usize + 1];
    counts[0] = 1;
    for &rank2 in doubled {
        for s in (0..=(total - rank2) as usize).rev() {
            if counts[s] > 0 {
                counts[s + rank2 as usize] += counts[s];
            }
        }
    }
    counts
}

/// Paired two-sided Wilcoxon signed-rank test of `a` against `b`.
///
/// Needs at least 5 informative pairs; if every difference is zero the test
/// makes no decision and reports "not rejected" with p = 1.
pub fn wilcoxon_signed_rank(
    a: &[f64],
    b: &[f64],
    alpha: f64,
) -> Result<WilcoxonOutcome, DataError> {
    if a.len() != b.len() {
        return Err(DataError::UnpairedSamples { a: a.len(), b: b.len() });
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(DataError::BadAlpha(alpha));
    }

    let diffs: Vec<f64> = a.iter().zip(b).map(|(x, y)| x - y).filter(|d| *d != 0.0).collect();
    let n = diffs.len();
    if n == 0 {
        return Ok(WilcoxonOutcome { w: 0.0, p_value: 1.0, reject: false, n_used: 0, exact: true });
    }
    if n < 5 {
        return Err(DataError::TooFewPairs(n));
    }

    let magnitudes: Vec<f64> = diffs.iter().map(|d| d.abs()).collect();
    let (doubled, tie_sizes) = doubled_ranks(&magnitudes);
    let w_plus_2: u64 =
        doubled.iter().zip(&diffs).filter(|(_, d)| **d > 0.0).map(|(r, _)| *r).sum();
    let total_2: u64 = doubled.iter().sum();
    let w_minus_2 = total_2 - w_plus_2;
    let w = w_plus_2.min(w_minus_2) as f64 / 2.0;

    let (p_value, exact) = if n <= EXACT_LIMIT {
        let counts = null_counts(&doubled);
        let assignments = 2f64.powi(n as i32);
        let below: u64 = counts[..=w_plus_2 as usize].iter().sum();
        let above: u64 = counts[w_plus_2 as usize..].iter().sum();
        let tail = below.min(above) as f64 / assignments;
        ((2.0 * tail).min(1.0), true)
    } else {
        let nf = n as f64;
        let mean = nf * (nf + 1.0) / 4.0;
        let ties: f64 = tie_sizes.iter().map(|&t| (t * t * t - t) as f64).sum();
        let variance = nf * (nf + 1.0) * (2.0 * nf + 1.0) / 24.0 - ties / 48.0;
        let z = (w - mean + 0.5) / variance.sqrt();
        let normal = Normal::new(0.0, 1.0).expect("unit normal");
        ((2.0 * normal.cdf(z)).min(1.0), false)
    };

    Ok(WilcoxonOutcome { w, p_value, reject: p_value < alpha, n_used: n, exact })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_samples_never_reject() {
        let a = [0.8, 0.9, 0.7, 0.6, 0.5, 0.4];
        let out = wilcoxon_signed_rank(&a, &a, 0.05).unwrap();
        assert_eq!((out.n_used, out.reject), (0, false));
        assert_eq!(out.p_value, 1.0);
    }

    #[test]
    fn constant_shift_of_eight_pairs_rejects() {
        let b = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8];
        let a: Vec<f64> = b.iter().map(|v| v + 0.05).collect();
        let out = wilcoxon_signed_rank(&a, &b, 0.05).unwrap();
        // all 8 ranks positive: the only assignments at least as extreme
        // are the two single-sign ones, so p = 2/2^8
        assert_eq!(out.p_value, 2.0 / 256.0);
        assert_eq!(out.w, 0.0);
        assert!(out.reject && out.exact);
    }

    #[test]
    fn alternating_tiny_differences_do_not_reject() {
        let b = [0.5; 6];
        let a = [0.501, 0.499, 0.501, 0.499, 0.501, 0.499];
        let out = wilcoxon_signed_rank(&a, &b, 0.05).unwrap();
        assert!(!out.reject, "p = {}", out.p_value);
        assert_eq!(out.w, 10.5);
    }

    #[test]
    fn large_samples_use_the_normal_approximation() {
        let b: Vec<f64> = (0..30).map(|i| 0.4 + 0.01 * i as f64).collect();
        let a: Vec<f64> = b.iter().map(|v| v + 0.02).collect();
        let out = wilcoxon_signed_rank(&a, &b, 0.05).unwrap();
        assert!(!out.exact);
        assert!(out.reject);
        assert!(out.p_value < 1e-4);
    }

    #[test]
    fn mixed_signs_balance_out() {
        let b = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6];
        let a = [0.2, 0.1, 0.4, 0.3, 0.7, 0.4];
        let out = wilcoxon_signed_rank(&a, &b, 0.05).unwrap();
        assert!(out.p_value > 0.5);
        assert!(!out.reject);
    }

    #[test]
    fn input_validation_covers_the_edge_cases() {
        let five = [1.0, 2.0, 3.0, 4.0, 5.0];
        assert!(matches!(
            wilcoxon_signed_rank(&five, &five[..4], 0.05).unwrap_err(),
            DataError::UnpairedSamples { a: 5, b: 4 }
        ));
        assert!(matches!(
            wilcoxon_signed_rank(&five, &five, 0.0).unwrap_err(),
            DataError::BadAlpha(_)
        ));
        let b = [1.0, 2.0, 3.0, 4.0, 5.1];
        assert!(matches!(
            wilcoxon_signed_rank(&five, &b, 0.05).unwrap_err(),
            DataError::TooFewPairs(1)
        ));
    }
}
