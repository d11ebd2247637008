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

//! The scale-selection objective f(t) and its numerical maximizer.
//!
//! For a probe at Hamming distance `d_near` from the wanted class and
//! `d_far` from the other, f(t) is the retrieval-probability margin
//! cos²(d_near·π/(2nt)) − cos²(d_far·π/(2nt)); a scale maximizing it gives
//! the classifier its widest decision margin on that configuration.

use std::f64::consts::PI;

use pqm_memory::PqmParameter;

use crate::error::ClassifierError;

const INV_PHI: f64 = 0.618_033_988_749_894_8;

fn check_distances(d_near: usize, d_far: usize, n: usize) -> Result<(), ClassifierError> {
    if n == 0 {
        return Err(ClassifierError::ZeroPatternLength);
    }
    if d_far > n {
        return Err(ClassifierError::DistanceOutOfRange { d: d_far, n });
    }
    if d_near > d_far {
        return Err(ClassifierError::BadDistanceOrder { d_near, d_far });
    }
    Ok(())
}

fn margin(t: f64, d_near: usize, d_far: usize, n: usize) -> f64 {
    let x = PI / (2.0 * n as f64 * t);
    (x * d_near as f64).cos().powi(2) - (x * d_far as f64).cos().powi(2)
}

/// Retrieval-probability margin between a near and a far pattern at scale t.
pub fn objective_f(
    t: PqmParameter,
    d_near: usize,
    d_far: usize,
    n: usize,
) -> Result<f64, ClassifierError> {
    check_distances(d_near, d_far, n)?;
    Ok(margin(t.value(), d_near, d_far, n))
}

/// Finds a scale maximizing f over (0, 1].
///
/// Evaluates f on the uniform grid {i/resolution : i = 1..resolution}, then
/// refines around the best grid point by golden-section search on the
/// bracketing interval. Whichever of the refined point and the raw grid
/// optimum scores higher is returned, so the result is never worse than the
/// grid search alone.
pub fn maximize_f(
    d_near: usize,
    d_far: usize,
    n: usize,
    resolution: usize,
) -> Result<PqmParameter, ClassifierError> {
    check_distances(d_near, d_far, n)?;
    if resolution < 1_000 {
        return Err(ClassifierError::BadResolution(resolution));
    }

    let step = 1.0 / resolution as f64;
    let mut best_i = 1;
    let mut best_f = f64::NEG_INFINITY;
    for i in 1..=resolution {
        let value = margin(i as f64 * step, d_near, d_far, n);
        if value > best_f {
            best_f = value;
            best_i = i;
        }
    }

    // f oscillates fast near 0, so refine strictly inside the neighbouring
    // grid cells rather than trusting any wider bracket.
    let mut a = best_i.saturating_sub(1).max(1) as f64 * step;
    let mut b = (best_i + 1).min(resolution) as f64 * step;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = margin(c, d_near, d_far, n);
    let mut fd = margin(d, d_near, d_far, n);
    while b - a > 1e-13 {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = margin(c, d_near, d_far, n);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = margin(d, d_near, d_far, n);
        }
    }
    let refined = 0.5 * (a + b);

    let best_t = if margin(refined, d_near, d_far, n) > best_f {
        refined
    } else {
        best_i as f64 * step
    };
    Ok(PqmParameter::new(best_t).expect("maximizer stays within (0, 1]"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(t: f64, d_near: usize, d_far: usize, n: usize) -> f64 {
        objective_f(PqmParameter::new(t).unwrap(), d_near, d_far, n).unwrap()
    }

    #[test]
    fn unit_scale_ten_bit_margin_is_pinned() {
        // cos²(π/20) − cos²(3π/20)
        assert!((f(1.0, 1, 3, 10) - 0.18163563200134014).abs() < 1e-15);
    }

    #[test]
    fn equal_distances_produce_zero_margin_at_any_scale() {
        for t in [0.017, 0.31, 1.0] {
            assert_eq!(f(t, 2, 2, 10), 0.0);
        }
    }

    #[test]
    fn distance_preconditions_are_enforced() {
        let t = PqmParameter::ONE;
        assert_eq!(
            objective_f(t, 3, 1, 10).unwrap_err(),
            ClassifierError::BadDistanceOrder { d_near: 3, d_far: 1 }
        );
        assert_eq!(
            objective_f(t, 1, 11, 10).unwrap_err(),
            ClassifierError::DistanceOutOfRange { d: 11, n: 10 }
        );
        assert_eq!(objective_f(t, 0, 0, 0).unwrap_err(), ClassifierError::ZeroPatternLength);
        assert_eq!(maximize_f(1, 3, 10, 999).unwrap_err(), ClassifierError::BadResolution(999));
    }

    #[test]
    fn maximizer_attains_the_analytic_supremum() {
        // With u = cos²(d_near·x), the margin for (d_near, d_far) = (1, 3)
        // factors as −8u(2u−1)(u−1), whose maximum over u ∈ [0, 1] is
        // 4√3/9 ≈ 0.76980 at u = (3+√3)/6. No scale can beat that bound.
        let supremum = 4.0 * 3.0f64.sqrt() / 9.0;
        let t = maximize_f(1, 3, 10, 100_000).unwrap();
        let best = f(t.value(), 1, 3, 10);
        assert!(best <= supremum + 1e-12, "{best} exceeds the supremum");
        assert!(best >= supremum - 1e-9, "{best} misses the supremum");
    }

    #[test]
    fn refinement_never_loses_to_the_raw_grid() {
        for (d_near, d_far, n) in [(1, 3, 10), (1, 2, 4), (2, 5, 12), (0, 4, 9)] {
            let resolution = 2_000;
            let t = maximize_f(d_near, d_far, n, resolution).unwrap();
            let best = f(t.value(), d_near, d_far, n);
            for i in 1..=resolution {
                let grid_value = f(i as f64 / resolution as f64, d_near, d_far, n);
                assert!(best >= grid_value - 1e-12, "grid point {i} beats the maximizer");
            }
        }
    }

    #[test]
    fn zero_near_distance_reaches_a_full_margin() {
        // The near term is constantly 1, and t = 3/10 zeroes the far term.
        let t = maximize_f(0, 3, 10, 1_000).unwrap();
        assert!(f(t.value(), 0, 3, 10) >= 1.0 - 1e-12);
    }
}
