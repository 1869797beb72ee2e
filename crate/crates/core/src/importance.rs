// Copyright 2026 The diagsynth Authors
// SPDX-License-Identifier: Apache-2.0

//! Node weights for the hypercube search.
//!
//! `|α_s|` for `s ≥ 1` is min-max normalized to `[0, 1]`, mask 0 is pinned to
//! 1, and the result is pushed through a logistic centred on the `K`-th largest
//! normalized value, `K = min(C + 2, 2^k)`. With distinct magnitudes exactly
//! `K − 1` masks (counting mask 0) end strictly above 0.5, which is the number
//! of vertices a budget of `C` CNOTs can reach.

use log::warn;

use crate::error::{Result, SynthError};
use crate::pathsearch::PathState;
use crate::scalar::{logistic, Real};
use crate::spectral::CoeffVector;

/// Default logistic steepness.
pub const DEFAULT_GAMMA: f64 = 50.0;

#[derive(Debug, Clone, PartialEq)]
pub struct ImportanceVector<T> {
    values: Vec<T>,
    /// K-th largest normalized magnitude, before the logistic.
    pub threshold_raw: T,
    pub gamma: T,
    /// Set when every `|α_s|`, `s ≥ 1`, was equal and normalization fell back to 0.5.
    pub degenerate: bool,
}

impl<T: Real> ImportanceVector<T> {
    /// Wraps precomputed weights. Intended for tests and experiments; the
    /// search only assumes weights lie in `[0, 1]`.
    pub fn from_values(values: Vec<T>, gamma: T) -> Result<Self> {
        if values.len() < 2 || !values.len().is_power_of_two() {
            return Err(SynthError::NotPowerOfTwo(values.len()));
        }
        if let Some(i) = values
            .iter()
            .position(|v| !(*v >= T::zero() && *v <= T::one()))
        {
            return Err(SynthError::InvalidArgument(format!(
                "importance at {i} outside [0, 1]"
            )));
        }
        Ok(Self {
            values,
            threshold_raw: T::half(),
            gamma,
            degenerate: false,
        })
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn qubits(&self) -> usize {
        self.values.len().trailing_zeros() as usize
    }
}

impl<T> std::ops::Index<usize> for ImportanceVector<T> {
    type Output = T;

    fn index(&self, index: usize) -> &T {
        &self.values[index]
    }
}

/// Min-max normalized `|α_s|` with mask 0 pinned to 1, before the logistic.
/// The flag reports the degenerate all-equal case.
pub fn normalized_magnitudes<T: Real>(alpha: &CoeffVector<T>) -> (Vec<T>, bool) {
    let raw = alpha.values();
    let mut out: Vec<T> = raw.iter().map(|a| a.abs()).collect();
    let (lo, hi) = out[1..]
        .iter()
        .fold((T::infinity(), T::neg_infinity()), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    let span = hi - lo;
    let degenerate = !(span > T::zero());
    if degenerate {
        out[1..].iter_mut().for_each(|v| *v = T::half());
    } else {
        out[1..].iter_mut().for_each(|v| *v = (*v - lo) / span);
    }
    out[0] = T::one();
    (out, degenerate)
}

/// K-th largest element (1-based) of `values`, duplicates counted.
pub(crate) fn kth_largest<T: Real>(values: &[T], k: usize) -> T {
    debug_assert!(k >= 1 && k <= values.len());
    let mut scratch = values.to_vec();
    let (_, kth, _) = scratch.select_nth_unstable_by(k - 1, |a, b| {
        b.partial_cmp(a).expect("importance values are finite")
    });
    *kth
}

pub fn phase_importance<T: Real>(
    alpha: &CoeffVector<T>,
    cnot_budget: usize,
    gamma: T,
) -> Result<ImportanceVector<T>> {
    if !(gamma > T::zero()) {
        return Err(SynthError::InvalidArgument(format!(
            "gamma must be positive, got {gamma}"
        )));
    }
    let (mut values, degenerate) = normalized_magnitudes(alpha);
    if degenerate {
        warn!("all non-constant coefficients have equal magnitude; importance set to 0.5");
    }
    let rank = cnot_budget.saturating_add(2).min(values.len());
    let threshold = kth_largest(&values, rank);
    for v in values[1..].iter_mut() {
        let diff = *v - threshold;
        // 0 * inf is NaN; the logistic limit at the threshold is 1/2
        *v = if diff == T::zero() {
            T::half()
        } else {
            logistic(diff * gamma)
        };
    }
    Ok(ImportanceVector {
        values,
        threshold_raw: threshold,
        gamma,
        degenerate,
    })
}

/// Unvisited and weighted above `0.5 − epsilon`.
pub fn is_active<T: Real>(
    imp: &ImportanceVector<T>,
    node: usize,
    path: &PathState,
    epsilon: T,
) -> bool {
    !path.contains(node) && imp.values[node] > T::half() - epsilon
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::reference_alpha;

    #[test]
    fn reference_normalization_extremes() {
        let (norm, degenerate) = normalized_magnitudes(&reference_alpha());
        assert!(!degenerate);
        assert_eq!(norm[0], 1.0);
        assert_eq!(norm[13], 1.0);
        assert_eq!(norm[21], 0.0);
        let expected = (0.5961 - 0.0175) / (0.9482 - 0.0175);
        assert!((norm[2] - expected).abs() < 1e-12);
        assert!((norm[2] - 0.6217).abs() < 5e-5);
    }

    #[test]
    fn infinite_gamma_is_a_step() {
        let alpha = reference_alpha();
        let imp = phase_importance(&alpha, 10, f64::INFINITY).unwrap();
        let (norm, _) = normalized_magnitudes(&alpha);
        for s in 1..32 {
            let want = if norm[s] > imp.threshold_raw {
                1.0
            } else if norm[s] < imp.threshold_raw {
                0.0
            } else {
                0.5
            };
            assert_eq!(imp[s], want, "mask {s}");
        }
    }

    #[test]
    fn count_above_half() {
        let alpha = reference_alpha();
        for budget in 0..32 {
            let imp = phase_importance(&alpha, budget, 50.0).unwrap();
            let k = (budget + 2).min(32);
            let above = imp.values().iter().filter(|&&v| v > 0.5).count();
            assert_eq!(above, k - 1, "budget {budget}");
            assert_eq!(imp[0], 1.0);
        }
    }

    #[test]
    fn degenerate_magnitudes() {
        let alpha = CoeffVector::new(vec![1.0, 0.2, -0.2, 0.2]).unwrap();
        let imp = phase_importance(&alpha, 0, 50.0).unwrap();
        assert!(imp.degenerate);
        // K = 2, normalized array is [1, .5, .5, .5] so the threshold is 0.5
        assert_eq!(imp.threshold_raw, 0.5);
        assert_eq!(&imp.values()[1..], &[0.5, 0.5, 0.5]);
    }

    #[test]
    fn rejects_bad_gamma() {
        let alpha = reference_alpha();
        assert!(phase_importance(&alpha, 3, 0.0).is_err());
        assert!(phase_importance(&alpha, 3, -1.0).is_err());
        assert!(phase_importance(&alpha, 3, f64::NAN).is_err());
    }

    #[test]
    fn budget_past_the_end_clamps() {
        let alpha = reference_alpha();
        let imp = phase_importance(&alpha, 1000, 50.0).unwrap();
        // threshold is the smallest normalized value (mask 21 at 0.0)
        assert_eq!(imp.threshold_raw, 0.0);
        assert_eq!(imp[21], 0.5);
    }

    #[test]
    fn activity_boundary() {
        let imp = ImportanceVector::from_values(vec![1.0, 0.5, 0.9, 0.1], 50.0).unwrap();
        let path = PathState::start(2, 4);
        assert!(!is_active(&imp, 1, &path, 0.0));
        assert!(is_active(&imp, 1, &path, 0.01));
        assert!(is_active(&imp, 2, &path, 0.0));
        assert!(!is_active(&imp, 0, &path, 0.5));
    }
}
