// Copyright 2026 The diagsynth Authors
// SPDX-License-Identifier: Apache-2.0

//! Reference data for a 5-qubit instance: the Walsh coefficients, the error
//! caused by dropping each coefficient alone, and the twenty cheapest ways of
//! dropping four of them. Values carry four decimals.

use crate::spectral::CoeffVector;

/// `(mask, α, error after dropping α)` for all 32 masks.
pub const SINGLE_DISCARD: [(usize, f64, f64); 32] = [
    (21, 0.0175, 0.0087),
    (8, -0.0296, 0.0148),
    (17, 0.0409, 0.0205),
    (25, -0.0478, 0.0239),
    (5, 0.0555, 0.0277),
    (14, -0.0628, 0.0314),
    (30, 0.0752, 0.0376),
    (10, 0.0958, 0.0479),
    (28, -0.1144, 0.0572),
    (19, 0.1174, 0.0587),
    (24, -0.1365, 0.0682),
    (23, -0.1376, 0.0688),
    (18, 0.1487, 0.0743),
    (9, -0.1648, 0.0823),
    (12, 0.1719, 0.0859),
    (31, -0.2298, 0.1147),
    (22, 0.2431, 0.1213),
    (26, 0.2774, 0.1383),
    (15, -0.3147, 0.1567),
    (1, 0.3161, 0.1574),
    (11, -0.3258, 0.1622),
    (20, -0.3464, 0.1723),
    (4, 0.3480, 0.1731),
    (6, 0.3844, 0.1910),
    (7, -0.3860, 0.1918),
    (29, -0.3891, 0.1933),
    (27, 0.4631, 0.2295),
    (3, -0.4804, 0.2379),
    (16, 0.5047, 0.2497),
    (2, -0.5961, 0.2937),
    (13, -0.9482, 0.4565),
    (0, 2.7625, 0.9821),
];

/// `(error, dropped masks)`, ascending by error.
pub const FOUR_DISCARD: [(f64, [usize; 4]); 20] = [
    (0.0358, [8, 17, 21, 25]),
    (0.0385, [5, 8, 17, 21]),
    (0.0404, [5, 8, 21, 25]),
    (0.0412, [8, 14, 17, 21]),
    (0.0428, [5, 17, 21, 25]),
    (0.0430, [8, 14, 21, 25]),
    (0.0445, [5, 8, 17, 25]),
    (0.0453, [5, 8, 14, 21]),
    (0.0453, [14, 17, 21, 25]),
    (0.0461, [8, 17, 21, 30]),
    (0.0468, [8, 14, 17, 25]),
    (0.0474, [5, 14, 17, 21]),
    (0.0477, [8, 21, 25, 30]),
    (0.0489, [5, 8, 14, 17]),
    (0.0490, [5, 14, 21, 25]),
    (0.0498, [5, 8, 21, 30]),
    (0.0498, [17, 21, 25, 30]),
    (0.0504, [5, 8, 14, 25]),
    (0.0512, [8, 17, 25, 30]),
    (0.0517, [5, 17, 21, 30]),
];

/// The 32 coefficients indexed by mask.
pub fn reference_alpha_values() -> [f64; 32] {
    let mut out = [0.0; 32];
    for &(s, a, _) in SINGLE_DISCARD.iter() {
        out[s] = a;
    }
    out
}

pub fn reference_alpha() -> CoeffVector<f64> {
    CoeffVector::new(reference_alpha_values().to_vec()).expect("32 finite values")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_mask_appears_once() {
        let mut seen = [false; 32];
        for &(s, _, _) in SINGLE_DISCARD.iter() {
            assert!(!seen[s], "duplicate mask {s}");
            seen[s] = true;
        }
        assert!(seen.iter().all(|&b| b));
    }
}
