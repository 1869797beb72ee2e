// Copyright 2026 The diagsynth Authors
// SPDX-License-Identifier: Apache-2.0

use diagsynth::fixtures::{reference_alpha, SINGLE_DISCARD};
use diagsynth::oracle::discard_error;
use diagsynth::spectral::{coeff_error, error, forward_wht, inverse_wht, CoeffVector, PhaseVector};
use proptest::prelude::*;

fn phases(max_qubits: usize) -> impl Strategy<Value = Vec<f64>> {
    (1..=max_qubits).prop_flat_map(|k| prop::collection::vec(-10.0..10.0f64, 1 << k))
}

proptest! {
    #[test]
    fn round_trip(values in phases(10)) {
        let lambda = PhaseVector::new(values.clone()).unwrap();
        let back = inverse_wht(&forward_wht(&lambda));
        let scale = values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        for (a, b) in values.iter().zip(back.values()) {
            prop_assert!((a - b).abs() <= 1e-12 * scale);
        }
    }

    #[test]
    fn parseval(values in phases(10)) {
        let alpha = CoeffVector::new(values).unwrap();
        let lambda = inverse_wht(&alpha);
        let lhs = lambda.values().iter().map(|v| v * v).sum::<f64>() / lambda.len() as f64;
        let rhs = alpha.values().iter().map(|v| v * v).sum::<f64>();
        prop_assert!((lhs - rhs).abs() <= 1e-10 * rhs.max(1.0));
    }

    #[test]
    fn linear(pair in (1..=8usize).prop_flat_map(|k| (
        prop::collection::vec(-5.0..5.0f64, 1 << k),
        prop::collection::vec(-5.0..5.0f64, 1 << k),
    )), a in -3.0..3.0f64, b in -3.0..3.0f64) {
        let (x, y) = pair;
        let mix: Vec<f64> = x.iter().zip(&y).map(|(p, q)| a * p + b * q).collect();
        let fx = forward_wht(&PhaseVector::new(x).unwrap());
        let fy = forward_wht(&PhaseVector::new(y).unwrap());
        let fm = forward_wht(&PhaseVector::new(mix).unwrap());
        for s in 0..fm.len() {
            prop_assert!((fm[s] - (a * fx[s] + b * fy[s])).abs() < 1e-12);
        }
    }

    #[test]
    fn global_shift_invariance(values in phases(8), other_seed in any::<u64>(), c in -4.0..4.0f64) {
        let n = values.len();
        let other: Vec<f64> = (0..n).map(|i| ((i as u64 ^ other_seed) % 97) as f64 * 0.07).collect();
        let a = PhaseVector::new(values.clone()).unwrap();
        let b = PhaseVector::new(other.clone()).unwrap();
        let a2 = PhaseVector::new(values.iter().map(|v| v + c).collect()).unwrap();
        let b2 = PhaseVector::new(other.iter().map(|v| v + c).collect()).unwrap();
        let d1 = error(&a, &b).unwrap();
        let d2 = error(&a2, &b2).unwrap();
        prop_assert!((d1 - d2).abs() < 1e-12);
        prop_assert!((0.0..=1.0).contains(&d1));
    }

    #[test]
    fn single_discard_law(values in phases(8), pick in any::<prop::sample::Index>()) {
        let alpha = CoeffVector::new(values).unwrap();
        let s = pick.index(alpha.len());
        let err = coeff_error(&alpha, &alpha.with_zeroed(&[s])).unwrap();
        prop_assert!((err - (alpha[s] / 2.0).sin().abs()).abs() < 1e-12);
    }

    #[test]
    fn small_angle_superposition(
        values in prop::collection::vec(-0.2..0.2f64, 32),
        picks in prop::collection::btree_set(1usize..32, 1..6),
    ) {
        let alpha = CoeffVector::new(values).unwrap();
        let set: Vec<usize> = picks.into_iter().collect();
        let l1: f64 = set.iter().map(|&s| alpha[s].abs()).sum();
        prop_assume!(l1 <= 0.5);
        let exact = discard_error(&alpha, &set);
        let approx = 0.5 * set.iter().map(|&s| alpha[s] * alpha[s]).sum::<f64>().sqrt();
        prop_assert!((exact - approx).abs() <= 0.002, "{exact} vs {approx}");
    }
}

#[test]
fn reference_round_trip_recovers_coefficients() {
    let alpha = reference_alpha();
    let again = forward_wht(&inverse_wht(&alpha));
    for s in 0..32 {
        assert!((again[s] - alpha[s]).abs() < 1e-12);
    }
}

#[test]
fn single_discard_law_on_reference_rows() {
    let alpha = reference_alpha();
    for &(s, a, expected) in SINGLE_DISCARD.iter() {
        let err = coeff_error(&alpha, &alpha.with_zeroed(&[s])).unwrap();
        assert!((err - (a / 2.0).sin().abs()).abs() < 1e-12);
        assert!((err - expected).abs() <= 5e-4, "mask {s}");
    }
    let e21 = coeff_error(&alpha, &alpha.with_zeroed(&[21])).unwrap();
    assert!((e21 - 0.0087).abs() < 5e-5);
}
