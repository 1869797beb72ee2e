// Copyright 2026 The diagsynth Authors
// SPDX-License-Identifier: Apache-2.0

use diagsynth::circuit::{synthesized_phases, Gate};
use diagsynth::oracle::{parse_qasm, simulate_diagonal};
use diagsynth::pathsearch::PathState;
use diagsynth::sampling::{random_phases, InstanceKey};
use diagsynth::{
    emit_circuit, forward_wht, inverse_wht, path_search, to_qasm, Circuit, Coeffs, Phases,
    SearchConfig,
};
use proptest::prelude::*;

fn wrap(angle: f64) -> f64 {
    let t = angle.rem_euclid(std::f64::consts::TAU);
    t.min(std::f64::consts::TAU - t)
}

fn assert_matches_synthesized(path: &PathState, alpha: &Coeffs, tol: f64) {
    let circuit = emit_circuit(path, alpha, true).unwrap();
    let simulated = simulate_diagonal(&circuit).unwrap();
    let expected = synthesized_phases(path, alpha).unwrap();
    for x in 0..expected.len() {
        let diff = simulated[x] + alpha[0] - expected[x];
        assert!(diff.abs() < tol, "x={x}: {diff}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn emitted_circuit_realizes_kept_coefficients(
        k in 1usize..=6,
        seed in any::<u64>(),
        frac in 0.0..1.5f64,
    ) {
        let size = 1usize << k;
        let cnots = (size as f64 * frac) as usize;
        let lambda: Phases = random_phases(&InstanceKey::new(seed, k, 0.0, 0)).unwrap();
        let alpha = forward_wht(&lambda);
        let path = path_search(&lambda, &SearchConfig::new(cnots)).unwrap();
        assert_matches_synthesized(&path, &alpha, 1e-9);

        let circuit = emit_circuit(&path, &alpha, true).unwrap();
        let last = *path.nodes().last().unwrap();
        prop_assert_eq!(circuit.cnot_emitted, path.len() - 1 + last.count_ones() as usize);
        prop_assert_eq!(circuit.rz_count, path.distinct_count() - 1);
        let has_x = circuit.gates().iter().any(|g| matches!(g, Gate::X { .. }));
        prop_assert!(!has_x);

        let text = to_qasm(&circuit);
        let parsed: Circuit = parse_qasm(&text).unwrap();
        prop_assert_eq!(parsed.gates(), circuit.gates());
        prop_assert_eq!(to_qasm(&parsed), text);
    }
}

#[test]
fn single_qubit_phases() {
    let path = PathState::from_nodes(1, 2, &[0, 1]).unwrap();
    let alpha = Coeffs::new(vec![0.0, 0.4]).unwrap();
    let c = emit_circuit(&path, &alpha, true).unwrap();
    let p = simulate_diagonal(&c).unwrap();
    assert!((p[0] - 0.4).abs() < 1e-15);
    assert!((p[1] + 0.4).abs() < 1e-15);
    let lambda = inverse_wht(&alpha);
    assert_eq!(lambda.values(), p.values());
}

#[test]
fn three_qubit_walk() {
    let path = PathState::from_nodes(3, 3, &[0b000, 0b001, 0b011]).unwrap();
    let alpha = Coeffs::new(vec![0.3, 0.2, -0.5, 0.7, 0.1, 0.9, -0.4, 0.6]).unwrap();
    assert_matches_synthesized(&path, &alpha, 1e-12);
}

#[test]
fn zero_coefficients_give_identity() {
    let path = PathState::from_nodes(3, 6, &[0, 1, 3, 7, 6, 4]).unwrap();
    let alpha = Coeffs::zeros(3).unwrap();
    let c = emit_circuit(&path, &alpha, true).unwrap();
    assert!(simulate_diagonal(&c)
        .unwrap()
        .values()
        .iter()
        .all(|&v| v.abs() < 1e-15));
}

#[test]
fn without_uncompute_the_ancilla_stays_dirty() {
    let path = PathState::from_nodes(2, 3, &[0, 1, 3]).unwrap();
    let alpha = Coeffs::new(vec![0.0, 0.1, 0.2, 0.3]).unwrap();
    let c = emit_circuit(&path, &alpha, false).unwrap();
    assert!(simulate_diagonal(&c).is_err());
}

#[test]
fn simulator_adds_phases_of_concatenated_circuits() {
    let lambda: Phases = random_phases(&InstanceKey::new(3, 4, 0.0, 0)).unwrap();
    let alpha = forward_wht(&lambda);
    let p1 = path_search(&lambda, &SearchConfig::new(6)).unwrap();
    let p2 = path_search(&lambda, &SearchConfig::new(11)).unwrap();
    let c1 = emit_circuit(&p1, &alpha, true).unwrap();
    let c2 = emit_circuit(&p2, &alpha, true).unwrap();
    let mut both: Circuit = Circuit::new(c1.wire_count);
    for g in c1.gates().iter().chain(c2.gates()) {
        both.push(*g).unwrap();
    }
    let s1 = simulate_diagonal(&c1).unwrap();
    let s2 = simulate_diagonal(&c2).unwrap();
    let s = simulate_diagonal(&both).unwrap();
    for x in 0..16 {
        assert!(wrap(s[x] - s1[x] - s2[x]) < 1e-12);
    }
}
