// Copyright 2026 The diagsynth Authors
// SPDX-License-Identifier: Apache-2.0

//! From a finished walk to a gate list.
//!
//! The realization uses `k + 1` wires. Wire `k` is an accumulator that always
//! holds the parity `⟨s, x⟩` of the current walk vertex `s`; it starts at
//! `s = 0^k`, so each hypercube edge that flips bit `j` is one
//! `CNOT(j → k)`. On first arrival at `s` the accumulator gets
//! `Rz(−2·α_s)`, which multiplies `|x⟩` by `e^{i α_s (−1)^{⟨s,x⟩}}` under
//! `Rz(θ) = diag(e^{−iθ/2}, e^{iθ/2})`. The constant term `α_0` is a global
//! phase and is not emitted.

use std::fmt::Write as _;

use crate::error::{Result, SynthError};
use crate::pathsearch::PathState;
use crate::scalar::Real;
use crate::spectral::{inverse_wht, CoeffVector, PhaseVector};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Gate<T> {
    Cnot { control: usize, target: usize },
    Rz { theta: T, wire: usize },
    X { wire: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Circuit<T> {
    gates: Vec<Gate<T>>,
    pub wire_count: usize,
    /// `C` the walk was searched with.
    pub cnot_budget: usize,
    pub cnot_emitted: usize,
    pub rz_count: usize,
    pub uncompute: bool,
}

impl<T: Real> Circuit<T> {
    pub fn new(wire_count: usize) -> Self {
        Self {
            gates: Vec::new(),
            wire_count,
            cnot_budget: 0,
            cnot_emitted: 0,
            rz_count: 0,
            uncompute: false,
        }
    }

    pub fn push(&mut self, gate: Gate<T>) -> Result<()> {
        let in_range = |w: usize| w < self.wire_count;
        match gate {
            Gate::Cnot { control, target } => {
                if control == target || !in_range(control) || !in_range(target) {
                    return Err(SynthError::InvalidArgument(format!(
                        "bad cnot {control} -> {target}"
                    )));
                }
                self.cnot_emitted += 1;
            }
            Gate::Rz { theta, wire } => {
                if !theta.is_finite() || !in_range(wire) {
                    return Err(SynthError::InvalidArgument(format!("bad rz on {wire}")));
                }
                self.rz_count += 1;
            }
            Gate::X { wire } => {
                if !in_range(wire) {
                    return Err(SynthError::InvalidArgument(format!("bad x on {wire}")));
                }
            }
        }
        self.gates.push(gate);
        Ok(())
    }

    pub fn gates(&self) -> &[Gate<T>] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }
}

fn check_width<T: Real>(path: &PathState, alpha: &CoeffVector<T>) -> Result<()> {
    if path.qubits() != alpha.qubits() {
        return Err(SynthError::LengthMismatch {
            left: 1 << path.qubits(),
            right: alpha.len(),
        });
    }
    Ok(())
}

/// Keeps `α_T[s]` for every mask the walk touched (including the constant
/// term at mask 0) and zeroes the rest.
pub fn synthesize_coeffs<T: Real>(
    path: &PathState,
    alpha_t: &CoeffVector<T>,
) -> Result<CoeffVector<T>> {
    check_width(path, alpha_t)?;
    let mut kept = vec![T::zero(); alpha_t.len()];
    for &s in path.first_visits() {
        kept[s] = alpha_t[s];
    }
    CoeffVector::new(kept)
}

/// The coefficients the walk did not reach; `α_T − synthesize_coeffs(..)`.
pub fn dropped_coeffs<T: Real>(
    path: &PathState,
    alpha_t: &CoeffVector<T>,
) -> Result<CoeffVector<T>> {
    check_width(path, alpha_t)?;
    let mut dropped = alpha_t.values().to_vec();
    for &s in path.first_visits() {
        dropped[s] = T::zero();
    }
    CoeffVector::new(dropped)
}

/// `inverse_wht(synthesize_coeffs(..))`.
pub fn synthesized_phases<T: Real>(
    path: &PathState,
    alpha_t: &CoeffVector<T>,
) -> Result<PhaseVector<T>> {
    Ok(inverse_wht(&synthesize_coeffs(path, alpha_t)?))
}

pub fn emit_circuit<T: Real>(
    path: &PathState,
    alpha_t: &CoeffVector<T>,
    uncompute: bool,
) -> Result<Circuit<T>> {
    check_width(path, alpha_t)?;
    let nodes = path.nodes();
    if nodes.len() < 2 {
        return Err(SynthError::MalformedPath("need at least one edge".into()));
    }
    let k = path.qubits();
    let acc = k;
    let mut circuit = Circuit::new(k + 1);
    circuit.cnot_budget = path.budget_nodes().saturating_sub(2);
    circuit.uncompute = uncompute;

    let mut placed = vec![false; alpha_t.len()];
    placed[nodes[0]] = true;
    let minus_two = -T::lit(2.0);
    for pair in nodes.windows(2) {
        let flip = pair[0] ^ pair[1];
        if flip.count_ones() != 1 {
            return Err(SynthError::MalformedPath(format!(
                "{} -> {} is not a hypercube edge",
                pair[0], pair[1]
            )));
        }
        circuit.push(Gate::Cnot {
            control: flip.trailing_zeros() as usize,
            target: acc,
        })?;
        let s = pair[1];
        if !placed[s] {
            placed[s] = true;
            circuit.push(Gate::Rz {
                theta: minus_two * alpha_t[s],
                wire: acc,
            })?;
        }
    }
    if uncompute {
        let last = *nodes.last().expect("non-empty");
        for j in (0..k).filter(|j| last >> j & 1 == 1) {
            circuit.push(Gate::Cnot {
                control: j,
                target: acc,
            })?;
        }
    }
    Ok(circuit)
}

/// OpenQASM 2.0 text. Angles are printed with 17 significant digits.
pub fn to_qasm<T: Real>(circuit: &Circuit<T>) -> String {
    let mut out = String::new();
    out.push_str("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
    let _ = writeln!(out, "qreg q[{}];", circuit.wire_count);
    for g in &circuit.gates {
        let _ = match *g {
            Gate::Cnot { control, target } => writeln!(out, "cx q[{control}],q[{target}];"),
            Gate::Rz { theta, wire } => {
                writeln!(out, "rz({:.16e}) q[{wire}];", theta.to_f64_lossy())
            }
            Gate::X { wire } => writeln!(out, "x q[{wire}];"),
        };
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::error;

    #[test]
    fn single_qubit_circuit() {
        let path = PathState::from_nodes(1, 2, &[0, 1]).unwrap();
        let alpha = CoeffVector::new(vec![0.0, 0.3]).unwrap();
        let c = emit_circuit(&path, &alpha, true).unwrap();
        assert_eq!(
            c.gates(),
            &[
                Gate::Cnot {
                    control: 0,
                    target: 1
                },
                Gate::Rz {
                    theta: -0.6,
                    wire: 1
                },
                Gate::Cnot {
                    control: 0,
                    target: 1
                },
            ]
        );
        assert_eq!(c.cnot_emitted, 2);
        assert_eq!(c.rz_count, 1);
        let c = emit_circuit(&path, &alpha, false).unwrap();
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn three_qubit_gate_order() {
        let path = PathState::from_nodes(3, 3, &[0b000, 0b001, 0b011]).unwrap();
        let alpha = CoeffVector::new((0..8).map(|i| i as f64 * 0.1).collect()).unwrap();
        let c = emit_circuit(&path, &alpha, true).unwrap();
        let expected = [
            Gate::Cnot {
                control: 0,
                target: 3,
            },
            Gate::Rz {
                theta: -2.0 * alpha[1],
                wire: 3,
            },
            Gate::Cnot {
                control: 1,
                target: 3,
            },
            Gate::Rz {
                theta: -2.0 * alpha[3],
                wire: 3,
            },
            Gate::Cnot {
                control: 0,
                target: 3,
            },
            Gate::Cnot {
                control: 1,
                target: 3,
            },
        ];
        assert_eq!(c.gates(), &expected);
        assert_eq!(c.cnot_budget, 1);
    }

    #[test]
    fn revisits_skip_rz() {
        let path = PathState::from_nodes(2, 6, &[0, 1, 0, 2]).unwrap();
        let alpha = CoeffVector::new(vec![0.5, 0.1, 0.2, 0.3]).unwrap();
        let c = emit_circuit(&path, &alpha, true).unwrap();
        assert_eq!(c.rz_count, 2);
        assert_eq!(c.cnot_emitted, 3 + 1);
        assert!(c.gates().iter().all(|g| !matches!(g, Gate::X { .. })));
    }

    #[test]
    fn kept_coefficients() {
        let alpha = CoeffVector::new(vec![0.5, 0.1, 0.2, 0.3]).unwrap();
        let full = PathState::from_nodes(2, 4, &[0, 1, 3, 2]).unwrap();
        let kept = synthesize_coeffs(&full, &alpha).unwrap();
        assert_eq!(kept, alpha);
        let lt = inverse_wht(&alpha);
        assert_eq!(error(&lt, &inverse_wht(&kept)).unwrap(), 0.0);

        let start = PathState::start(2, 2);
        let kept = synthesize_coeffs(&start, &alpha).unwrap();
        assert_eq!(kept.values(), &[0.5, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn start_only_error_is_rms_of_centred_half_angles() {
        let lambda = PhaseVector::new(vec![0.3, -1.2, 2.2, 0.9]).unwrap();
        let alpha = crate::spectral::forward_wht(&lambda);
        let kept = synthesize_coeffs(&PathState::start(2, 2), &alpha).unwrap();
        let mean = lambda.values().iter().sum::<f64>() / 4.0;
        let direct = (lambda
            .values()
            .iter()
            .map(|l| ((l - mean) / 2.0).sin().powi(2))
            .sum::<f64>()
            / 4.0)
            .sqrt();
        let got = error(&lambda, &inverse_wht(&kept)).unwrap();
        assert!((got - direct).abs() < 1e-14);
    }

    #[test]
    fn width_mismatch() {
        let alpha = CoeffVector::new(vec![0.0; 8]).unwrap();
        let path = PathState::from_nodes(2, 3, &[0, 1]).unwrap();
        assert!(synthesize_coeffs(&path, &alpha).is_err());
        assert!(emit_circuit(&PathState::start(3, 2), &alpha, true).is_err());
    }

    #[test]
    fn qasm_text() {
        let c: Circuit<f64> = Circuit::new(3);
        assert_eq!(
            to_qasm(&c),
            "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\n"
        );

        let path = PathState::from_nodes(1, 2, &[0, 1]).unwrap();
        let alpha = CoeffVector::new(vec![0.0, 0.25]).unwrap();
        let c = emit_circuit(&path, &alpha, true).unwrap();
        let text = to_qasm(&c);
        let body: Vec<&str> = text.lines().skip(3).collect();
        assert_eq!(
            body,
            [
                "cx q[0],q[1];",
                "rz(-5.0000000000000000e-1) q[1];",
                "cx q[0],q[1];"
            ]
        );
    }

    #[test]
    fn push_validates() {
        let mut c: Circuit<f64> = Circuit::new(2);
        assert!(c
            .push(Gate::Cnot {
                control: 1,
                target: 1
            })
            .is_err());
        assert!(c
            .push(Gate::Rz {
                theta: f64::NAN,
                wire: 0
            })
            .is_err());
        assert!(c.push(Gate::X { wire: 2 }).is_err());
        assert!(c.is_empty());
    }
}
