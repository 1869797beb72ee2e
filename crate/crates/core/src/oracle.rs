// Copyright 2026 The diagsynth Authors
// SPDX-License-Identifier: Apache-2.0

//! Independent checks used by tests and the golden reproduction. Nothing in
//! the synthesis path calls into this module.

use crate::circuit::{Circuit, Gate};
use crate::error::{Result, SynthError};
use crate::scalar::Real;
use crate::spectral::{CoeffVector, PhaseVector};

/// Largest number of subsets the exhaustive search will visit.
pub const ENUMERATION_LIMIT: u128 = 5_000_000;

/// Widest circuit the simulator accepts.
pub const MAX_SIMULATED_WIRES: usize = 21;

/// Where one basis state ends up and the phase it picked up.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasisOutcome<T> {
    pub out_index: usize,
    pub phase: T,
}

/// Runs basis label `input` through the circuit. CNOT, X and Rz never create
/// superpositions, so tracking one label and one phase is exact.
pub fn track_basis_state<T: Real>(circuit: &Circuit<T>, input: usize) -> BasisOutcome<T> {
    let half = T::half();
    let mut label = input;
    let mut phase = T::zero();
    for g in circuit.gates() {
        match *g {
            Gate::Cnot { control, target } => {
                if label >> control & 1 == 1 {
                    label ^= 1 << target;
                }
            }
            Gate::X { wire } => label ^= 1 << wire,
            Gate::Rz { theta, wire } => {
                if label >> wire & 1 == 1 {
                    phase = phase + theta * half;
                } else {
                    phase = phase - theta * half;
                }
            }
        }
    }
    BasisOutcome {
        out_index: label,
        phase,
    }
}

/// Phase picked up by every `|x⟩ ⊗ |0⟩_anc`, where the last wire is the
/// ancilla. Fails if any basis state does not come back to itself.
pub fn simulate_diagonal<T: Real>(circuit: &Circuit<T>) -> Result<PhaseVector<T>> {
    let wires = circuit.wire_count;
    if !(2..=MAX_SIMULATED_WIRES).contains(&wires) {
        return Err(SynthError::InvalidArgument(format!(
            "simulator supports 2..={MAX_SIMULATED_WIRES} wires, got {wires}"
        )));
    }
    let k = wires - 1;
    let mut phases = Vec::with_capacity(1 << k);
    for x in 0..1usize << k {
        let out = track_basis_state(circuit, x);
        if out.out_index != x {
            return Err(SynthError::NonDiagonal {
                input: x,
                output: out.out_index,
            });
        }
        phases.push(out.phase);
    }
    PhaseVector::new(phases)
}

fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// Error of zeroing `masks` in `alpha`, evaluated straight from the
/// per-state phase difference `Σ_{s∈masks} α_s (−1)^{⟨s,x⟩}`.
pub fn discard_error<T: Real>(alpha: &CoeffVector<T>, masks: &[usize]) -> T {
    let half = T::half();
    let n = alpha.len();
    let mut total = T::zero();
    for x in 0..n {
        let mut delta = T::zero();
        for &s in masks {
            if (s & x).count_ones() & 1 == 0 {
                delta = delta + alpha[s];
            } else {
                delta = delta - alpha[s];
            }
        }
        let v = (delta * half).sin();
        total = total + v * v;
    }
    (total / T::from_usize(n).expect("length fits")).sqrt()
}

/// The `top_n` lowest-error ways of dropping `discard_count` masks from
/// `1..2^k`, ascending by error; equal errors keep lexicographic order.
pub fn rank_discard_subsets<T: Real>(
    alpha: &CoeffVector<T>,
    discard_count: usize,
    top_n: usize,
) -> Result<Vec<(Vec<usize>, T)>> {
    let pool = alpha.len() - 1;
    if discard_count > pool {
        return Err(SynthError::InvalidArgument(format!(
            "cannot drop {discard_count} of {pool} masks"
        )));
    }
    let count = binomial(pool, discard_count);
    if count > ENUMERATION_LIMIT {
        return Err(SynthError::EnumerationTooLarge {
            count,
            limit: ENUMERATION_LIMIT,
        });
    }
    if top_n == 0 {
        return Ok(Vec::new());
    }

    let mut best: Vec<(Vec<usize>, T)> = Vec::with_capacity(top_n + 1);
    let mut subset: Vec<usize> = (1..=discard_count).collect();
    loop {
        let err = discard_error(alpha, &subset);
        let full = best.len() == top_n;
        if !full || err < best[top_n - 1].1 {
            let at = best.partition_point(|(_, e)| *e <= err);
            best.insert(at, (subset.clone(), err));
            best.truncate(top_n);
        }
        // next combination of 1..=pool in lexicographic order
        let r = discard_count;
        let mut i = r;
        while i > 0 && subset[i - 1] == pool - r + i {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        subset[i - 1] += 1;
        for j in i..r {
            subset[j] = subset[j - 1] + 1;
        }
    }
    Ok(best)
}

pub fn best_discard_subset<T: Real>(
    alpha: &CoeffVector<T>,
    discard_count: usize,
) -> Result<(Vec<usize>, T)> {
    let mut ranked = rank_discard_subsets(alpha, discard_count, 1)?;
    Ok(ranked.pop().expect("at least the empty or first subset"))
}

fn qasm_err(line: usize, message: impl Into<String>) -> SynthError {
    SynthError::Qasm {
        line,
        message: message.into(),
    }
}

fn parse_wire(token: &str, line: usize) -> Result<usize> {
    token
        .trim()
        .strip_prefix("q[")
        .and_then(|t| t.strip_suffix(']'))
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| qasm_err(line, format!("bad operand `{token}`")))
}

/// Reader for exactly the subset [`crate::circuit::to_qasm`] writes.
pub fn parse_qasm<T: Real>(text: &str) -> Result<Circuit<T>> {
    let mut circuit: Option<Circuit<T>> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let stmt = raw.trim();
        if stmt.is_empty() {
            continue;
        }
        let stmt = stmt
            .strip_suffix(';')
            .ok_or_else(|| qasm_err(line, "missing `;`"))?;
        if stmt == "OPENQASM 2.0" || stmt.starts_with("include ") {
            continue;
        }
        if let Some(rest) = stmt.strip_prefix("qreg ") {
            let n = parse_wire(rest, line)?;
            circuit = Some(Circuit::new(n));
            continue;
        }
        let c = circuit
            .as_mut()
            .ok_or_else(|| qasm_err(line, "gate before qreg"))?;
        let gate = if let Some(rest) = stmt.strip_prefix("cx ") {
            let (a, b) = rest
                .split_once(',')
                .ok_or_else(|| qasm_err(line, "cx needs two operands"))?;
            Gate::Cnot {
                control: parse_wire(a, line)?,
                target: parse_wire(b, line)?,
            }
        } else if let Some(rest) = stmt.strip_prefix("rz(") {
            let (angle, operand) = rest
                .split_once(") ")
                .ok_or_else(|| qasm_err(line, "malformed rz"))?;
            let theta = angle
                .parse::<T>()
                .map_err(|_| qasm_err(line, format!("bad angle `{angle}`")))?;
            Gate::Rz {
                theta,
                wire: parse_wire(operand, line)?,
            }
        } else if let Some(rest) = stmt.strip_prefix("x ") {
            Gate::X {
                wire: parse_wire(rest, line)?,
            }
        } else {
            return Err(qasm_err(line, format!("unsupported statement `{stmt}`")));
        };
        c.push(gate).map_err(|e| qasm_err(line, e.to_string()))?;
    }
    circuit.ok_or_else(|| qasm_err(0, "no qreg declaration"))
}
