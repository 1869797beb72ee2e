// Copyright 2026 The diagsynth Authors
// SPDX-License-Identifier: Apache-2.0

use std::time::Instant;

use anyhow::{bail, Result};
use diagsynth::circuit::dropped_coeffs;
use diagsynth::pathsearch::PathState;
use diagsynth::spectral::residual_error;
use diagsynth::{emit_circuit, forward_wht, path_search, utility};
use diagsynth::{Circuit, Phases, SearchConfig};
use serde::{Deserialize, Serialize};

/// One synthesis run. Field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SynthesisReport {
    pub k: usize,
    pub cnot_budget: usize,
    /// `1 − C / 2^k`.
    pub reduction_ratio: f64,
    pub error: f64,
    /// `reduction_ratio / error`; absent when the error is zero.
    pub utility: Option<f64>,
    pub cnot_emitted: usize,
    pub rz_count: usize,
    pub distinct_phases: usize,
    pub dead_ends: usize,
    pub extensions: usize,
    pub final_epsilon: f64,
    pub runtime_ms: f64,
    pub seed: Option<u64>,
}

pub const REPORT_COLUMNS: [&str; 13] = [
    "k",
    "cnot_budget",
    "reduction_ratio",
    "error",
    "utility",
    "cnot_emitted",
    "rz_count",
    "distinct_phases",
    "dead_ends",
    "extensions",
    "final_epsilon",
    "runtime_ms",
    "seed",
];

#[derive(Debug, Clone)]
pub struct SynthesisOptions {
    pub cnot_budget: usize,
    pub gamma: f64,
    pub eps_step: f64,
    pub eps_max: f64,
    pub uncompute: bool,
    pub seed: Option<u64>,
}

impl SynthesisOptions {
    pub fn new(cnot_budget: usize) -> Self {
        Self {
            cnot_budget,
            gamma: diagsynth::importance::DEFAULT_GAMMA,
            eps_step: 0.01,
            eps_max: 0.5,
            uncompute: true,
            seed: None,
        }
    }

    pub fn search_config(&self) -> SearchConfig<f64> {
        let mut config = SearchConfig::new(self.cnot_budget).with_gamma(self.gamma);
        config.eps_start = self.eps_step;
        config.eps_step = self.eps_step;
        config.eps_max = self.eps_max;
        config
    }
}

pub struct Outcome {
    pub report: SynthesisReport,
    pub path: PathState,
    pub circuit: Circuit,
}

/// `C = round((1 − r)·2^k)`.
pub fn budget_for_ratio(qubits: usize, ratio: f64) -> Result<usize> {
    if !(0.0..=1.0).contains(&ratio) {
        bail!("reduction ratio {ratio} outside [0, 1]");
    }
    Ok(((1.0 - ratio) * (1u64 << qubits) as f64).round() as usize)
}

pub fn synthesize(lambda: &Phases, options: &SynthesisOptions) -> Result<Outcome> {
    let k = lambda.qubits();
    let config = options.search_config();
    let started = Instant::now();
    let path = path_search(lambda, &config)?;
    let alpha = forward_wht(lambda);
    let dropped = dropped_coeffs(&path, &alpha)?;
    let circuit = emit_circuit(&path, &alpha, options.uncompute)?;
    let runtime_ms = started.elapsed().as_secs_f64() * 1e3;

    let error = residual_error(&dropped);
    let reduction_ratio = 1.0 - options.cnot_budget as f64 / (1u64 << k) as f64;
    let utility = if error > 0.0 {
        utility(reduction_ratio.clamp(0.0, 1.0), error).ok()
    } else {
        None
    };
    let report = SynthesisReport {
        k,
        cnot_budget: options.cnot_budget,
        reduction_ratio,
        error,
        utility,
        cnot_emitted: circuit.cnot_emitted,
        rz_count: circuit.rz_count,
        distinct_phases: path.distinct_count(),
        dead_ends: path.stats.dead_ends,
        extensions: path.stats.extensions,
        final_epsilon: path.stats.final_epsilon,
        runtime_ms,
        seed: options.seed,
    };
    Ok(Outcome {
        report,
        path,
        circuit,
    })
}

pub fn report_json(report: &SynthesisReport) -> Result<String> {
    Ok(serde_json::to_string_pretty(report)? + "\n")
}

pub fn report_csv(report: &SynthesisReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.serialize(report)?;
    Ok(String::from_utf8(w.into_inner()?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_mapping() {
        assert_eq!(budget_for_ratio(5, 0.25).unwrap(), 24);
        assert_eq!(budget_for_ratio(8, 0.05).unwrap(), 243);
        assert_eq!(budget_for_ratio(4, 1.0).unwrap(), 0);
        assert!(budget_for_ratio(4, 1.5).is_err());
    }

    #[test]
    fn csv_header_order() {
        let lambda = Phases::new(vec![0.1, 0.4, 2.0, 1.0]).unwrap();
        let out = synthesize(&lambda, &SynthesisOptions::new(1)).unwrap();
        let text = report_csv(&out.report).unwrap();
        let header = text.lines().next().unwrap();
        assert_eq!(header, REPORT_COLUMNS.join(","));
    }

    #[test]
    fn json_field_set() {
        let lambda = Phases::new(vec![0.1, 0.4, 2.0, 1.0]).unwrap();
        let out = synthesize(&lambda, &SynthesisOptions::new(1)).unwrap();
        let value: serde_json::Value =
            serde_json::from_str(&report_json(&out.report).unwrap()).unwrap();
        let mut keys: Vec<&str> = value
            .as_object()
            .unwrap()
            .keys()
            .map(|s| s.as_str())
            .collect();
        keys.sort_unstable();
        let mut want = REPORT_COLUMNS.to_vec();
        want.sort_unstable();
        assert_eq!(keys, want);
    }
}
