// Copyright 2026 The diagsynth Authors
// SPDX-License-Identifier: Apache-2.0

//! Sweep over qubit counts and reduction ratios on random targets.
//!
//! CSV columns, in order:
//! `kind,k,ratio,trial,cnot_budget,error,error_min,error_max,utility,
//! distinct_phases,dead_ends,extensions[,runtime_ms]`.
//! `kind` is `trial` for single runs and `mean` for the aggregate that follows
//! each `(k, ratio)` block. Rows come out in `(k, ratio, trial)` order whatever
//! order the parallel trials finish in. `runtime_ms` is only written with
//! timing enabled, so the default output is byte-for-byte reproducible.

use std::io::Write;

use anyhow::Result;
use diagsynth::sampling::{random_phases, InstanceKey};
use diagsynth::Phases;
use rayon::prelude::*;

use crate::report::{budget_for_ratio, synthesize, SynthesisOptions, SynthesisReport};

#[derive(Debug, Clone)]
pub struct BenchSpec {
    pub qubits: Vec<usize>,
    pub ratios: Vec<f64>,
    pub trials: u64,
    pub seed_base: u64,
    pub gamma: f64,
    pub timing: bool,
}

impl BenchSpec {
    pub fn default_ratios() -> Vec<f64> {
        (1..=10).map(|i| i as f64 * 0.05).collect()
    }
}

/// Aggregate of all trials for one `(k, ratio)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub k: usize,
    pub ratio: f64,
    pub cnot_budget: usize,
    pub trials: usize,
    pub mean_error: f64,
    pub min_error: f64,
    pub max_error: f64,
    pub mean_utility: Option<f64>,
    pub mean_distinct: f64,
    pub mean_dead_ends: f64,
    pub mean_extensions: f64,
    pub mean_runtime_ms: f64,
}

#[derive(Debug, Clone)]
pub struct BenchBlock {
    pub trials: Vec<SynthesisReport>,
    pub summary: BenchRow,
}

fn mean(values: impl Iterator<Item = f64>) -> Option<f64> {
    let (sum, n) = values.fold((0.0, 0usize), |(s, n), v| (s + v, n + 1));
    (n > 0).then(|| sum / n as f64)
}

pub fn aggregate(k: usize, ratio: f64, cnot_budget: usize, runs: &[SynthesisReport]) -> BenchRow {
    assert!(!runs.is_empty(), "aggregate needs at least one trial");
    let err = || runs.iter().map(|r| r.error);
    BenchRow {
        k,
        ratio,
        cnot_budget,
        trials: runs.len(),
        mean_error: mean(err()).unwrap_or(0.0),
        min_error: err().fold(f64::INFINITY, f64::min),
        max_error: err().fold(f64::NEG_INFINITY, f64::max),
        mean_utility: mean(runs.iter().filter_map(|r| r.utility)),
        mean_distinct: mean(runs.iter().map(|r| r.distinct_phases as f64)).unwrap_or(0.0),
        mean_dead_ends: mean(runs.iter().map(|r| r.dead_ends as f64)).unwrap_or(0.0),
        mean_extensions: mean(runs.iter().map(|r| r.extensions as f64)).unwrap_or(0.0),
        mean_runtime_ms: mean(runs.iter().map(|r| r.runtime_ms)).unwrap_or(0.0),
    }
}

/// Runs `trials` independent instances for one `(k, ratio)`.
pub fn run_block(k: usize, ratio: f64, spec: &BenchSpec) -> Result<BenchBlock> {
    let cnot_budget = budget_for_ratio(k, ratio)?;
    let trials = (0..spec.trials)
        .into_par_iter()
        .map(|trial| {
            let key = InstanceKey::new(spec.seed_base, k, ratio, trial);
            let lambda: Phases = random_phases(&key)?;
            let mut options = SynthesisOptions::new(cnot_budget);
            options.gamma = spec.gamma;
            options.seed = Some(trial);
            Ok(synthesize(&lambda, &options)?.report)
        })
        .collect::<Result<Vec<_>>>()?;
    let summary = aggregate(k, ratio, cnot_budget, &trials);
    Ok(BenchBlock { trials, summary })
}

pub fn run_bench(spec: &BenchSpec) -> Result<Vec<BenchBlock>> {
    anyhow::ensure!(spec.trials >= 1, "need at least one trial");
    let mut blocks = Vec::new();
    for &k in &spec.qubits {
        for &ratio in &spec.ratios {
            blocks.push(run_block(k, ratio, spec)?);
        }
    }
    Ok(blocks)
}

fn opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn write_csv<W: Write>(out: W, blocks: &[BenchBlock], timing: bool) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec![
        "kind",
        "k",
        "ratio",
        "trial",
        "cnot_budget",
        "error",
        "error_min",
        "error_max",
        "utility",
        "distinct_phases",
        "dead_ends",
        "extensions",
    ];
    if timing {
        header.push("runtime_ms");
    }
    w.write_record(&header)?;
    for block in blocks {
        let s = &block.summary;
        for (i, r) in block.trials.iter().enumerate() {
            let mut row = vec![
                "trial".to_string(),
                r.k.to_string(),
                s.ratio.to_string(),
                i.to_string(),
                r.cnot_budget.to_string(),
                r.error.to_string(),
                String::new(),
                String::new(),
                opt(r.utility),
                r.distinct_phases.to_string(),
                r.dead_ends.to_string(),
                r.extensions.to_string(),
            ];
            if timing {
                row.push(r.runtime_ms.to_string());
            }
            w.write_record(&row)?;
        }
        let mut row = vec![
            "mean".to_string(),
            s.k.to_string(),
            s.ratio.to_string(),
            String::new(),
            s.cnot_budget.to_string(),
            s.mean_error.to_string(),
            s.min_error.to_string(),
            s.max_error.to_string(),
            opt(s.mean_utility),
            s.mean_distinct.to_string(),
            s.mean_dead_ends.to_string(),
            s.mean_extensions.to_string(),
        ];
        if timing {
            row.push(s.mean_runtime_ms.to_string());
        }
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}
