// Copyright 2026 The diagsynth Authors
// SPDX-License-Identifier: Apache-2.0

//! Command-line surface of diagsynth.
//!
//! Exit codes: 0 success, 1 runtime failure (I/O, failed golden check),
//! 2 bad input (flags, vector length, budget).

pub mod bench;
pub mod golden;
pub mod io;
pub mod report;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use diagsynth::fixtures::reference_alpha;
use diagsynth::sampling::{random_phases, InstanceKey};
use diagsynth::{inverse_wht, to_qasm, Coeffs, Phases};
use log::warn;

use crate::bench::{run_bench, write_csv, BenchSpec};
use crate::report::{budget_for_ratio, report_csv, report_json, synthesize, SynthesisOptions};

#[derive(Debug, Parser)]
#[command(
    name = "diagsynth",
    version,
    about = "Budgeted synthesis of diagonal unitaries"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Synthesize one diagonal unitary under a CNOT budget.
    Synth(SynthArgs),
    /// Sweep qubit counts and reduction ratios over random targets.
    Bench(BenchArgs),
    /// Recompute the reference tables of the embedded 5-qubit instance.
    Golden(GoldenArgs),
    /// Print the embedded 5-qubit instance.
    Fixture(FixtureArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EmitFormat {
    Qasm,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("target").required(true).args(["lambda", "seed"])))]
#[command(group(clap::ArgGroup::new("budget").required(true).args(["cnots", "reduce"])))]
pub struct SynthArgs {
    /// Number of qubits k.
    #[arg(short = 'k', long)]
    pub qubits: usize,
    /// Phase file: one value per line, or a JSON array; 2^k entries in radians.
    #[arg(long)]
    pub lambda: Option<PathBuf>,
    /// Draw phases uniformly from [0, 2π) with this seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// CNOT budget C.
    #[arg(long)]
    pub cnots: Option<usize>,
    /// Reduction ratio r; C = round((1 − r)·2^k).
    #[arg(long)]
    pub reduce: Option<f64>,
    #[arg(long, default_value_t = diagsynth::importance::DEFAULT_GAMMA)]
    pub gamma: f64,
    #[arg(long, default_value_t = 0.01)]
    pub eps_step: f64,
    #[arg(long, default_value_t = 0.5)]
    pub eps_max: f64,
    #[arg(long, value_enum, default_value_t = EmitFormat::None)]
    pub emit: EmitFormat,
    /// Restore the accumulator wire at the end of the circuit.
    #[arg(long, default_value_t = true, action = ArgAction::Set)]
    pub uncompute: bool,
    /// Report destination (stdout when absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// QASM destination with `--emit qasm` (stdout after the report when absent).
    #[arg(long)]
    pub qasm_out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    pub report: ReportFormat,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub qubits: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    pub ratios: Option<Vec<f64>>,
    #[arg(long, default_value_t = 20)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed_base: u64,
    #[arg(long, default_value_t = diagsynth::importance::DEFAULT_GAMMA)]
    pub gamma: f64,
    /// Add a runtime_ms column (makes the output run-dependent).
    #[arg(long)]
    pub timing: bool,
    /// CSV destination (stdout when absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GoldenTable {
    /// Error after dropping each coefficient alone.
    Table1,
    /// The twenty cheapest four-coefficient drops.
    Table2,
}

#[derive(Debug, Args)]
pub struct GoldenArgs {
    #[arg(value_enum)]
    pub table: GoldenTable,
    /// Replace the embedded coefficients (32 values indexed by mask).
    #[arg(long)]
    pub alpha: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FixtureKind {
    /// Walsh coefficients, indexed by mask.
    Alpha,
    /// Phases, indexed by basis label.
    Lambda,
}

#[derive(Debug, Args)]
pub struct FixtureArgs {
    #[arg(value_enum)]
    pub kind: FixtureKind,
}

/// Input problem; maps to exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

/// Runs a parsed command and maps the outcome to an exit code.
pub fn run(cli: Cli) -> i32 {
    let result = match cli.command {
        Command::Synth(args) => cmd_synth(&args),
        Command::Bench(args) => cmd_bench(&args),
        Command::Golden(args) => cmd_golden(&args),
        Command::Fixture(args) => cmd_fixture(&args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                2
            } else {
                1
            }
        }
    }
}

fn write_or_print(dest: Option<&Path>, text: &str) -> Result<()> {
    match dest {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(stdout.flush()?)
        }
    }
}

fn load_phases(args: &SynthArgs) -> Result<Phases> {
    if args.qubits == 0 || args.qubits > 30 {
        return Err(usage(format!(
            "--qubits {} out of range 1..=30",
            args.qubits
        )));
    }
    if let Some(seed) = args.seed {
        return Ok(random_phases(&InstanceKey::new(seed, args.qubits, 0.0, 0))?);
    }
    let path = args.lambda.as_deref().expect("clap enforces one target");
    let values = io::read_reals(path).map_err(|e| usage(format!("{e:#}")))?;
    if values.len() != 1 << args.qubits {
        return Err(usage(format!(
            "{} holds {} values, expected 2^{} = {}",
            path.display(),
            values.len(),
            args.qubits,
            1u64 << args.qubits
        )));
    }
    Phases::new(values).map_err(|e| usage(e.to_string()))
}

pub fn cmd_synth(args: &SynthArgs) -> Result<i32> {
    let lambda = load_phases(args)?;
    let k = args.qubits;
    let cnot_budget = match (args.cnots, args.reduce) {
        (Some(c), _) => c,
        (None, Some(r)) => budget_for_ratio(k, r).map_err(|e| usage(e.to_string()))?,
        (None, None) => unreachable!("clap enforces one budget"),
    };
    let size = 1usize << k;
    if cnot_budget + 2 > 2 * size {
        return Err(usage(format!(
            "budget C = {cnot_budget} needs C + 2 <= 2^(k+1) = {}",
            2 * size
        )));
    }
    if cnot_budget + 2 > size {
        warn!(
            "C + 2 = {} exceeds the {size} masks; the walk must revisit and coverage tops out at {size}",
            cnot_budget + 2
        );
    }
    let mut options = SynthesisOptions::new(cnot_budget);
    options.gamma = args.gamma;
    options.eps_step = args.eps_step;
    options.eps_max = args.eps_max;
    options.uncompute = args.uncompute;
    options.seed = args.seed;
    options
        .search_config()
        .validate()
        .map_err(|e| usage(e.to_string()))?;

    let outcome = synthesize(&lambda, &options)?;
    let text = match args.report {
        ReportFormat::Json => report_json(&outcome.report)?,
        ReportFormat::Csv => report_csv(&outcome.report)?,
    };
    write_or_print(args.out.as_deref(), &text)?;
    if args.emit == EmitFormat::Qasm {
        write_or_print(args.qasm_out.as_deref(), &to_qasm(&outcome.circuit))?;
    }
    Ok(0)
}

pub fn cmd_bench(args: &BenchArgs) -> Result<i32> {
    if args.trials == 0 {
        return Err(usage("--trials must be at least 1"));
    }
    if let Some(&k) = args.qubits.iter().find(|&&k| k == 0 || k > 30) {
        return Err(usage(format!("qubit count {k} out of range 1..=30")));
    }
    let ratios = args
        .ratios
        .clone()
        .unwrap_or_else(BenchSpec::default_ratios);
    if let Some(r) = ratios.iter().find(|r| !(0.0..=1.0).contains(*r)) {
        return Err(usage(format!("ratio {r} outside [0, 1]")));
    }
    let spec = BenchSpec {
        qubits: args.qubits.clone(),
        ratios,
        trials: args.trials,
        seed_base: args.seed_base,
        gamma: args.gamma,
        timing: args.timing,
    };
    // open the destination first so an unwritable path fails before the sweep
    let sink: Box<dyn Write> = match &args.out {
        Some(path) => Box::new(
            fs::File::create(path).with_context(|| format!("creating {}", path.display()))?,
        ),
        None => Box::new(std::io::stdout()),
    };
    let blocks = run_bench(&spec)?;
    write_csv(sink, &blocks, spec.timing)?;
    Ok(0)
}

pub fn cmd_golden(args: &GoldenArgs) -> Result<i32> {
    let alpha = match &args.alpha {
        Some(path) => {
            let values = io::read_reals(path).map_err(|e| usage(format!("{e:#}")))?;
            if values.len() != 32 {
                return Err(usage(format!(
                    "expected 32 coefficients, got {}",
                    values.len()
                )));
            }
            Coeffs::new(values).map_err(|e| usage(e.to_string()))?
        }
        None => reference_alpha(),
    };
    let report = match args.table {
        GoldenTable::Table1 => golden::single_discard(&alpha)?,
        GoldenTable::Table2 => golden::four_discard(&alpha)?,
    };
    print!("{}", report.render());
    Ok(if report.passed() { 0 } else { 1 })
}

pub fn cmd_fixture(args: &FixtureArgs) -> Result<i32> {
    let alpha = reference_alpha();
    let values = match args.kind {
        FixtureKind::Alpha => alpha.into_values(),
        FixtureKind::Lambda => inverse_wht(&alpha).into_values(),
    };
    write_or_print(None, &io::format_reals_csv(&values))?;
    Ok(0)
}
