// Copyright 2026 The diagsynth Authors
// SPDX-License-Identifier: Apache-2.0

//! Real-vector files: either one number per line (CSV, row index = basis
//! label) or a JSON array. Output always uses 17 significant digits.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};

pub fn parse_reals(text: &str) -> Result<Vec<f64>> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        return serde_json::from_str(trimmed).context("expected a JSON array of numbers");
    }
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        // tolerate a trailing comma from spreadsheet exports
        let field = line.trim_end_matches(',').trim();
        let v: f64 = field
            .parse()
            .with_context(|| format!("line {}: `{field}` is not a number", i + 1))?;
        out.push(v);
    }
    Ok(out)
}

pub fn read_reals(path: &Path) -> Result<Vec<f64>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let values = parse_reals(&text).with_context(|| format!("parsing {}", path.display()))?;
    if values.is_empty() {
        bail!("{} holds no values", path.display());
    }
    Ok(values)
}

pub fn format_reals_csv(values: &[f64]) -> String {
    let mut out = String::with_capacity(values.len() * 24);
    for v in values {
        out.push_str(&format!("{v:.16e}\n"));
    }
    out
}
