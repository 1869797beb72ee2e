// Copyright 2026 The diagsynth Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T> = std::result::Result<T, SynthError>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SynthError {
    #[error("vector length {0} is not a power of two (need 2^k with k >= 1)")]
    NotPowerOfTwo(usize),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("non-finite value at index {0}")]
    NonFinite(usize),

    #[error("utility is undefined for zero error")]
    UndefinedUtility,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("enumeration of {count} subsets exceeds the limit of {limit}")]
    EnumerationTooLarge { count: u128, limit: u128 },

    #[error("circuit is not diagonal: basis state {input} ends as {output}")]
    NonDiagonal { input: usize, output: usize },

    #[error("malformed path: {0}")]
    MalformedPath(String),

    #[error("qasm parse error on line {line}: {message}")]
    Qasm { line: usize, message: String },
}
