// Copyright 2026 The diagsynth Authors
// SPDX-License-Identifier: Apache-2.0

//! Approximate synthesis of k-qubit diagonal unitaries under a CNOT budget.
//!
//! A diagonal unitary `diag(exp(i·λ_x))` is expanded over the Walsh basis into
//! phase-gadget coefficients `α_s`. Every parity mask `s` is a vertex of the
//! k-dimensional hypercube; walking one hypercube edge costs one CNOT on an
//! accumulator wire, and every newly reached vertex costs one `Rz`. Given a
//! budget of `C` CNOTs the search picks a walk of `C + 2` vertices starting at
//! `0^k` that favours the coefficients with the largest magnitude.
//!
//! The pipeline is:
//!
//! 1. [`spectral::forward_wht`] maps phases to coefficients.
//! 2. [`importance::phase_importance`] squashes `|α|` into node weights.
//! 3. [`pathsearch::path_search`] walks the hypercube.
//! 4. [`circuit::synthesize_coeffs`] / [`circuit::emit_circuit`] build the result.
//!
//! [`oracle`] holds independent checks (basis-state simulation and exhaustive
//! subset search) that the synthesis path never calls.
//!
//! All numeric code is generic over [`Real`]; the aliases below pin `f64`,
//! which is what the CLI and the golden data use.

// `!(x >= lo)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod circuit;
pub mod error;
pub mod fixtures;
pub mod importance;
pub mod oracle;
pub mod pathsearch;
pub mod sampling;
pub mod scalar;
pub mod spectral;

pub use error::{Result, SynthError};
pub use scalar::Real;

/// Phase vector in double precision.
pub type Phases = spectral::PhaseVector<f64>;
/// Walsh coefficient vector in double precision.
pub type Coeffs = spectral::CoeffVector<f64>;
/// Node weights in double precision.
pub type Importance = importance::ImportanceVector<f64>;
/// Gate list in double precision.
pub type Circuit = circuit::Circuit<f64>;
/// Gate in double precision.
pub type Gate = circuit::Gate<f64>;

/// Single-precision variants, mostly useful for memory-bound sweeps at large k.
pub type Phases32 = spectral::PhaseVector<f32>;
pub type Coeffs32 = spectral::CoeffVector<f32>;
pub type Importance32 = importance::ImportanceVector<f32>;
pub type Circuit32 = circuit::Circuit<f32>;

pub use circuit::{emit_circuit, synthesize_coeffs, to_qasm};
pub use importance::phase_importance;
pub use pathsearch::{path_search, search_with_importance, PathState, SearchConfig};
pub use spectral::{error as synthesis_error, forward_wht, inverse_wht, utility};
