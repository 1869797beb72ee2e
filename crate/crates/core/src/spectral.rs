// Copyright 2026 The diagsynth Authors
// SPDX-License-Identifier: Apache-2.0

//! Phase space (`λ`) and Walsh coefficient space (`α`).
//!
//! Index convention: bit `i` of an index is qubit `i`, bit 0 least significant.
//! For a phase vector the index is the basis label `x`; for a coefficient
//! vector it is the parity mask `s`. The two are related by
//!
//! ```text
//! α_s = 2^{-k} Σ_x λ_x (-1)^{popcount(s & x)}
//! λ_x =        Σ_s α_s (-1)^{popcount(s & x)}
//! ```

use crate::error::{Result, SynthError};
use crate::scalar::Real;

fn qubits_for_len(len: usize) -> Result<usize> {
    if len < 2 || !len.is_power_of_two() {
        return Err(SynthError::NotPowerOfTwo(len));
    }
    Ok(len.trailing_zeros() as usize)
}

fn check_finite<T: Real>(values: &[T]) -> Result<()> {
    match values.iter().position(|v| !v.is_finite()) {
        Some(i) => Err(SynthError::NonFinite(i)),
        None => Ok(()),
    }
}

/// Diagonal of a k-qubit diagonal unitary, as phases in radians.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseVector<T> {
    values: Vec<T>,
    qubits: usize,
}

/// Walsh coefficients of a phase vector; `values[s]` is the angle parameter of
/// the phase gadget on parity mask `s`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffVector<T> {
    values: Vec<T>,
    qubits: usize,
}

macro_rules! vector_common {
    ($name:ident) => {
        impl<T: Real> $name<T> {
            pub fn new(values: Vec<T>) -> Result<Self> {
                let qubits = qubits_for_len(values.len())?;
                check_finite(&values)?;
                Ok(Self { values, qubits })
            }

            pub fn zeros(qubits: usize) -> Result<Self> {
                if qubits == 0 || qubits >= usize::BITS as usize {
                    return Err(SynthError::InvalidArgument(format!(
                        "qubit count {qubits} out of range"
                    )));
                }
                Ok(Self {
                    values: vec![T::zero(); 1 << qubits],
                    qubits,
                })
            }

            pub fn qubits(&self) -> usize {
                self.qubits
            }

            pub fn len(&self) -> usize {
                self.values.len()
            }

            pub fn is_empty(&self) -> bool {
                self.values.is_empty()
            }

            pub fn values(&self) -> &[T] {
                &self.values
            }

            pub fn into_values(self) -> Vec<T> {
                self.values
            }

            pub fn get(&self, index: usize) -> T {
                self.values[index]
            }
        }

        impl<T> std::ops::Index<usize> for $name<T> {
            type Output = T;

            fn index(&self, index: usize) -> &T {
                &self.values[index]
            }
        }
    };
}

vector_common!(PhaseVector);
vector_common!(CoeffVector);

impl<T: Real> CoeffVector<T> {
    /// Copy of `self` with the listed masks zeroed.
    pub fn with_zeroed(&self, masks: &[usize]) -> Self {
        let mut values = self.values.clone();
        for &s in masks {
            values[s] = T::zero();
        }
        Self {
            values,
            qubits: self.qubits,
        }
    }
}

/// Unnormalized in-place Walsh–Hadamard butterfly. `data.len()` must be a
/// power of two.
pub fn fwht_in_place<T: Real>(data: &mut [T]) {
    debug_assert!(data.len().is_power_of_two());
    let n = data.len();
    let mut half = 1;
    while half < n {
        for block in data.chunks_exact_mut(half << 1) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        half <<= 1;
    }
}

/// `α = 2^{-k} H^{⊗k} λ`.
pub fn forward_wht<T: Real>(lambda: &PhaseVector<T>) -> CoeffVector<T> {
    let mut values = lambda.values.clone();
    fwht_in_place(&mut values);
    let scale = T::one() / T::from_usize(values.len()).expect("length fits in scalar");
    for v in values.iter_mut() {
        *v = *v * scale;
    }
    CoeffVector {
        values,
        qubits: lambda.qubits,
    }
}

/// `λ = H^{⊗k} α`.
pub fn inverse_wht<T: Real>(alpha: &CoeffVector<T>) -> PhaseVector<T> {
    let mut values = alpha.values.clone();
    fwht_in_place(&mut values);
    PhaseVector {
        values,
        qubits: alpha.qubits,
    }
}

/// Distance between two diagonal unitaries given by their phases:
/// `sqrt(2^{-k} Σ_x sin²((λ_x − λ'_x)/2))`, which equals
/// `sqrt(2^{-k} Σ_x |(e^{iλ_x} − e^{iλ'_x})/2|²)`. Lies in `[0, 1]`.
pub fn error<T: Real>(lambda_t: &PhaseVector<T>, lambda_c: &PhaseVector<T>) -> Result<T> {
    phase_distance(&lambda_t.values, &lambda_c.values)
}

pub(crate) fn phase_distance<T: Real>(a: &[T], b: &[T]) -> Result<T> {
    if a.len() != b.len() {
        return Err(SynthError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let half = T::half();
    let sum = a
        .iter()
        .zip(b)
        .map(|(&x, &y)| {
            let s = ((x - y) * half).sin();
            s * s
        })
        .fold(T::zero(), |acc, v| acc + v);
    let n = T::from_usize(a.len()).expect("length fits in scalar");
    Ok((sum / n).sqrt())
}

/// Error of keeping only part of `alpha`: distance between `inverse_wht(alpha)`
/// and `inverse_wht(kept)`.
pub fn coeff_error<T: Real>(alpha: &CoeffVector<T>, kept: &CoeffVector<T>) -> Result<T> {
    error(&inverse_wht(alpha), &inverse_wht(kept))
}

/// Error caused by dropping the coefficients in `dropped` (every other entry
/// zero). The phase difference is formed directly as `H·dropped`, so dropping
/// nothing gives exactly 0 rather than round-off from `λ − λ'`.
pub fn residual_error<T: Real>(dropped: &CoeffVector<T>) -> T {
    let delta = inverse_wht(dropped);
    let zero = vec![T::zero(); delta.len()];
    phase_distance(&zero, delta.values()).expect("equal lengths")
}

/// Fraction of CNOTs saved per unit of error.
pub fn utility<T: Real>(saved_ratio: T, err: T) -> Result<T> {
    if !(saved_ratio >= T::zero() && saved_ratio <= T::one()) {
        return Err(SynthError::InvalidArgument(format!(
            "saved ratio {saved_ratio} outside [0, 1]"
        )));
    }
    if !(err > T::zero()) {
        return Err(SynthError::UndefinedUtility);
    }
    Ok(saved_ratio / err)
}
