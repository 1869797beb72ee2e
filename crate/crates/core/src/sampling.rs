// Copyright 2026 The diagsynth Authors
// SPDX-License-Identifier: Apache-2.0

//! Seeded random instances.
//!
//! Each instance draws from its own ChaCha20 stream: the 256-bit key is the
//! splitmix64 expansion of the seed, and the 64-bit stream id packs
//! `(k, ratio in basis points, trial)`. ChaCha is defined on bytes, so the
//! phases are identical on every platform. Each phase is
//! `2π · (u64 >> 11) · 2^{-53}`, i.e. uniform on `[0, 2π)`.

use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Result, SynthError};
use crate::scalar::Real;
use crate::spectral::PhaseVector;

/// Identifies one random instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InstanceKey {
    pub seed: u64,
    pub qubits: usize,
    /// Reduction ratio in basis points (`0.05 → 500`).
    pub ratio_bp: u32,
    pub trial: u64,
}

impl InstanceKey {
    pub fn new(seed: u64, qubits: usize, ratio: f64, trial: u64) -> Self {
        Self {
            seed,
            qubits,
            ratio_bp: (ratio * 10_000.0).round().clamp(0.0, 65_535.0) as u32,
            trial,
        }
    }

    fn stream_id(&self) -> u64 {
        ((self.qubits as u64 & 0xff) << 56)
            | ((self.ratio_bp as u64 & 0xffff) << 40)
            | (self.trial & 0xff_ffff_ffff)
    }

    pub fn rng(&self) -> ChaCha20Rng {
        let mut key = [0u8; 32];
        let mut state = self.seed;
        for chunk in key.chunks_exact_mut(8) {
            chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
        }
        let mut rng = ChaCha20Rng::from_seed(key);
        rng.set_stream(self.stream_id());
        rng
    }
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Uniform draw on `[0, 1)` with 53 random bits.
pub fn unit_f64(rng: &mut impl RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Phase vector with entries i.i.d. uniform on `[0, 2π)`.
pub fn random_phases<T: Real>(key: &InstanceKey) -> Result<PhaseVector<T>> {
    if key.qubits == 0 || key.qubits > 30 {
        return Err(SynthError::InvalidArgument(format!(
            "qubit count {} out of range 1..=30",
            key.qubits
        )));
    }
    let mut rng = key.rng();
    let values = (0..1usize << key.qubits)
        .map(|_| T::lit(unit_f64(&mut rng) * std::f64::consts::TAU))
        .collect();
    PhaseVector::new(values)
}
