// Copyright 2026 The diagsynth Authors
// SPDX-License-Identifier: Apache-2.0

//! Scalar abstraction shared by every numeric module.

use std::fmt::{Debug, Display, LowerExp};
use std::str::FromStr;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real scalar the transforms, metrics and search are generic over.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + Debug
    + Display
    + LowerExp
    + FromStr
    + Default
    + Send
    + Sync
    + 'static
{
    /// Lossy conversion from `f64`, used for literals and configuration.
    fn lit(value: f64) -> Self;

    fn to_f64_lossy(self) -> f64;

    fn half() -> Self {
        Self::lit(0.5)
    }
}

macro_rules! impl_real {
    ($t:ty) => {
        impl Real for $t {
            #[inline]
            fn lit(value: f64) -> Self {
                value as $t
            }

            #[inline]
            fn to_f64_lossy(self) -> f64 {
                self as f64
            }
        }
    };
}

impl_real!(f32);
impl_real!(f64);

/// `1 / (1 + e^{-z})`.
#[inline]
pub fn logistic<T: Real>(z: T) -> T {
    T::one() / (T::one() + (-z).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn logistic_limits() {
        assert_eq!(logistic(0.0_f64), 0.5);
        assert!(logistic(40.0_f64) > 0.999_999);
        assert!(logistic(-40.0_f64) < 1e-15);
        assert_eq!(logistic(0.0_f32), 0.5);
    }
}
