//! Scalar abstraction for index arithmetic.
//!
//! Every index relation and closed form is written once against [`Scalar`]
//! and instantiated either exactly ([`crate::Rational`]) or approximately
//! (`f64`, `f32`). Verification always runs on the exact instantiation.

use std::fmt::Debug;

use num_traits::{FromPrimitive, Num};

/// A field-like number type the index formulas can be evaluated in.
pub trait Scalar: Num + FromPrimitive + Clone + PartialEq + Debug {
    /// Lifts an unsigned count into the scalar type.
    fn from_count(value: u64) -> Self {
        Self::from_u64(value).expect("every scalar type represents u64 counts")
    }

    /// Lifts a signed integer constant into the scalar type.
    fn from_int(value: i64) -> Self {
        Self::from_i64(value).expect("every scalar type represents i64 constants")
    }

    /// `numer / denom`, evaluated in the scalar type.
    fn ratio(numer: i64, denom: i64) -> Self {
        Self::from_int(numer) / Self::from_int(denom)
    }
}

impl<T> Scalar for T where T: Num + FromPrimitive + Clone + PartialEq + Debug {}

/// `base^exp` by repeated multiplication; only small exponents occur here.
pub(crate) fn powi<T: Scalar>(base: &T, exp: u32) -> T {
    let mut acc = T::one();
    for _ in 0..exp {
        acc = acc * base.clone();
    }
    acc
}
