//! Scalar abstractions shared by the library.
//!
//! Hypergraph algebra only needs a commutative ring with an ordering, so it
//! runs on integers and rationals as well as floats. Spectral dynamics and
//! state vectors need transcendental functions and an FFT backend, hence the
//! separate [`Real`] bound.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, Num};
use rustfft::FftNum;

/// Exact-or-float scalar for matrix and partition arithmetic.
pub trait Scalar: Num + Copy + PartialOrd + Debug + Display + Send + Sync + 'static {
    /// `n` as a sum of ones. Exact for every implementor.
    fn from_count(n: usize) -> Self {
        (0..n).fold(Self::zero(), |acc, _| acc + Self::one())
    }
}

impl<T> Scalar for T where T: Num + Copy + PartialOrd + Debug + Display + Send + Sync + 'static {}

/// Floating point scalar (`f32` or `f64`) for phase-space and qubit code.
pub trait Real: Scalar + Float + FloatConst + FftNum {
    /// Lossless for the small constants used throughout the crate.
    fn lit(x: f64) -> Self {
        <Self as num_traits::NumCast>::from(x).expect("constant representable in scalar type")
    }

    fn from_index(i: usize) -> Self {
        <Self as num_traits::NumCast>::from(i).expect("index representable in scalar type")
    }

    fn to_f64_lossy(self) -> f64 {
        <Self as num_traits::ToPrimitive>::to_f64(&self).unwrap_or(f64::NAN)
    }
}

impl<T> Real for T where T: Scalar + Float + FloatConst + FftNum {}

/// Absolute value without the `Float`/`Signed` method ambiguity.
#[inline]
pub(crate) fn abs<R: Real>(x: R) -> R {
    Float::abs(x)
}
