//! Floating-point scalar abstraction used throughout the crate.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar the solvers are generic over: `f32` or `f64`.
///
/// Tolerances quoted in the crate documentation assume `f64`; `f32`
/// instantiations compile and run but cannot reach them.
pub trait Scalar:
    Float + FromPrimitive + Sum<Self> + Debug + Display + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Float + FromPrimitive + Sum<T> + Debug + Display + Send + Sync + 'static
{
}

/// Shorthand for embedding an `f64` literal into the working scalar type.
#[inline]
pub(crate) fn fl<S: Scalar>(x: f64) -> S {
    S::from_f64(x).expect("f64 literal must embed into the scalar type")
}

/// `1/2` in the working scalar type, used pervasively by oscillator formulas.
#[inline]
pub(crate) fn half<S: Scalar>() -> S {
    fl(0.5)
}
