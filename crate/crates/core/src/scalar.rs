//! Scalar abstraction so the physics runs at any floating-point width.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar the whole crate is generic over (`f32` or `f64`).
///
/// Stated tolerances (1e-12 eigenvalue agreement, 1e-10 consistency checks)
/// are only meaningful at `f64`; `f32` instantiations are supported but
/// should be held to correspondingly looser bounds.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + Sum + Display + Debug + LowerExp + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Float + FromPrimitive + ToPrimitive + Sum + Display + Debug + LowerExp + Send + Sync + 'static
{
}

/// Shorthand for bringing an `f64` literal into the working scalar type.
#[inline]
pub fn lit<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("literal not representable in scalar type")
}

/// `x` as `f64` for diagnostics and error payloads.
#[inline]
pub fn as_f64<T: Scalar>(x: T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
