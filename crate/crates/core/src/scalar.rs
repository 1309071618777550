//! Floating-point scalar abstraction shared by every routine in the crate.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Real scalar the interpolation routines are generic over: `f32` or `f64`.
pub trait Scalar: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {
    /// Converts an `f64` literal into `Self`.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal representable in scalar type")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
