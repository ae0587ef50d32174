//! Scalar abstraction over the two working precisions.
//!
//! Training runs at f32; gradient verification against finite differences
//! only makes sense at f64, so everything numeric is generic over [`Scalar`].

use std::fmt;
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};

/// Floating-point element type of tensors: f32 or f64.
pub trait Scalar:
    Float + NumAssign + FromPrimitive + ToPrimitive + Sum + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Lossless-enough conversion from f64 literals and intermediate math.
    fn from_f64c(x: f64) -> Self {
        Self::from(x).expect("f64 -> scalar conversion")
    }

    /// Widen to f64 for mixed-precision helpers (metrics, IO, sampling).
    fn to_f64c(self) -> f64 {
        self.to_f64().expect("scalar -> f64 conversion")
    }

    /// Short name used in configs and diagnostics.
    fn precision_name() -> &'static str;
}

impl Scalar for f32 {
    fn precision_name() -> &'static str {
        "f32"
    }
}

impl Scalar for f64 {
    fn precision_name() -> &'static str {
        "f64"
    }
}
