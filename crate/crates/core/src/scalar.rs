//! The floating-point scalar the geometric code is generic over.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_traits::{Float, FloatConst, FromPrimitive};

/// Real scalar used for coordinates; implemented for `f32` and `f64`.
pub trait Scalar: Float + FloatConst + FromPrimitive + FromStr + Debug + Display + Send + Sync + 'static {
    /// Absolute comparison tolerance suitable for the magnitudes in this crate.
    fn default_tol() -> Self;

    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("representable constant")
    }
}

impl Scalar for f64 {
    fn default_tol() -> Self {
        1e-9
    }
}

impl Scalar for f32 {
    fn default_tol() -> Self {
        1e-4
    }
}
