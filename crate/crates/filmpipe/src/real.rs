//! Floating-point abstraction so the numeric pipeline can run in `f32`
//! (training speed) or `f64` (oracle and gradient checks).

use ndarray::NdFloat;
use num_traits::FromPrimitive;
use rand::distributions::uniform::SampleUniform;

/// The scalar type used throughout the pipeline. Implemented for `f32` and `f64`.
pub trait Real: NdFloat + FromPrimitive + SampleUniform + std::iter::Sum<Self> {
    /// Shorthand for converting an `f64` literal.
    #[inline]
    fn f(x: f64) -> Self {
        Self::from_f64(x).expect("finite literal")
    }

    #[inline]
    fn to_f64_(self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self).expect("real scalar")
    }
}

impl Real for f32 {}
impl Real for f64 {}
