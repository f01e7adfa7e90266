use ndarray::Array3;

use crate::error::{Error, Result};
use crate::real::Real;

/// A channels × height × width floating-point image.
///
/// Image content lives in `[0, 1]`; intermediate network outputs may leave
/// that range and are only clipped when written to disk. Channel counts are
/// restricted to 1 (grayscale), 3 (RGB or CIELAB) and 4 (RGB + noise).
#[derive(Clone, Debug, PartialEq)]
pub struct ImageTensor<F = f32> {
    data: Array3<F>,
}

impl<F: Real> ImageTensor<F> {
    /// Wraps an array, validating the shape and that every value is finite.
    pub fn new(data: Array3<F>) -> Result<Self> {
        let (c, h, w) = data.dim();
        if !matches!(c, 1 | 3 | 4) {
            return Err(Error::invalid(format!(
                "image must have 1, 3 or 4 channels, got {c}"
            )));
        }
        if h == 0 || w == 0 {
            return Err(Error::invalid(format!("image must be non-empty, got {h}x{w}")));
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::invalid("image contains non-finite values"));
        }
        Ok(Self { data })
    }

    /// Wraps without validation. For internal use where the invariants are
    /// upheld by construction.
    pub(crate) fn wrap(data: Array3<F>) -> Self {
        debug_assert!(matches!(data.dim().0, 1 | 3 | 4));
        Self { data }
    }

    pub fn zeros(channels: usize, height: usize, width: usize) -> Self {
        Self {
            data: Array3::zeros((channels, height, width)),
        }
    }

    pub fn constant(channels: usize, height: usize, width: usize, value: F) -> Self {
        Self {
            data: Array3::from_elem((channels, height, width), value),
        }
    }

    pub fn from_shape_fn(
        channels: usize,
        height: usize,
        width: usize,
        f: impl FnMut((usize, usize, usize)) -> F,
    ) -> Self {
        Self {
            data: Array3::from_shape_fn((channels, height, width), f),
        }
    }

    pub fn channels(&self) -> usize {
        self.data.dim().0
    }

    pub fn height(&self) -> usize {
        self.data.dim().1
    }

    pub fn width(&self) -> usize {
        self.data.dim().2
    }

    pub fn data(&self) -> &Array3<F> {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut Array3<F> {
        &mut self.data
    }

    pub fn into_data(self) -> Array3<F> {
        self.data
    }

    pub fn min(&self) -> F {
        self.data.iter().copied().fold(F::infinity(), F::min)
    }

    pub fn max(&self) -> F {
        self.data.iter().copied().fold(F::neg_infinity(), F::max)
    }

    /// Clamps every value into `[lo, hi]`.
    pub fn clamp(mut self, lo: F, hi: F) -> Self {
        self.data.mapv_inplace(|v| v.max(lo).min(hi));
        self
    }

    /// Converts the scalar type, e.g. `f32` → `f64` for oracle tests.
    pub fn cast<G: Real>(&self) -> ImageTensor<G> {
        ImageTensor {
            data: self.data.mapv(|v| G::f(v.to_f64_())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_channel_counts() {
        assert!(ImageTensor::new(Array3::<f32>::zeros((2, 4, 4))).is_err());
        assert!(ImageTensor::new(Array3::<f32>::zeros((5, 4, 4))).is_err());
        assert!(ImageTensor::new(Array3::<f32>::zeros((3, 4, 4))).is_ok());
    }

    #[test]
    fn rejects_empty_and_non_finite() {
        assert!(ImageTensor::new(Array3::<f32>::zeros((3, 0, 4))).is_err());
        let mut bad = Array3::<f32>::zeros((3, 2, 2));
        bad[[0, 0, 0]] = f32::NAN;
        assert!(ImageTensor::new(bad).is_err());
    }

    #[test]
    fn clamp_bounds_values() {
        let img = ImageTensor::from_shape_fn(3, 2, 2, |(c, y, x)| (c + y + x) as f32 - 1.0);
        let clamped = img.clamp(0.0, 1.0);
        assert_eq!(clamped.min(), 0.0);
        assert_eq!(clamped.max(), 1.0);
    }
}
