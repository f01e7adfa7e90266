//! Gaussian filtering with reflection padding.

use ndarray::Array3;

use crate::error::{Error, Result};
use crate::imaging::ImageTensor;
use crate::real::Real;

/// A normalized, symmetric 1-D Gaussian kernel applied separably.
#[derive(Clone, Debug)]
pub struct GaussianKernel<F = f32> {
    size: usize,
    sigma: F,
    weights: Vec<F>,
}

impl<F: Real> GaussianKernel<F> {
    pub fn new(size: usize, sigma: F) -> Result<Self> {
        if size == 0 || size % 2 == 0 {
            return Err(Error::invalid(format!(
                "gaussian kernel size must be odd and positive, got {size}"
            )));
        }
        if sigma <= F::zero() {
            return Err(Error::invalid("gaussian sigma must be positive"));
        }
        let r = (size / 2) as isize;
        let s2 = sigma.to_f64_() * sigma.to_f64_();
        let mut weights: Vec<f64> = (-r..=r)
            .map(|i| (-((i * i) as f64) / (2.0 * s2)).exp())
            .collect();
        let sum: f64 = weights.iter().sum();
        for w in &mut weights {
            *w /= sum;
        }
        Ok(Self {
            size,
            sigma,
            weights: weights.into_iter().map(F::f).collect(),
        })
    }

    /// The blur used by the color loss: size 7, sigma 3.
    pub fn color_loss_default() -> Self {
        Self::new(7, F::f(3.0)).expect("fixed parameters are valid")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn sigma(&self) -> F {
        self.sigma
    }

    pub fn weights(&self) -> &[F] {
        &self.weights
    }
}

/// Symmetric reflection: `-1 -> 0`, `n -> n-1`. Handles kernels wider than
/// the image by folding repeatedly.
#[inline]
fn reflect(mut i: isize, n: isize) -> usize {
    loop {
        if i < 0 {
            i = -i - 1;
        } else if i >= n {
            i = 2 * n - 1 - i;
        } else {
            return i as usize;
        }
    }
}

fn blur_axis<F: Real>(src: &Array3<F>, weights: &[F], axis_h: bool) -> Array3<F> {
    let (c, h, w) = src.dim();
    let r = (weights.len() / 2) as isize;
    let mut out = Array3::<F>::zeros((c, h, w));
    for ci in 0..c {
        for y in 0..h {
            for x in 0..w {
                let mut acc = F::zero();
                for (t, &wk) in weights.iter().enumerate() {
                    let off = t as isize - r;
                    let v = if axis_h {
                        src[[ci, reflect(y as isize + off, h as isize), x]]
                    } else {
                        src[[ci, y, reflect(x as isize + off, w as isize)]]
                    };
                    acc = acc + wk * v;
                }
                out[[ci, y, x]] = acc;
            }
        }
    }
    out
}

fn blur_axis_adjoint<F: Real>(grad: &Array3<F>, weights: &[F], axis_h: bool) -> Array3<F> {
    let (c, h, w) = grad.dim();
    let r = (weights.len() / 2) as isize;
    let mut out = Array3::<F>::zeros((c, h, w));
    for ci in 0..c {
        for y in 0..h {
            for x in 0..w {
                let g = grad[[ci, y, x]];
                for (t, &wk) in weights.iter().enumerate() {
                    let off = t as isize - r;
                    if axis_h {
                        out[[ci, reflect(y as isize + off, h as isize), x]] =
                            out[[ci, reflect(y as isize + off, h as isize), x]] + wk * g;
                    } else {
                        out[[ci, y, reflect(x as isize + off, w as isize)]] =
                            out[[ci, y, reflect(x as isize + off, w as isize)]] + wk * g;
                    }
                }
            }
        }
    }
    out
}

pub(crate) fn blur_array<F: Real>(x: &Array3<F>, kernel: &GaussianKernel<F>) -> Array3<F> {
    let tmp = blur_axis(x, kernel.weights(), true);
    blur_axis(&tmp, kernel.weights(), false)
}

/// Adjoint (transpose) of [`blur_array`] as a linear operator, needed for
/// gradients through the color loss. Not the same as blurring again: the
/// reflection padding makes the operator non-symmetric near borders.
pub(crate) fn blur_adjoint_array<F: Real>(g: &Array3<F>, kernel: &GaussianKernel<F>) -> Array3<F> {
    let tmp = blur_axis_adjoint(g, kernel.weights(), false);
    blur_axis_adjoint(&tmp, kernel.weights(), true)
}

/// Blurs every channel with the given kernel, reflection-padded at borders.
pub fn gaussian_blur<F: Real>(img: &ImageTensor<F>, kernel: &GaussianKernel<F>) -> ImageTensor<F> {
    ImageTensor::wrap(blur_array(img.data(), kernel))
}

/// Applies the transpose of the blur operator; see [`blur_adjoint_array`].
pub fn gaussian_blur_adjoint<F: Real>(
    img: &ImageTensor<F>,
    kernel: &GaussianKernel<F>,
) -> ImageTensor<F> {
    ImageTensor::wrap(blur_adjoint_array(img.data(), kernel))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::Array3;
    use rand::{Rng, SeedableRng};

    #[test]
    fn even_kernel_size_rejected() {
        assert!(GaussianKernel::<f64>::new(6, 3.0).is_err());
        assert!(GaussianKernel::<f64>::new(0, 3.0).is_err());
        assert!(GaussianKernel::<f64>::new(7, -1.0).is_err());
    }

    #[test]
    fn weights_sum_to_one_and_are_symmetric() {
        let k = GaussianKernel::<f64>::new(7, 3.0).unwrap();
        let sum: f64 = k.weights().iter().sum();
        assert!((sum - 1.0).abs() < 1e-12);
        for i in 0..k.size() {
            assert!((k.weights()[i] - k.weights()[k.size() - 1 - i]).abs() < 1e-15);
        }
    }

    #[test]
    fn constant_image_is_fixed_point() {
        let img = ImageTensor::<f64>::constant(3, 9, 11, 0.37);
        let k = GaussianKernel::new(7, 3.0).unwrap();
        let out = gaussian_blur(&img, &k);
        for v in out.data().iter() {
            assert!((v - 0.37).abs() < 1e-12);
        }
    }

    #[test]
    fn impulse_center_equals_kernel_center_weight() {
        // Explicit kernel evaluation oracle: the separable kernel's 2-D center
        // weight is w[r]^2.
        let k = GaussianKernel::<f64>::new(7, 3.0).unwrap();
        let center_weight = k.weights()[3] * k.weights()[3];

        let mut data = Array3::zeros((1, 15, 15));
        data[[0, 7, 7]] = 1.0;
        let img = ImageTensor::new(data).unwrap();
        let out = gaussian_blur(&img, &k);
        assert!((out.data()[[0, 7, 7]] - center_weight).abs() < 1e-12);
    }

    #[test]
    fn size_one_kernel_is_identity() {
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(3);
        let img = ImageTensor::<f64>::from_shape_fn(3, 8, 8, |_| rng.gen());
        let k = GaussianKernel::new(1, 1.0).unwrap();
        let out = gaussian_blur(&img, &k);
        assert_eq!(out.data(), img.data());
    }

    #[test]
    fn blur_is_linear() {
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(11);
        let a = ImageTensor::<f64>::from_shape_fn(3, 10, 12, |_| rng.gen());
        let b = ImageTensor::<f64>::from_shape_fn(3, 10, 12, |_| rng.gen());
        let k = GaussianKernel::new(5, 1.5).unwrap();

        let combo = ImageTensor::new(a.data() * 0.7 + b.data() * 1.9).unwrap();
        let lhs = gaussian_blur(&combo, &k);
        let rhs = gaussian_blur(&a, &k).data() * 0.7 + gaussian_blur(&b, &k).data() * 1.9;
        for (l, r) in lhs.data().iter().zip(rhs.iter()) {
            assert!((l - r).abs() < 1e-12);
        }
    }

    #[test]
    fn mean_preserved_on_interior_dominated_image() {
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(5);
        let img = ImageTensor::<f64>::from_shape_fn(3, 64, 64, |_| rng.gen());
        let k = GaussianKernel::new(7, 3.0).unwrap();
        let out = gaussian_blur(&img, &k);
        let mean_in: f64 = img.data().iter().sum::<f64>() / img.data().len() as f64;
        let mean_out: f64 = out.data().iter().sum::<f64>() / out.data().len() as f64;
        assert!((mean_in - mean_out).abs() < 1e-4);
    }

    #[test]
    fn adjoint_matches_inner_product_identity() {
        // <B x, y> == <x, B^T y> for random x, y.
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(17);
        let x = Array3::<f64>::from_shape_fn((3, 9, 7), |_| rng.gen::<f64>());
        let y = Array3::<f64>::from_shape_fn((3, 9, 7), |_| rng.gen::<f64>());
        let k = GaussianKernel::new(7, 3.0).unwrap();
        let bx = blur_array(&x, &k);
        let bty = blur_adjoint_array(&y, &k);
        let lhs: f64 = bx.iter().zip(y.iter()).map(|(a, b)| a * b).sum();
        let rhs: f64 = x.iter().zip(bty.iter()).map(|(a, b)| a * b).sum();
        assert!((lhs - rhs).abs() < 1e-10, "lhs {lhs} rhs {rhs}");
    }
}
