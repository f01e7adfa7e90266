//! sRGB ↔ CIELAB conversion (D65 white point, sRGB transfer function).

use ndarray::Array3;

use crate::error::{Error, Result};
use crate::imaging::ImageTensor;
use crate::real::Real;

// D65 reference white in XYZ, Y normalized to 1.
const WHITE_X: f64 = 0.95047;
const WHITE_Y: f64 = 1.0;
const WHITE_Z: f64 = 1.08883;

const EPSILON: f64 = 216.0 / 24389.0; // (6/29)^3
const KAPPA: f64 = 24389.0 / 27.0;

fn srgb_to_linear(c: f64) -> f64 {
    if c <= 0.04045 {
        c / 12.92
    } else {
        ((c + 0.055) / 1.055).powf(2.4)
    }
}

fn linear_to_srgb(c: f64) -> f64 {
    if c <= 0.0031308 {
        12.92 * c
    } else {
        1.055 * c.powf(1.0 / 2.4) - 0.055
    }
}

fn lab_f(t: f64) -> f64 {
    if t > EPSILON {
        t.cbrt()
    } else {
        (KAPPA * t + 16.0) / 116.0
    }
}

fn lab_f_inv(t: f64) -> f64 {
    let t3 = t * t * t;
    if t3 > EPSILON {
        t3
    } else {
        (116.0 * t - 16.0) / KAPPA
    }
}

pub(crate) fn rgb_pixel_to_lab(r: f64, g: f64, b: f64) -> (f64, f64, f64) {
    let (rl, gl, bl) = (srgb_to_linear(r), srgb_to_linear(g), srgb_to_linear(b));
    let x = 0.4124564 * rl + 0.3575761 * gl + 0.1804375 * bl;
    let y = 0.2126729 * rl + 0.7151522 * gl + 0.0721750 * bl;
    let z = 0.0193339 * rl + 0.1191920 * gl + 0.9503041 * bl;

    let (fx, fy, fz) = (lab_f(x / WHITE_X), lab_f(y / WHITE_Y), lab_f(z / WHITE_Z));
    let l = 116.0 * fy - 16.0;
    let a = 500.0 * (fx - fy);
    let b = 200.0 * (fy - fz);
    (l, a, b)
}

pub(crate) fn lab_pixel_to_rgb(l: f64, a: f64, b: f64) -> (f64, f64, f64) {
    let fy = (l + 16.0) / 116.0;
    let fx = fy + a / 500.0;
    let fz = fy - b / 200.0;

    let x = lab_f_inv(fx) * WHITE_X;
    let y = lab_f_inv(fy) * WHITE_Y;
    let z = lab_f_inv(fz) * WHITE_Z;

    let rl = 3.2404542 * x - 1.5371385 * y - 0.4985314 * z;
    let gl = -0.9692660 * x + 1.8760108 * y + 0.0415560 * z;
    let bl = 0.0556434 * x - 0.2040259 * y + 1.0572252 * z;

    (
        linear_to_srgb(rl.clamp(0.0, 1.0)),
        linear_to_srgb(gl.clamp(0.0, 1.0)),
        linear_to_srgb(bl.clamp(0.0, 1.0)),
    )
}

fn expect_rgb<F: Real>(img: &ImageTensor<F>, op: &str) -> Result<()> {
    if img.channels() != 3 {
        return Err(Error::invalid(format!(
            "{op} expects a 3-channel image, got {} channels",
            img.channels()
        )));
    }
    Ok(())
}

/// Converts an sRGB image in `[0,1]` to CIELAB. Channel 0 is L in `[0,100]`.
pub fn rgb_to_lab<F: Real>(img: &ImageTensor<F>) -> Result<ImageTensor<F>> {
    expect_rgb(img, "rgb_to_lab")?;
    let (_, h, w) = img.data().dim();
    let mut out = Array3::<F>::zeros((3, h, w));
    for y in 0..h {
        for x in 0..w {
            let (l, a, b) = rgb_pixel_to_lab(
                img.data()[[0, y, x]].to_f64_(),
                img.data()[[1, y, x]].to_f64_(),
                img.data()[[2, y, x]].to_f64_(),
            );
            out[[0, y, x]] = F::f(l);
            out[[1, y, x]] = F::f(a);
            out[[2, y, x]] = F::f(b);
        }
    }
    Ok(ImageTensor::wrap(out))
}

/// Inverse of [`rgb_to_lab`]. Out-of-gamut values are clipped, so the
/// round trip is exact only up to 2/255 per channel.
pub fn lab_to_rgb<F: Real>(img: &ImageTensor<F>) -> Result<ImageTensor<F>> {
    expect_rgb(img, "lab_to_rgb")?;
    let (_, h, w) = img.data().dim();
    let mut out = Array3::<F>::zeros((3, h, w));
    for y in 0..h {
        for x in 0..w {
            let (r, g, b) = lab_pixel_to_rgb(
                img.data()[[0, y, x]].to_f64_(),
                img.data()[[1, y, x]].to_f64_(),
                img.data()[[2, y, x]].to_f64_(),
            );
            out[[0, y, x]] = F::f(r.clamp(0.0, 1.0));
            out[[1, y, x]] = F::f(g.clamp(0.0, 1.0));
            out[[2, y, x]] = F::f(b.clamp(0.0, 1.0));
        }
    }
    Ok(ImageTensor::wrap(out))
}

/// BT.601 luma, used for keypoint detection.
pub fn rgb_to_grayscale<F: Real>(img: &ImageTensor<F>) -> Result<ImageTensor<F>> {
    expect_rgb(img, "rgb_to_grayscale")?;
    let (_, h, w) = img.data().dim();
    let (wr, wg, wb) = (F::f(0.299), F::f(0.587), F::f(0.114));
    let mut out = Array3::<F>::zeros((1, h, w));
    for y in 0..h {
        for x in 0..w {
            out[[0, y, x]] = wr * img.data()[[0, y, x]]
                + wg * img.data()[[1, y, x]]
                + wb * img.data()[[2, y, x]];
        }
    }
    Ok(ImageTensor::wrap(out))
}
