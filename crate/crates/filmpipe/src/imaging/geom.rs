//! Cropping and bilinear resizing.

use ndarray::{s, Array3};

use crate::error::{Error, Result};
use crate::imaging::ImageTensor;
use crate::real::Real;

/// Copies the window starting at `(top, left)` with size `h × w`.
pub fn crop<F: Real>(
    img: &ImageTensor<F>,
    top: usize,
    left: usize,
    h: usize,
    w: usize,
) -> Result<ImageTensor<F>> {
    if h == 0 || w == 0 {
        return Err(Error::invalid("crop window must be non-empty"));
    }
    if top + h > img.height() || left + w > img.width() {
        return Err(Error::invalid(format!(
            "crop window {top},{left} size {h}x{w} exceeds image {}x{}",
            img.height(),
            img.width()
        )));
    }
    let view = img.data().slice(s![.., top..top + h, left..left + w]);
    Ok(ImageTensor::wrap(view.to_owned()))
}

/// Bilinear resize with the half-pixel (corner-aligned-false) convention:
/// source coordinate = (dst + 0.5) * (src_len / dst_len) - 0.5, clamped.
///
/// Output values stay inside the input's value range because bilinear
/// sampling is a convex combination.
pub fn resize_bilinear<F: Real>(
    img: &ImageTensor<F>,
    out_h: usize,
    out_w: usize,
) -> Result<ImageTensor<F>> {
    if out_h == 0 || out_w == 0 {
        return Err(Error::invalid("resize target dimensions must be positive"));
    }
    let (c, h, w) = img.data().dim();
    if (h, w) == (out_h, out_w) {
        return Ok(img.clone());
    }
    let scale_y = h as f64 / out_h as f64;
    let scale_x = w as f64 / out_w as f64;
    let mut out = Array3::<F>::zeros((c, out_h, out_w));

    for oy in 0..out_h {
        let sy = ((oy as f64 + 0.5) * scale_y - 0.5).clamp(0.0, (h - 1) as f64);
        let y0 = sy.floor() as usize;
        let y1 = (y0 + 1).min(h - 1);
        let fy = F::f(sy - y0 as f64);
        for ox in 0..out_w {
            let sx = ((ox as f64 + 0.5) * scale_x - 0.5).clamp(0.0, (w - 1) as f64);
            let x0 = sx.floor() as usize;
            let x1 = (x0 + 1).min(w - 1);
            let fx = F::f(sx - x0 as f64);
            for ci in 0..c {
                let tl = img.data()[[ci, y0, x0]];
                let tr = img.data()[[ci, y0, x1]];
                let bl = img.data()[[ci, y1, x0]];
                let br = img.data()[[ci, y1, x1]];
                let top = tl + (tr - tl) * fx;
                let bot = bl + (br - bl) * fx;
                out[[ci, oy, ox]] = top + (bot - top) * fy;
            }
        }
    }
    Ok(ImageTensor::wrap(out))
}
