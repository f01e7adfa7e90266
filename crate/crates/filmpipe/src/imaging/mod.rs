//! Foundational image representation plus the color, filtering and
//! geometry primitives the rest of the pipeline is built from.

mod color;
mod filter;
mod geom;
mod io;
mod tensor;

pub use color::{lab_to_rgb, rgb_to_grayscale, rgb_to_lab};
pub use filter::{gaussian_blur, gaussian_blur_adjoint, GaussianKernel};
pub use geom::{crop, resize_bilinear};
pub use io::{load_image, save_image};
pub use tensor::ImageTensor;
