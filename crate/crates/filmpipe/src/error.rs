//! Crate-wide error type.

use std::path::PathBuf;
use thiserror::Error;

/// Errors produced anywhere in the pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated an operation's precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A pair could not be aligned (too few keypoints, matches or inliers).
    #[error("alignment infeasible: {0}")]
    AlignmentInfeasible(String),

    /// The VGG feature extractor was requested but its weights are missing.
    #[error("feature extractor unavailable: {0}")]
    ExtractorUnavailable(String),

    /// A learned metric (LPIPS / PieApp) was requested but its weights are missing.
    #[error("scorer unavailable: {0}")]
    ScorerUnavailable(String),

    /// Bad experiment configuration (unknown loss name, channel mismatch, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// Malformed or mismatched checkpoint / weights file.
    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    /// A loss term became NaN or infinite during training.
    #[error("non-finite loss: {0}")]
    NonFiniteLoss(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("image codec error: {0}")]
    Image(#[from] image::ImageError),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
