use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors reported by graph construction, search, and serialization.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension {n} outside supported range [{min}, {max}]")]
    Dimension { n: usize, min: usize, max: usize },

    #[error("vertex mask {mask} out of range for Q_{n}")]
    VertexOutOfRange { mask: u32, n: usize },

    #[error("coordinate {dim} out of range for Q_{n}")]
    CoordinateOutOfRange { dim: usize, n: usize },

    #[error("[{a}, {b}] is not a hypercube edge (masks must differ in exactly one bit)")]
    NotAnEdge { a: u32, b: u32 },

    #[error("edge base {base} has bit {dim} set")]
    InvalidEdgeBase { base: u32, dim: usize },

    #[error("edge ({a}, {b}) is already present")]
    EdgeAlreadyPresent { a: u32, b: u32 },

    #[error("edge ({a}, {b}) is not present")]
    EdgeNotPresent { a: u32, b: u32 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("permutation is not a bijection on [0, {n})")]
    InvalidPermutation { n: usize },

    #[error("flip mask {flip} out of range for Q_{n}")]
    InvalidFlipMask { flip: u32, n: usize },

    #[error("double star parameters must both be at least 1, got ({k}, {l})")]
    InvalidPattern { k: usize, l: usize },

    #[error("input graph contains the balanced double star; repair requires a free input")]
    NotBalancedFree,

    #[error("exhaustive enumeration supports n <= {max}, got {n}")]
    EnumerationTooLarge { n: usize, max: usize },

    #[error("{path}: {message}")]
    Document { path: String, message: String },

    #[error("JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn document(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Document {
            path: path.into(),
            message: message.into(),
        }
    }
}
