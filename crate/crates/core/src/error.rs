use thiserror::Error;

/// Rejections raised while validating a mesh.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MeshError {
    #[error("a mesh needs at least 2 points, got {0}")]
    TooFewPoints(usize),
    #[error("mesh has {points} abscissae but {values} values")]
    LengthMismatch { points: usize, values: usize },
    #[error("abscissae must be strictly increasing (violated at index {index})")]
    NotIncreasing { index: usize },
    #[error("non-finite abscissa or value at index {index}")]
    NonFinite { index: usize },
}

/// Errors returned by the interpolation entry points.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum InterpError {
    #[error(transparent)]
    Mesh(#[from] MeshError),
    #[error("query {x} lies outside the mesh domain [{lo}, {hi}]")]
    OutOfDomain { x: f64, lo: f64, hi: f64 },
    #[error("target degree must be at least 1")]
    InvalidDegree,
    #[error("epsilon must be finite and non-negative, got {0}")]
    InvalidEpsilon(f64),
    #[error("grid values have {got} entries, expected {rows} x {cols}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        got: usize,
    },
    #[error("unknown method `{0}` (expected dbi, ppi, pchip or linear)")]
    UnknownMethod(String),
}
