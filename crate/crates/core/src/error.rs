use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("not a partition: {0:?} (parts must be non-negative and weakly decreasing)")]
    NotAPartition(Vec<i64>),

    #[error("shape has height {height}, which exceeds r = {r}")]
    HeightExceedsR { height: usize, r: usize },

    #[error("shape has height {0}; the A2 formula only handles height <= 3")]
    HeightExceedsThree(usize),

    #[error("expected a point with {expected} coordinates, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("support at {point:?} leaves the box with coordinate bound {bound}")]
    BoxOverflow { point: Vec<i64>, bound: i64 },

    #[error("exact division failed in closed form for {0}")]
    InternalNonInteger(String),

    #[error("Fourier sum residual {residual:e} is not below tolerance {tolerance:e}")]
    ToleranceExceeded { residual: f64, tolerance: f64 },

    #[error("n = {n} exceeds the double-precision budget of {max} for the Fourier formula")]
    PrecisionBudget { n: usize, max: usize },

    #[error("shape of size {size} exceeds the enumeration cap {cap}")]
    ShapeTooLarge { size: usize, cap: usize },

    #[error("{0}")]
    InvalidArgument(String),
}
