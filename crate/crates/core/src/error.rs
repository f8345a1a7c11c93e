use thiserror::Error;

/// Errors produced across the screening/selection pipeline.
#[derive(Error, Debug)]
pub enum SqdaError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("dataset error: {0}")]
    Dataset(String),

    #[error("not a two-class problem: {0}")]
    NotTwoClass(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("degenerate class: class {class} has {count} samples, need at least 2")]
    DegenerateClass { class: u8, count: usize },

    #[error("degenerate transformed feature {feature}: within-class variance is zero")]
    DegenerateFeature { feature: usize },

    #[error("matrix is not positive definite")]
    NotPositiveDefinite,

    #[error("singular design on support")]
    SingularDesign,

    #[error("solver did not converge within {max_iter} iterations (residual {residual:.3e}, tol {tol:.3e})")]
    NotConverged {
        max_iter: usize,
        residual: f64,
        tol: f64,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("memory budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, SqdaError>;
