use thiserror::Error;

/// Errors for construction and I/O paths. Axiom failures are never errors;
/// they are report entries.
#[derive(Debug, Error)]
pub enum FalgError {
    #[error("dimension mismatch in `{arg}`: expected {expected}, got {got}")]
    DimensionMismatch {
        arg: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("zero denominator in rational")]
    ZeroDenominator,

    #[error("cannot parse rational from {0:?}")]
    RationalParse(String),

    #[error("algebra dimension must be at least 1")]
    ZeroDimension,

    #[error("malformed {field}: {reason}")]
    Malformed { field: &'static str, reason: String },

    #[error("{side} input does not verify as an F-algebra (first failing axiom: {axiom})")]
    UnverifiedInput { side: &'static str, axiom: String },

    #[error("parity list is required and must contain only 0 or 1")]
    BadParity,

    #[error("unit of a super algebra must be even")]
    OddUnit,

    #[error("structure tensor `{tensor}` is not parity-homogeneous at entry ({i},{j},{k})")]
    InhomogeneousTensor {
        tensor: &'static str,
        i: usize,
        j: usize,
        k: usize,
    },

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("anchor image of section {section} fails the graded Leibniz test at basis pair ({i},{j})")]
    AnchorNotDerivation { section: usize, i: usize, j: usize },

    #[error("map is not in the span of the coordinate derivations")]
    NotInCoordinateSpan,

    #[error("function algebra carries no coordinate frame; it was not built as a superdomain")]
    MissingCoordinateFrame,

    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, FalgError>;
