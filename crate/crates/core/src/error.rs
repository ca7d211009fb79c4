//! Error vocabulary shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("index {index} lies outside the {ambient} index set")]
    IndexOutsideAmbient { ambient: &'static str, index: i64 },
    #[error("empty window: a product needs length at least 1")]
    EmptyWindow,
    #[error("negative horizon {0}")]
    NegativeHorizon(i64),
    #[error("invalid weight specification: {0}")]
    InvalidSpec(String),
    #[error("invalid vector: {0}")]
    InvalidVector(String),
    #[error("operation requires a unilateral index set")]
    RequiresUnilateral,
    #[error("operation requires a bilateral index set")]
    RequiresBilateral,
    #[error("operands live over different index sets")]
    AmbientMismatch,
    #[error("unsupported representation: {0}")]
    UnsupportedRepresentation(String),
    #[error("power {n} is below the witness support shift {n0}")]
    PowerBelowSupportShift { n: u64, n0: i64 },
    #[error("no growth certificate within window horizon {horizon}")]
    NoCertificate { horizon: u64 },
    #[error("inconclusive parameters: {0}")]
    InconclusiveParameters(String),
    #[error("{0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("diagonal step {m}: {reason}")]
    DiagonalStep { m: u64, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
