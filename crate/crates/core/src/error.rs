use crate::report::ValidationReport;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a Gel'fand-Dorfman bialgebra:\n{0}")]
    InvalidAlgebra(ValidationReport),
    #[error("extending datum fails its conditions:\n{0}")]
    InvalidDatum(ValidationReport),
    #[error("flag datum fails its conditions:\n{0}")]
    InvalidFlagDatum(ValidationReport),
    #[error("chosen basis vectors do not span a subalgebra: {0}")]
    NotASubalgebra(String),
    #[error("map is not invertible: {0}")]
    NotInvertible(String),
    #[error("search inconclusive: {0}")]
    SearchInconclusive(String),
    #[error("polynomial degree {0} exceeds the supported bound {1}")]
    DegreeBound(u32, u32),
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error("invalid parameters for {id}: {reason}")]
    InvalidParameters { id: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
