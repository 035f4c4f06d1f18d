use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A graph exceeded the size limit of an operation.
    #[error("graph too large: {got} vertices, limit {limit}")]
    TooLarge { got: usize, limit: usize },

    /// A vertex index was out of range or arguments were not distinct.
    #[error("invalid vertex argument: {0}")]
    BadVertex(String),

    /// A graph6 string could not be decoded.
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    /// The shipped certificate data could not be read or parsed.
    #[error("certificate data error: {0}")]
    Data(String),

    /// No column permutation maps the computed table onto the shipped data.
    #[error("certificate data mismatch: {0}")]
    AlignMismatch(String),

    /// More than one column permutation fits; the shipped data has duplicate columns.
    #[error("alignment is ambiguous: duplicate columns {0:?}")]
    AlignAmbiguous(Vec<usize>),

    /// A parameter was outside the domain of the requested computation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The certificate failed to verify. This is the theorem-breaking signal.
    #[error("certificate verification failed: {0}")]
    Certificate(String),

    /// The optimization problem has no feasible point for the given parameters.
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
