use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported instance: {0}")]
    UnsupportedInstance(String),

    #[error("improper framework: configuration spans an affine subspace of dimension {span} < {dim}")]
    ImproperFramework { span: usize, dim: usize },

    #[error("degenerate instance: {0}")]
    DegenerateInstance(String),

    #[error("scans are not affinely rigid: corank {corank} exceeds {expected}")]
    NotAffinelyRigid { corank: usize, expected: usize },

    #[error("inconsistent scans: corank {corank} below {expected} at the requested tolerance")]
    InconsistentScans { corank: usize, expected: usize },

    #[error("length constraints lie on a conic at infinity; the Gram matrix is not unique")]
    NonUniqueGram,

    #[error("inconsistent lengths: fitted Gram matrix has eigenvalue {min_eigenvalue:e} below the PSD tolerance")]
    InconsistentLengths { min_eigenvalue: f64 },
}
