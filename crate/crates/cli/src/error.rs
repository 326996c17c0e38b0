use std::path::PathBuf;

use thiserror::Error;

/// Exit codes shared by every command.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 2;
    /// Flexible, false, or not affinely rigid.
    pub const NEGATIVE: i32 = 3;
    pub const INCONCLUSIVE: i32 = 4;
    pub const INCONSISTENT: i32 = 5;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}:{line}:{column}: {message}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Library(#[from] affine_rigidity::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use affine_rigidity::Error as E;
        match self {
            CliError::Parse { .. } | CliError::Io { .. } | CliError::Usage(_) => exit::USAGE,
            CliError::Library(e) => match e {
                E::InvalidInput(_) | E::UnsupportedInstance(_) | E::ImproperFramework { .. } => exit::USAGE,
                E::NotAffinelyRigid { .. } => exit::NEGATIVE,
                E::DegenerateInstance(_) | E::NonUniqueGram => exit::INCONCLUSIVE,
                E::InconsistentScans { .. } | E::InconsistentLengths { .. } => exit::INCONSISTENT,
            },
        }
    }
}
