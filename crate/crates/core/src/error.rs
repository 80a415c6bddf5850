use thiserror::Error;

use crate::spectral::SpectralResult;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied argument violates an operation's precondition.
    #[error("invalid input: {0}")]
    Input(String),

    /// The request is well formed but exceeds what the implementation handles
    /// (vertex caps, search budgets).
    #[error("capability exceeded: {0}")]
    Capability(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// Power iteration hit its iteration cap; the best iterate is attached.
    #[error("spectral iteration did not converge after {} iterations (residual {:.3e})", .best.iterations, .best.residual)]
    Convergence { best: Box<SpectralResult> },

    #[error("partition is not equitable: vertex {vertex} has {found} neighbours in class {class}, expected {expected}")]
    NotEquitable {
        vertex: usize,
        class: usize,
        found: usize,
        expected: usize,
    },

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn capability(msg: impl Into<String>) -> Self {
        Error::Capability(msg.into())
    }

    pub(crate) fn parse(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: msg.into(),
        }
    }
}
