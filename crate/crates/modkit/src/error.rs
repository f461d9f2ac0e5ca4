use thiserror::Error;

/// Errors produced by parsing, module surgery, and guarded exact algorithms.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("graph too large for graph6 short form: n = {n} > 62")]
    UnsupportedSize { n: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what}: input size {actual} exceeds guard {limit} (pass force to override)")]
    Guard {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::Guard { .. })
    }
}

pub(crate) fn check_guard(what: &'static str, actual: usize, limit: usize, force: bool) -> Result<()> {
    if actual > limit && !force {
        Err(Error::Guard { what, limit, actual })
    } else {
        Ok(())
    }
}
