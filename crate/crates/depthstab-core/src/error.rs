//! Error type shared across the crate.

use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed textual input, with the 1-based line it occurred on.
    Parse { line: usize, message: String },
    /// Structurally invalid object (loop edge, duplicate edge, empty ideal, ...).
    Validation(String),
    /// An argument outside the documented domain of an operation.
    Argument(String),
    /// A configured resource cap was exceeded; `need` is the size that was
    /// requested when the cap `limit` was hit.
    Resource {
        what: &'static str,
        limit: usize,
        need: usize,
    },
    /// Input outside the scope of an operation (e.g. a disconnected graph
    /// passed to a stabilization routine that assumes connectivity).
    Unsupported(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { line, message } => write!(f, "parse error on line {line}: {message}"),
            Error::Validation(m) => write!(f, "validation error: {m}"),
            Error::Argument(m) => write!(f, "argument error: {m}"),
            Error::Resource { what, limit, need } => {
                write!(f, "resource cap exceeded: {what} needs {need}, cap is {limit}")
            }
            Error::Unsupported(m) => write!(f, "unsupported input: {m}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
