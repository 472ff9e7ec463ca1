/// Errors reported by the library.
///
/// Dimension mismatches between values that are already well-formed (e.g.
/// taking the distance of two truth tables with different variable counts)
/// are programming errors and panic instead.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Malformed textual input (binary/hex truth table, ANF expression).
    #[error("parse error: {0}")]
    Parse(String),

    /// An argument outside its documented domain (t out of range, q not
    /// prime, variable index out of range, ...).
    #[error("invalid argument: {0}")]
    Invalid(String),

    /// The request exceeds a hard size guard of the chosen algorithm.
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    /// Lookup of a nonlinearity method that is not registered.
    #[error("unknown method `{0}` (available: {1})")]
    UnknownMethod(String, String),
}

pub type Result<T> = std::result::Result<T, Error>;
