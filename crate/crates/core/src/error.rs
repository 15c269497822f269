use thiserror::Error;

/// Errors shared by every operation in this crate.
///
/// All arithmetic is exact 64-bit; anything that would wrap reports
/// [`Error::Overflow`] instead of silently producing a wrong count.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("set must not be empty")]
    EmptySet,

    #[error("duplicate element {0} in set literal")]
    DuplicateElement(i64),

    #[error("elements not strictly increasing near {0}")]
    NotSorted(i64),

    #[error("{0}")]
    Domain(String),

    #[error("enumeration guard exceeded: {estimate} candidates > limit {limit}")]
    GuardExceeded { estimate: u64, limit: u64 },

    #[error("h = {h} exceeds the verification cap {cap}")]
    CapExceeded { h: u32, cap: u32 },

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
