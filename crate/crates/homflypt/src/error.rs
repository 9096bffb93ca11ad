use thiserror::Error;

/// Crate-wide error type.
///
/// Variants are grouped by how the CLI maps them to exit codes: resource
/// refusals are distinct from invalid input, which is distinct from a
/// negative check verdict (the latter is not an error at all).
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("p must be an odd prime, got {0}")]
    NotOddPrime(u64),

    #[error("polynomial parse error: {0}")]
    PolyParse(String),

    #[error("diagram parse error: {0}")]
    DiagramParse(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("braid parse error: {0}")]
    BraidParse(String),

    #[error("{what} out of range: {got} (limit {limit})")]
    OutOfRange {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("not divisible by {divisor}: remainder {remainder}")]
    NotDivisible { divisor: String, remainder: String },

    #[error("crossing count {crossings} exceeds limit {limit}; raise the limit to proceed")]
    Resource { crossings: usize, limit: usize },

    #[error("factor braid is not strongly periodic for p={p}: cycle lengths {cycles:?}")]
    NotStronglyPeriodic { p: u64, cycles: Vec<usize> },

    #[error("corpus error: {0}")]
    Corpus(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Resource refusals get their own CLI exit code.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. })
    }
}
