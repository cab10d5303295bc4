use thiserror::Error;

/// Errors raised while building, querying or parsing argumentation frameworks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument `{0}` is declared more than once")]
    DuplicateArgument(String),
    #[error("attack endpoint `{0}` is not a declared argument")]
    UnknownEndpoint(String),
    #[error("argument names must be nonempty")]
    EmptyName,
    #[error("argument set belongs to a different framework")]
    FrameworkMismatch,
    #[error("unknown argument `{0}`")]
    UnknownArgument(String),
    #[error("framework has {size} arguments, above the enumeration bound of {bound}")]
    TooLarge { size: usize, bound: usize },
    #[error("framework has {0} arguments; the brute-force oracle is capped at 16")]
    TooLargeForOracle(usize),
    #[error("justification is not defined for {0} semantics")]
    UnsupportedSemantics(&'static str),
    #[error("`{0}` is not monotone and cannot be iterated to a fixed point")]
    NotMonotone(&'static str),
    #[error("TGF input has no `#` line separating nodes from edges")]
    MissingSeparator,
    #[error("malformed line {0}")]
    MalformedLine(usize),
    #[error("malformed fact on line {0}")]
    MalformedFact(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
