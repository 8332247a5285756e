use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value exceeds the supported magnitude: {0}")]
    Overflow(String),
    #[error("{r} and {q} are not coprime")]
    NotCoprime { r: u128, q: u128 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("vertex {0} not found")]
    VertexNotFound(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(String),
    #[error("graph has more than {0} vertices")]
    TooManyVertices(usize),
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    #[error("full prime graph of {id} is unknown; {bound}")]
    FullGraphUnknown { id: String, bound: String },
    #[error("{0} not found in catalog")]
    NotFound(String),
    #[error("prime {0} is neither fixing nor avoiding and its adjacency to the characteristic is undetermined")]
    AmbiguousPrime(String),
    #[error("conflict: {0}")]
    Conflict(String),
    #[error("{value} is not divisible by {p}")]
    NotIntegral { p: u64, value: i64 },
    #[error("negative fixed-point dimension {0}")]
    Negative(i64),
    #[error("{target}: witness graph is not isomorphic ({invariant})")]
    NotIsomorphic { target: String, invariant: String },
    #[error("missing fact for {subject} in characteristic {characteristic}")]
    MissingFact {
        subject: String,
        characteristic: String,
    },
    #[error("unsupported recognition target {0}")]
    UnsupportedTarget(String),
    #[error("candidate {candidate} survives for {target}")]
    CandidateSurvives { target: String, candidate: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("catalog error: {0}")]
    Catalog(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
