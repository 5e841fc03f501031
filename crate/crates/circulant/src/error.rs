use thiserror::Error;

/// Errors produced by the toolkit.
///
/// Domain violations are reported through this enum rather than panics so
/// that callers (in particular the CLI) can map them to exit codes.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A raw generator reduced to 0 modulo n, which would be a self-loop.
    #[error("generator {value} is congruent to 0 modulo {n}")]
    InvalidGenerator { value: i64, n: u32 },

    /// No generators were supplied.
    #[error("connection set is empty")]
    EmptySet,

    /// The group order is too small to carry the requested structure.
    #[error("order {0} is degenerate for this construction")]
    DegenerateOrder(u32),

    /// Multiplier is not invertible modulo n.
    #[error("{r} is not a unit modulo {n}")]
    NotAUnit { r: i64, n: u32 },

    /// Cartesian factors must have coprime orders.
    #[error("orders {0} and {1} are not coprime")]
    NotCoprime(u32, u32),

    /// Cartesian factors must be connected.
    #[error("factor of order {0} is disconnected")]
    DisconnectedFactor(u32),

    /// The power construction requires an odd base.
    #[error("power construction requires an odd base, got {0}")]
    EvenBase(u32),

    /// A constructed order exceeds the representable cap of 2³¹ − 1.
    #[error("order {0} exceeds the representable cap")]
    OrderOverflow(u64),

    /// Odd degree forces the half generator n/2, so n must be even.
    #[error("degree {degree} is odd, which requires an even order, got {n}")]
    ParityError { n: u32, degree: u32 },

    /// The exhaustive oracle refuses unreasonably large candidate spaces.
    #[error("candidate space of {candidates} sets exceeds the oracle limit {limit}")]
    TooLarge { candidates: u128, limit: u128 },

    /// A record update was attempted with an entry that does not verify.
    #[error("record entry for degree {degree}, diameter {diameter} does not verify")]
    RejectedUnverified { degree: u32, diameter: u32 },

    /// Algorithm 2 ran out of candidates or budget without a coprime pair.
    #[error("no coprime product found for degree {degree}, diameter {diameter}")]
    NoProductFound { degree: u32, diameter: u32 },

    /// Least-squares design matrix is rank deficient.
    #[error("singular fit: {0}")]
    SingularFit(String),

    /// Normalized difference against a zero cell.
    #[error("division by zero at cell ({0}, {1})")]
    DivisionByZero(u32, u32),

    /// Log transform of a non-positive value.
    #[error("logarithm of non-positive value at cell ({0}, {1})")]
    NonPositiveLog(u32, u32),

    /// Malformed textual input (connection sets, prune configs, cells).
    #[error("parse error: {0}")]
    Parse(String),

    /// Malformed or unreadable records document.
    #[error("records error: {0}")]
    Records(String),

    /// Underlying I/O failure, flattened to text so the error stays `Clone`.
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
