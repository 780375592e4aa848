use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{name}` at byte {pos}")]
    UnknownVariable { name: String, pos: usize },

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("ring mismatch between operands")]
    RingMismatch,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("exact division failed: {0}")]
    DivisionFailed(String),

    #[error("test ideal chain did not stabilize up to e = {e_max}")]
    NotStabilized { e_max: u32 },

    #[error("containment never failed up to m = {cap}; is a^r inside rad(I)?")]
    Unbounded { cap: u64 },

    #[error("target ideal is the unit ideal; no exponent leaves it")]
    ZeroRegion,

    #[error("degree bound violated: generator of degree {found} exceeds {bound}")]
    DegreeBound { found: u64, bound: u64 },

    #[error("resolution mismatch: {0}")]
    Resolution(String),

    #[error("at point {point}: {source}")]
    AtPoint { point: String, source: Box<Error> },
}

impl Error {
    /// The underlying error with point context stripped.
    pub fn innermost(&self) -> &Error {
        match self {
            Error::AtPoint { source, .. } => source.innermost(),
            e => e,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
