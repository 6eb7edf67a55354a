use thiserror::Error;

/// Everything that can go wrong while reading, validating or analysing a divide.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DivideError {
    #[error("malformed document: {0}")]
    Malformed(String),

    #[error("unknown format {0:?}")]
    UnknownFormat(String),

    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),

    #[error("unknown label {0:?}")]
    UnknownLabel(String),

    #[error("invalid slot {slot} on {label:?}")]
    InvalidSlot { label: String, slot: i64 },

    #[error("slot reuse: ({label:?}, {slot}) is attached to more than one edge")]
    SlotReuse { label: String, slot: u8 },

    #[error("unused slot: ({label:?}, {slot}) has no edge")]
    UnusedSlot { label: String, slot: u8 },

    #[error("endpoint count {0} must be even and at least 2")]
    EndpointCount(usize),

    #[error("closed branch through crossing {0:?}")]
    ClosedBranch(String),

    #[error("planarity failure: V - E + F = {0}, expected 2")]
    NotPlanar(i64),

    #[error("boundary face count {0}, expected exactly one")]
    BoundaryFace(usize),

    #[error("sign colouring inconsistent at edge {0}")]
    Coloring(usize),

    #[error("general position violated: {0}")]
    GeneralPosition(String),

    #[error("chord sampling exhausted after {0} attempts")]
    Exhausted(usize),

    #[error("nilpotency violated: (tN)^3 != 0")]
    Nilpotency,

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("missing fixture {0:?}")]
    MissingFixture(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, DivideError>;

impl From<std::io::Error> for DivideError {
    fn from(e: std::io::Error) -> Self {
        DivideError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for DivideError {
    fn from(e: serde_json::Error) -> Self {
        DivideError::Malformed(e.to_string())
    }
}
