use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("parse error: {0}")]
    Parse(String),

    /// A group element does not belong to the group it is used with.
    #[error("group element {element} does not conform to {context}")]
    Conformance { element: String, context: String },

    #[error("malformed structure constants: {0}")]
    Structure(String),

    #[error("Jacobi identity fails on {count} basis triple(s), first at {first:?}")]
    InvalidAlgebra { count: usize, first: (usize, usize, usize) },

    #[error("grading axiom fails on {count} basis pair(s), first at {first:?}")]
    InvalidGrading { count: usize, first: (usize, usize) },

    #[error("empty tuple of group elements")]
    EmptyTuple,

    #[error("nested bracket of {0} is zero; nothing to derive")]
    ZeroBracket(String),

    #[error("{0} and {1} commute")]
    CommutingPair(String, String),

    #[error("{0} is not in the support")]
    NotInSupport(String),

    #[error("embedding is not a homomorphism on labels {0} and {1}")]
    NotHomomorphism(String, String),

    #[error("embedding has no image for {0}")]
    Unmapped(String),

    #[error("{0} is not a finite group")]
    InfiniteGroup(String),

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("unknown example {0:?}")]
    UnknownExample(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
