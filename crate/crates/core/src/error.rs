use thiserror::Error;

/// Errors raised by the finite kernel, the constructions and the symbolic algebras.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("points {0} and {1} have identical open neighbourhoods (space is not T0)")]
    NotT0(usize, usize),

    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),

    #[error("family is not a topology: {0}")]
    NotATopology(String),

    #[error("set has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("point {point} is outside a carrier of size {size}")]
    PointOutOfRange { point: usize, size: usize },

    #[error("{what} needs {needed}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    #[error("empty carrier")]
    EmptyCarrier,

    #[error("{0} < {1} does not hold in the specialization order")]
    NotAChainPair(usize, usize),

    #[error("maps do not share domain and codomain")]
    MismatchedSpaces,

    #[error("set is not b-closed")]
    NotBClosed,

    #[error("set is not open")]
    NotOpen,

    #[error("unknown space `{0}`")]
    UnknownSpace(String),

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("not representable in the algebra: {0}")]
    NotRepresentable(String),

    #[error("open set is empty")]
    EmptyOpen,

    #[error("no reflection targets given")]
    EmptyTargets,

    #[error("no superset satisfies the class predicate `{0}`")]
    NoKSuperset(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn cap(what: &'static str, needed: u128, cap: u128) -> Self {
        Error::CapExceeded { what, needed, cap }
    }
}
