use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("indices must be strictly increasing: {0:?}")]
    NonIncreasingIndices(Vec<usize>),
    #[error("index {index} outside 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("row list has {rows} entries but column list has {cols}")]
    LengthMismatch { rows: usize, cols: usize },
    #[error("shape parts must be positive and weakly decreasing: {0:?}")]
    InvalidShape(Vec<usize>),
    #[error("shape part {part} exceeds min(m, n) = {bound}")]
    ShapeExceedsAmbient { part: usize, bound: usize },
    #[error("shape part {part} exceeds the number of variables {n}")]
    ShapeTooWide { part: usize, n: usize },
    #[error("bitableau is not standard")]
    NotStandard,
    #[error("bitableau is empty")]
    EmptyTableau,
    #[error("bitableau does not contain a superstandard tableau of the requested shape")]
    WitnessPreconditionFailed,
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("enumeration cap of {cap} exceeded")]
    DegreeBoundExceeded { cap: usize },
    #[error("{count} generators exceed the cap of {cap}")]
    TooManyGenerators { count: usize, cap: usize },
    #[error("generators are not all of one total degree")]
    NotEquigenerated,
    #[error("lattice elements {0} and {1} are comparable")]
    ComparablePair(String, String),
    #[error("Laurent polynomial is not symmetric in the v variables")]
    NotSymmetric,
    #[error("negative v exponent in Schur expansion input")]
    NegativeExponent,
    #[error("K-theory computations require m >= n (got m={m}, n={n})")]
    DimensionOrder { m: usize, n: usize },
    #[error("ambient sizes differ: {0:?} vs {1:?}")]
    AmbientMismatch((usize, usize), (usize, usize)),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
