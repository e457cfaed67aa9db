use thiserror::Error;

/// Every failure the library reports. Witnesses are vertex lists of simplices.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    ParseError(String),
    #[error("duplicate facet {0:?}")]
    DuplicateFacet(Vec<usize>),
    #[error("facet {0:?} repeats a vertex")]
    NonSimplexFace(Vec<usize>),
    #[error("degree {degree} out of range 0..={dim}")]
    DegreeOutOfRange { degree: usize, dim: usize },
    #[error("simplex {0:?} is not in the complex")]
    SimplexNotInComplex(Vec<usize>),
    #[error("complex is empty")]
    EmptyComplex,
    #[error("chain does not live on the given complex: {0}")]
    AmbientMismatch(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("boundary maps do not compose to zero (column {0} of the upper map)")]
    CompositionNonzero(usize),
    #[error("not a pseudomanifold: {reason}, witness {witness:?}")]
    NotPseudomanifold { reason: String, witness: Vec<usize> },
    #[error("not orientable: odd cycle through facets {0:?}")]
    NonOrientable(Vec<Vec<usize>>),
    #[error("invalid stratification: {0}")]
    InvalidUserStratification(String),
    #[error("stratification incompatible with the triangulation: {0}")]
    IncompatibleStratification(String),
    #[error("classical perversities need codimension >= 2, got {0}")]
    CodimTooSmall(usize),
    #[error("perversity value {value} out of range [0, {max}] on stratum {stratum}")]
    PerversityOutOfRange { stratum: usize, value: i64, max: i64 },
    #[error("perversities are defined on different strata")]
    StrataMismatch,
    #[error("stratification is not a product stratification")]
    NotProductStratification,
    #[error("diagonal simplex {0:?} is not allowable")]
    DiagonalNotAllowable(Vec<usize>),
    #[error("fundamental class does not decompose in degree {0}")]
    UnsolvableDecomposition(usize),
    #[error("pseudomanifold has a nonempty boundary")]
    HasBoundary,
    #[error("product of {0} simplices exceeds the materialization limit")]
    ProductTooLarge(u128),
    #[error("not an IP space")]
    NotIP,
    #[error("pairing in degree {0} is not symmetric")]
    AsymmetricPairing(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
