use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// Mathematical *outcomes* (an inconsistent linear system, a non-split
/// extension, a failed axiom check) are not errors; they are encoded in the
/// report types of the module that produced them. An `Error` means the inputs
/// violate a precondition or an explicitly documented scope limit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("bad scalar literal {0:?}")]
    BadScalar(String),
    #[error("hopf axioms failed: {0:?}")]
    HopfAxioms(Vec<String>),
    #[error("module/comodule axioms failed: {0:?}")]
    StructureAxioms(Vec<String>),
    #[error("antipode is not bijective")]
    NotBijective,
    #[error("left integral space has dimension {0}, expected 1")]
    DegenerateIntegralSpace(usize),
    #[error("not a group table: {0}")]
    NotAGroup(String),
    #[error("bad characteristic: {0}")]
    BadCharacteristic(String),
    #[error("object kinds or base algebras do not match")]
    KindMismatch,
    #[error("operation requires a commutative Hopf algebra")]
    NotCommutative,
    #[error("coaction does not descend to the quotient over H")]
    IllDefinedCoaction,
    #[error("coaction image escapes the H-linear hom space (rationality failure)")]
    RationalityFailure,
    #[error("subspace is not invariant under the structure generators")]
    NotASubobject,
    #[error("could not certify that the inner object is projective over H")]
    ProjectivityUnverified,
    #[error("braiding failed the linearity/colinearity battery")]
    BraidingNotColinear,
    #[error("module over the double does not come from a Yetter-Drinfeld object")]
    NotYd,
    #[error("module over H (X) H* does not come from a Long dimodule")]
    NotLong,
    #[error("unsupported at this scale: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
