use thiserror::Error;

/// Errors raised by constructions and queries across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relation closure has a directed cycle through {0:?}")]
    Cycle(String),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("label sets collide on {0:?}")]
    LabelCollision(String),
    #[error("{0:?} is not a maximal element")]
    NotMaximal(String),
    #[error("{0:?} is not a minimal element")]
    NotMinimal(String),
    #[error("{0:?} is neither maximal nor minimal")]
    NotExtremal(String),
    #[error("({0:?}, {1:?}) is not a cover relation")]
    NotACover(String, String),
    #[error("{0:?} is not a vertex")]
    NotAVertex(String),
    #[error("{0:?} is not a facet")]
    NotAFacet(String),
    #[error("no complete flag found: {0}")]
    FlagNotFound(String),
    #[error("face lattice exceeds the cap of {0} faces")]
    FaceCapExceeded(usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid support: {0}")]
    InvalidSupport(String),
    #[error("cycle enumeration stopped after {found} cycles (cap {cap})")]
    CapExceeded { found: usize, cap: usize },
    #[error("edge {0} repeated with the same orientation")]
    InvalidOrientation(usize),
    #[error("polytope carries no vertex-split data")]
    MissingSplitData,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("vertex split at {vertex:?} is unsafe")]
    UnsafeSplit {
        vertex: String,
        left: Vec<String>,
        right: Vec<String>,
    },
    #[error("unknown base polytope {0:?}")]
    UnknownBase(String),
    #[error("base polytope {0:?} failed the ideal oracle")]
    NotGraphicBase(String),
    #[error("top layer matches no attachment pattern: {0}")]
    NoCaseMatches(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
