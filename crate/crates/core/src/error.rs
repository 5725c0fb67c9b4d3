use thiserror::Error;

/// Errors raised by constructions and searches in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relation is not a partial order: {0}")]
    InvalidPoset(String),
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("{{{0}, {1}}} has no {2}")]
    NotALattice(String, String, &'static str),
    #[error("poset has no global bottom and top")]
    NoBoundedExtremes,
    #[error("{what}: size {size} exceeds cap {cap}")]
    SizeCapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("invalid adjunct pair ({a}, {b}): {reason}")]
    AdjunctPairInvalid {
        a: String,
        b: String,
        reason: &'static str,
    },
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown element name `{0}`")]
    UnknownName(String),
    #[error("lattice is not dismantlable")]
    NotDismantlable,
    #[error("adjunct decomposition failed: {0}")]
    DecompositionFailed(String),
    #[error("vertex label `{0}` occurs in both graphs")]
    LabelClash(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("invalid rooted tree: {0}")]
    InvalidTree(String),
    #[error("root has {0} children; at least two are required")]
    RootDegreeTooSmall(usize),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
