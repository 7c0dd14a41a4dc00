use thiserror::Error;

/// Errors raised by group, cohomology, and complement operations.
///
/// `TheoremViolation` is deliberately distinct from the precondition errors:
/// it marks the situation where a search that is mathematically guaranteed to
/// succeed came up empty. The verification harness treats it as a red result
/// with a witness, never as a crash.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("invalid permutation images: {0}")]
    InvalidImages(String),

    #[error("cannot parse cycle notation {input:?}: {reason}")]
    CycleParse { input: String, reason: String },

    #[error("group order exceeds element cap {cap} (at least {reached} elements)")]
    CapExceeded { cap: usize, reached: usize },

    #[error("{0} is not a subgroup of {1}")]
    NotSubgroup(String, String),

    #[error("subgroup of order {order} is not normal in group of order {in_order}")]
    NotNormal { order: usize, in_order: usize },

    #[error("subgroup is not abelian")]
    NotAbelian,

    #[error("group is not nilpotent")]
    NotNilpotent,

    #[error("map on generators does not extend to a homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("table is not a crossed homomorphism: {0}")]
    NotCocycle(String),

    #[error("subgroup is not a complement: {0}")]
    NotComplement(String),

    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),

    #[error("theorem violation at {stage}: {detail}")]
    TheoremViolation { stage: String, detail: String },

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
