//! Domain errors shared by every module.

use alloc::string::String;

/// Everything that can go wrong while building or transforming the domain
/// objects. Each variant names the violated precondition; contract violations
/// that indicate a caller bug (for example dimension mismatches in inner
/// products) panic instead.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: &'static str, rank: usize },

    #[error("not a root system: {0}")]
    NotARootSystem(String),

    #[error("point lies on the wall with normal {0}")]
    PointOnWall(String),

    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("not a root subsystem: {0}")]
    NotASubsystem(String),

    #[error("subsystem is not saturated: {0}")]
    NotSaturated(String),

    #[error("chamber does not lift: {0}")]
    DoesNotLift(String),

    #[error("gallery step {index} is not connected through its wall: {reason}")]
    NotAGallery { index: usize, reason: String },

    #[error("subgallery range [{lo},{hi}] out of bounds for length {len}")]
    SubgalleryRange { lo: usize, hi: usize, len: usize },

    #[error("cannot glue: final chamber of the left gallery differs from the initial chamber of the right gallery")]
    GlueMismatch,

    #[error("malformed index map: {0}")]
    MalformedMap(String),

    #[error("wall mismatch at position {position}: expected {expected}, found {found}")]
    WallMismatch {
        position: usize,
        expected: String,
        found: String,
    },

    #[error("index {index} out of range [1,{len}]")]
    IndexRange { index: usize, len: usize },

    #[error("double folding not applicable: {0}")]
    FoldingNotApplicable(String),

    #[error("invalid gluing junction: {0}")]
    BadJunction(String),

    #[error("word mismatch: {0}")]
    WordMismatch(String),

    #[error("seed pair is not a (p,w)-pair")]
    SeedPairInvalid,

    #[error("gallery does not start at the fundamental chamber")]
    NotAtFundamental,

    #[error("order preservation verification failed: {0}")]
    OrderVerificationFailed(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
