use thiserror::Error;

use crate::cartan::{LieType, Weight};

/// Errors for every fallible operation in the crate.
///
/// Precondition violations (bad input) are distinct from `Internal`, which
/// signals a broken arithmetic invariant and never occurs on a healthy
/// build.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for series {series}: allowed {allowed}")]
    InvalidRank {
        series: char,
        rank: usize,
        allowed: &'static str,
    },
    #[error("cannot parse Lie type {0:?}: expected a series letter A-G followed by a rank, e.g. \"E8\"")]
    ParseType(String),
    #[error("cannot parse weight {0:?}: expected bracketed integer labels, e.g. \"[0,1,0]\"")]
    ParseWeight(String),
    #[error("rank mismatch: expected {expected} labels, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("algebra mismatch: {0} vs {1}")]
    TypeMismatch(LieType, LieType),
    #[error("weight {0} is not dominant")]
    NonDominant(Weight),
    #[error("weight {weight} lies outside the level-{level} alcove")]
    OutsideAlcove { weight: Weight, level: u64 },
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
