// SPDX-License-Identifier: MIT
//! Error type shared by every operation in the crate.

use alloc::string::String;

/// Errors reported by graph construction and the graph algorithms.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("empty vertex name")]
    EmptyVertexName,
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("self-loop on `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge between `{0}` and `{1}`")]
    DuplicateEdge(String, String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex index {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("`{0}` and `{1}` are not adjacent")]
    NotAdjacent(String, String),
    #[error("overlapping arguments: {0}")]
    Overlap(String),
    #[error("invalid path: {0}")]
    InvalidPath(&'static str),
    #[error("graph is not ancestral")]
    NotAncestral,
    #[error("graph is not maximal")]
    NotMaximal,
    #[error("graph is not a DAG")]
    NotDag,
    #[error("graphs do not share a skeleton")]
    SkeletonMismatch,
    #[error("graph carries arrowheads; an all-tail skeleton is required")]
    NotSkeleton,
    #[error("no observed vertices remain after removing latent and selection vertices")]
    EmptyObserved,
    #[error("enumerating {edges} edges (4^{edges} orientations) exceeds the cap of {cap}")]
    TooManyOrientations { edges: usize, cap: u64 },
    #[error("internal invariant violated: {0}")]
    Internal(Internal),
}

/// Violations of invariants the algorithms guarantee; seeing one is a bug.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Internal {
    #[error("arrowhead placed on protected tail at `{at}` on edge to `{other}`")]
    ProtectedTail { at: String, other: String },
    #[error("maximalization would make `{0}` and `{1}` a bidirected ancestor pair")]
    MaximalizeBrokeAncestrality(String, String),
    #[error("order sweeps exceeded the number of triples")]
    OrderSweepCap,
    #[error("orientation did not reach a fixed point within the arrowhead bound")]
    ArrowheadBound,
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

impl From<Internal> for Error {
    fn from(e: Internal) -> Self {
        Error::Internal(e)
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
