use thiserror::Error;

/// Every failure the engine can report. Variant names double as the
/// machine-readable error identifiers emitted by the CLI.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("cannot parse diagram spec {0:?}: expected [ADE] followed by a rank")]
    UnparsableSpec(String),
    #[error("invalid rank for type {family}: {rank}")]
    InvalidRank { family: char, rank: usize },
    #[error("edge set does not match the {0} diagram")]
    InvalidEdges(String),
    #[error("root closure exceeded {0} roots; input is not of ADE type")]
    ClosureBudgetExceeded(usize),
    #[error("not a positive root: {0:?}")]
    NotPositiveRoot(Vec<i64>),
    #[error("simple root {0:?} has no decomposition")]
    NotDecomposable(Vec<i64>),
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("generator {0} out of range 1..={1}")]
    GeneratorOutOfRange(i64, usize),
    #[error("group enumeration exceeded cap {0}")]
    CapExceeded(usize),
    #[error("cannot parse braid word {0:?}")]
    UnparsableWord(String),
    #[error("word is not pure; its Weyl image moves root indices {moved:?}")]
    NotPure { moved: Vec<usize> },
    #[error("odd half-turn count {count} on positive root {root:?}")]
    OddHalfUnits { root: Vec<i64>, count: i64 },
    #[error("path sample within {distance:e} of hyperplane {root:?}")]
    PathTooCloseToHyperplane { root: Vec<i64>, distance: f64 },
    #[error("winding residual {residual:e} on root {root:?} exceeds tolerance")]
    RoundingResidualTooLarge { root: Vec<i64>, residual: f64 },
    #[error("invalid argument: {0}")]
    InvalidParams(String),
    #[error("hypothesis relation fails for generators ({0}, {1})")]
    RelationViolated(usize, usize),
    #[error("decompositions of {root:?} disagree")]
    InconsistentDecomposition { root: Vec<i64> },
    #[error("rank {0} outside supported range")]
    RankOutOfRange(usize),
}

impl Error {
    /// Stable identifier used in JSON error output.
    pub fn name(&self) -> &'static str {
        match self {
            Error::UnparsableSpec(_) => "UnparsableSpec",
            Error::InvalidRank { .. } => "InvalidRank",
            Error::InvalidEdges(_) => "InvalidEdges",
            Error::ClosureBudgetExceeded(_) => "ClosureBudgetExceeded",
            Error::NotPositiveRoot(_) => "NotPositiveRoot",
            Error::NotDecomposable(_) => "NotDecomposable",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::GeneratorOutOfRange(..) => "GeneratorOutOfRange",
            Error::CapExceeded(_) => "CapExceeded",
            Error::UnparsableWord(_) => "UnparsableWord",
            Error::NotPure { .. } => "NotPure",
            Error::OddHalfUnits { .. } => "OddHalfUnits",
            Error::PathTooCloseToHyperplane { .. } => "PathTooCloseToHyperplane",
            Error::RoundingResidualTooLarge { .. } => "RoundingResidualTooLarge",
            Error::InvalidParams(_) => "InvalidParams",
            Error::RelationViolated(..) => "RelationViolated",
            Error::InconsistentDecomposition { .. } => "InconsistentDecomposition",
            Error::RankOutOfRange(_) => "RankOutOfRange",
        }
    }

    /// Errors that signal a broken internal invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::OddHalfUnits { .. }
                | Error::InconsistentDecomposition { .. }
                | Error::ClosureBudgetExceeded(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
