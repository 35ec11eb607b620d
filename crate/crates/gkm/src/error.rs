use thiserror::Error;

use crate::exact_algebra::AlgebraError;

/// Errors raised across the library. Validation outcomes that are reports
/// rather than failures (see [`crate::gkm_graph::ValidationReport`]) are not
/// represented here.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("structural error: {0}")]
    Structural(String),
    #[error("no valid connection along edge `{edge}`: dart `{dart}` has no congruent partner")]
    NoValidConnection { edge: String, dart: String },
    #[error("ambiguous connection along edge `{edge}`: more than one congruent bijection")]
    AmbiguousConnection { edge: String },
    #[error("dart `{dart}` at vertex `{vertex}` has no partner with axial value x - alpha")]
    NoPartner { vertex: String, dart: String },
    #[error("connection along edge `{edge}` does not map pairs to pairs")]
    PairNotPreserved { edge: String },
    #[error("hyperplane closure failed at vertex `{vertex}`: {detail}")]
    ClosureFailure { vertex: String, detail: String },
    #[error("assumption (1) fails for hyperplane {hyperplane}: {check}: {detail}")]
    AssumptionOneViolation { hyperplane: String, check: String, detail: String },
    #[error("congruence relation fails on edge `{edge}`")]
    CongruenceFailure { edge: String },
    #[error("graph violates the assumptions: {0}")]
    AssumptionViolation(String),
    #[error("simplicial complex is not pure: {0}")]
    PurityFailure(String),
    #[error("no shelling found after exploring {explored} search nodes")]
    NotShellable { explored: u64 },
    #[error("invalid shelling order: {0}")]
    InvalidShelling(String),
    #[error("characteristic function of {hyperplane} differs between vertices")]
    InconsistentLambda { hyperplane: String },
    #[error("inexact division at vertex `{vertex}`")]
    InexactDivision { vertex: String },
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("invalid hint: {0}")]
    InvalidHint(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub type Result<T> = std::result::Result<T, Error>;
