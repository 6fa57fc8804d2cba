use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the requested level")]
    PoleAtLevel,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("empty channel: no invariant tensor")]
    EmptyChannel,
    #[error("degree cutoff exceeded")]
    CutoffExceeded,
    #[error("block cutoff exceeded")]
    BlockCutoffExceeded,
    #[error("frame solve failed")]
    FrameSolveFailed,
    #[error("linear system has no solution")]
    NoSolution,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("splitting is not a section")]
    SplittingInvalid,
    #[error("recursion inconsistent at order {0}")]
    RecursionInconsistent(usize),
    #[error("resonant exponent at order {0}")]
    Resonance(usize),
    #[error("forced extension fails axiom {0}")]
    ExtensionInconsistent(String),
    #[error("conformal reduction left the degree bound")]
    ReductionDiverged,
    #[error("singular block match failed: {0}")]
    MatchFailed(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
