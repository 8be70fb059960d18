use thiserror::Error;

/// Every fallible operation in the crate reports one of these.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(String, String),
    #[error("index signature mismatch: {0}")]
    SignatureError(String),
    #[error("degenerate metric")]
    DegenerateMetric,
    #[error("observer is not timelike future-oriented")]
    NotTimelike,
    #[error("chart mismatch: {0}")]
    ChartMismatch(String),
    #[error("determinant is not a nonzero constant")]
    NonConstantDeterminant,
    #[error("generators are linearly dependent")]
    DependentGenerators,
    #[error("commutators leave the span of the frame")]
    NotClosed,
    #[error("charge must be nonzero")]
    ZeroCharge,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("mass shell requires m > 0")]
    MasslessShell,
    #[error("momentum is off the mass shell: g#(p,p) - m^2 = {0:e}")]
    OffShell(f64),
    #[error("tetrad is singular")]
    SingularTetrad,
    #[error("Higgs value is zero")]
    ZeroHiggs,
    #[error("Weinberg angle {0} is outside (0, pi/2)")]
    BadAngle(f64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
    #[error("unknown dump kind: {0}")]
    UnknownKind(String),
    #[error("not representable on the exact backend: {0}")]
    NotExact(String),
    #[error("backend mismatch: {0}")]
    BackendMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
