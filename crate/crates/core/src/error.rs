use thiserror::Error;

/// Rejected solver configuration.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("parameter constraint violated: {0}")]
    ConstraintViolation(String),
}

/// The secant data cannot define a curvature estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CurvatureError {
    #[error("degenerate secant pair (zero or non-finite denominator)")]
    DegenerateStep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum StepError {
    #[error("gradient is zero; the stopping test must run before stepping")]
    ZeroGradient,
    #[error("regularization weight must be positive and finite")]
    InvalidScale,
    #[error("non-finite input to the cubic subproblem")]
    NonFinite,
}

/// Precondition failures of a solver run. Numerical trouble during a run is
/// reported through [`crate::RunStatus`] instead.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolverError {
    #[error(transparent)]
    InvalidParams(#[from] ParamError),
    #[error("starting point has length {got}, objective dimension is {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("starting point contains non-finite entries")]
    NonFiniteStart,
    #[error("initial trust radius must be positive and finite, got {0}")]
    InvalidRadius(f64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProblemError {
    #[error("unknown problem `{0}`")]
    UnknownProblem(String),
    #[error("dimension {dim} rejected for {name}: {constraint}")]
    DimensionRejected {
        name: &'static str,
        dim: usize,
        constraint: String,
    },
}
