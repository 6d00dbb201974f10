use thiserror::Error;

pub type Result<T> = std::result::Result<T, HardyError>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HardyError {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An angle or sample lies outside the interval a formula is stated on.
    #[error("range error: {0}")]
    Range(String),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("sampling error: {0}")]
    Sampling(String),

    #[error("resolution error: {0}")]
    Resolution(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),

    /// An iterative method exhausted its iteration budget.
    #[error("no convergence: {0}")]
    NonConvergence(String),

    /// The adaptive integrator could not take a step above its minimum size.
    #[error("step size collapsed at t = {t:e} (h = {h:e})")]
    StepCollapse { t: f64, h: f64 },

    #[error("no sign change in bracket [{lo}, {hi}]")]
    BracketFailure { lo: f64, hi: f64 },
}

impl HardyError {
    /// Process exit code: 2 for input and domain problems, 3 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            HardyError::NonConvergence(_) | HardyError::StepCollapse { .. } | HardyError::BracketFailure { .. } => 3,
            _ => 2,
        }
    }
}

impl From<std::io::Error> for HardyError {
    fn from(e: std::io::Error) -> Self {
        HardyError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for HardyError {
    fn from(e: serde_json::Error) -> Self {
        HardyError::Parse(e.to_string())
    }
}

impl From<csv::Error> for HardyError {
    fn from(e: csv::Error) -> Self {
        HardyError::Io(e.to_string())
    }
}
