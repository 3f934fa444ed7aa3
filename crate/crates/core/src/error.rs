use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{function}: argument {value} outside the domain ({reason})")]
    Domain {
        function: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("kernel sampled at coincident nodes p = q = {0}")]
    CoincidentNodes(f64),

    #[error("grid mismatch: {values} samples for a grid of {nodes} nodes")]
    GridMismatch { values: usize, nodes: usize },

    #[error("finite-difference step {step} too large for a point at distance {distance} from the coincidence sets")]
    StepTooLarge { step: f64, distance: f64 },

    #[error("no sign change of {what} found in {interval}")]
    Bracket {
        what: &'static str,
        interval: String,
    },

    #[error("{what} did not converge: {detail}")]
    NonConvergence { what: &'static str, detail: String },

    #[error("regularization range ell = {0} is not supported (only ell = inf)")]
    UnsupportedRange(f64),
}

impl Error {
    /// True for failures of a numerical procedure, as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::NonConvergence { .. } | Error::Bracket { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
