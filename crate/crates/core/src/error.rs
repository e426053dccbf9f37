use thiserror::Error;

/// Errors raised by the numerical routines of this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{name} must be a probability in [0, 1], got {value}")]
    InvalidProbability { name: &'static str, value: f64 },

    #[error("posterior undefined: a*phi and (1 - b)*(1 - phi) are both zero (a={tpr}, b={tnr}, phi={prior})")]
    DegenerateDenominator { tpr: f64, tnr: f64, prior: f64 },

    #[error("undefined threshold: a = 0 and b = 1 leave no curve")]
    UndefinedThreshold,

    #[error("likelihood ratio undefined for b = 1 (no false positives)")]
    DivisionByZero,

    #[error("class {class} has no ground-truth members")]
    EmptyClass { class: &'static str },

    #[error("class index {index} out of range for {classes} classes")]
    IndexOutOfRange { index: usize, classes: usize },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("finite-difference stencil [{lo}, {hi}] leaves the unit interval")]
    StencilOutOfDomain { lo: f64, hi: f64 },

    #[error("curvature is identically zero (a + b = 1), there is no maximum to locate")]
    FlatCurvature,

    #[error("f({lo}) and f({hi}) do not bracket a root")]
    NoBracket { lo: f64, hi: f64 },

    #[error("area under the curve is degenerate for a={tpr}, b={tnr} (requires a > 0 and b < 1)")]
    DegenerateCurve { tpr: f64, tnr: f64 },

    #[error("no solution: {0}")]
    NoSolution(String),
}

impl Error {
    /// Whether the error means "the requested target cannot be reached",
    /// as opposed to bad input.
    pub fn is_no_solution(&self) -> bool {
        matches!(self, Error::NoSolution(_) | Error::NoBracket { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
