use thiserror::Error;

/// Errors raised by the evaluators, operators and the command-line layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter or argument lies outside the domain of the operation.
    #[error("{0}")]
    Domain(String),

    /// γ is a nonpositive integer: the function is a polynomial and the
    /// inverse-factorial expansion does not exist.
    #[error("polynomial case (gamma = {gamma}): asymptotic expansion undefined via this route")]
    PolynomialCase { gamma: f64 },

    /// The series handed to the power recursion has a zero leading coefficient.
    #[error("leading coefficient is zero; normalize with the shifted case first")]
    ZeroLeadingCoefficient,

    /// The requested configuration is outside what is implemented.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A direct summation cannot converge for the given ratio.
    #[error("series not summable by direct method (ratio {ratio})")]
    NotSummable { ratio: f64 },

    /// The outer eigenfunction series lost accuracy; the caller should use
    /// the large-t expansion instead.
    #[error("outer series unreliable at t = {t} (estimated error {estimate:e}); use f_asymptotic")]
    SeriesBreakdown { t: f64, estimate: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
