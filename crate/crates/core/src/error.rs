use thiserror::Error;

/// Errors surfaced by the exact-arithmetic kernel and the operator layers.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// Exact division failed: the would-be quotient is not a Laurent polynomial.
    #[error("result is not Laurent: {0}")]
    NotLaurent(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    /// Denominator vanishes at v = 1 even after cancelling removable factors.
    #[error("pole at the classical limit q = 1")]
    PoleAtClassicalLimit,

    /// A skew-form pairing or q-power landed off the integer grid.
    #[error("non-integral exponent: {0}")]
    NonIntegralExponent(String),

    /// A difference operator could not be matched inside the algebra
    /// generated by the Toda hamiltonians and the multiplication operator.
    #[error("operator not in the generated algebra: {0}")]
    NotInAlgebra(String),

    /// A Pieri coefficient had an identically zero denominator bracket.
    #[error("Pieri coefficient singular at {0}")]
    SingularCoefficient(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
