use thiserror::Error;

/// Errors raised by algebra construction and arithmetic.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum AlgebraError {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("element is not invertible (condition number {condition:.3e})")]
    NotInvertible { condition: f64 },

    #[error("root finding failed for polynomial {coeffs:?}")]
    RootFinding { coeffs: Vec<[f64; 2]> },

    #[error("norm parameter t = {t} violates t^n >= sum |a_k| t^k (slack {slack:.3e})")]
    NormParameter { t: f64, slack: f64 },

    #[error("root condition fails for `{name}`: residual {residual:.3e}")]
    RootResidual { name: String, residual: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("construction error: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
