//! Error type shared by every module in the crate.

use thiserror::Error;

/// Everything that can go wrong across the algebraic and numerical layers.
#[derive(Debug, Error)]
pub enum Error {
    /// A signature outside the supported range 1 ≤ p+q ≤ 8.
    #[error("invalid signature ({p},{q}): need 1 <= p+q <= 8")]
    InvalidSignature { p: i64, q: i64 },

    /// Two multivectors from different algebras fed into a binary operation.
    #[error("signature mismatch: {0} vs {1}")]
    SignatureMismatch(String, String),

    /// Malformed textual input (multivector terms, blade names, signature
    /// strings, case tags).
    #[error("parse error: {0}")]
    Parse(String),

    /// A user-supplied blade list that cannot serve as idempotent factors.
    #[error("invalid idempotent factors: {0}")]
    InvalidFactors(String),

    /// An element claimed to be idempotent that is not, or an ideal basis
    /// that fails closure under left multiplication.
    #[error("idempotent/ideal structure violated: {0}")]
    BadIdeal(String),

    /// A spinor that was required to lie in a minimal left ideal but does not.
    #[error("element does not lie in the ideal: {0}")]
    NotInIdeal(String),

    /// An immersion-case tag that names none of the listed cases.
    #[error("unknown immersion case: {0}")]
    UnknownCase(String),

    /// A grid too small for the finite-difference stencils.
    #[error("grid too small: {0}")]
    GridTooSmall(String),

    /// Numerical data whose governing-equation residual exceeds its tolerance.
    #[error("residual too large in {what}: max {max:.3e} > tol {tol:.3e}")]
    ResidualTooLarge { what: String, max: f64, tol: f64 },

    /// Invalid run configuration (tolerances, grid parameters, potential parameters).
    #[error("bad configuration: {0}")]
    BadConfig(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
