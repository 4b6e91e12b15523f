//! Error type shared by every module of the library.
//!
//! Each variant carries a short machine-readable code (the `thiserror`
//! prefix) plus a human-readable detail naming the violated condition.

/// Library-wide error type.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// A parameter pack violates the admissibility condition of the
    /// requested theorem (e.g. `N > p + alpha` fails).
    #[error("regime-violation: {0}")]
    RegimeViolation(String),

    /// `p = N - 1` requires an explicit Lebesgue exponent `q > 1`.
    #[error("q-required: p = N-1 requires an explicit q > 1")]
    QRequired,

    /// An operation needs a larger dimension (e.g. `N > 3`).
    #[error("dimension-too-small: {0}")]
    DimensionTooSmall(String),

    /// Adaptive quadrature failed to converge within its node budget.
    #[error("quadrature-failure: {0}")]
    QuadratureFailure(String),

    /// Two independent quadrature schemes disagree beyond tolerance.
    #[error("quadrature-inconsistent: {0}")]
    QuadratureInconsistent(String),

    /// `mu(beta)` was requested outside the interval on which the
    /// Gagliardo-Nirenberg function is defined for subcritical exponents.
    #[error("mu-undefined: {0}")]
    MuUndefined(String),

    /// Sphere exponent `t` outside the admissible range.
    #[error("exponent-out-of-range: {0}")]
    ExponentOutOfRange(String),

    /// Superlevel threshold must be positive.
    #[error("invalid-level: {0}")]
    InvalidLevel(String),

    /// The operation requires a nonnegative angular weight.
    #[error("nonneg-required: {0}")]
    NonnegRequired(String),

    /// Sampled fields must share an identical cell structure.
    #[error("shape-mismatch: {0}")]
    ShapeMismatch(String),

    /// The zonal kernel diverges as `r -> 1`.
    #[error("kernel-singularity: {0}")]
    KernelSingularity(String),

    /// Radial profiles must be compactly supported.
    #[error("support-required: {0}")]
    SupportRequired(String),

    /// A sweep family left the admissible test-function class.
    #[error("family-invalid: {0}")]
    FamilyInvalid(String),

    /// Malformed input (non-finite numbers, bad tables, bad CSV).
    #[error("invalid-input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
