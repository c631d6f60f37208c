use thiserror::Error;

/// Errors raised by construction and verification operations.
///
/// Checks that measure an identity never error on failure; they return
/// residual reports instead. Errors are reserved for structurally invalid
/// inputs.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("elements belong to different algebras")]
    AlgebraMismatch,

    #[error("base field mismatch")]
    FieldMismatch,

    #[error("non-finite scalar in {0}")]
    NonFinite(&'static str),

    #[error("structure tensor is not antisymmetric at ({i},{j},{k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },

    #[error("zero-mode subalgebra is not abelian (residual {residual:.3e})")]
    ZeroModeNotAbelian { residual: f64 },

    #[error("matrix is singular or too ill-conditioned ({0})")]
    Degenerate(String),

    #[error("mode {m} exceeds the Nyquist bound for {samples} samples")]
    NyquistViolation { m: i64, samples: usize },

    #[error("need at least {needed} usable modes for a decay fit, got {got}")]
    InsufficientModes { needed: usize, got: usize },

    #[error("mode support violates a sign constraint: {0}")]
    SupportViolation(String),

    #[error("element leaves the realized span (residual {residual:.3e})")]
    SpanEscape { residual: f64 },

    #[error("missing bilinear form: {0}")]
    MissingForm(&'static str),

    #[error("invalid input: {0}")]
    Invalid(String),
}
