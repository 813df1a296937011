use thiserror::Error;

/// Errors surfaced by the group kernel, decompositions, and transforms.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A real matrix fed to the Cayley map is not unimodular.
    #[error("matrix is not unimodular: |det - 1| = {residual:e} exceeds {tolerance:e}")]
    Determinant { residual: f64, tolerance: f64 },

    /// The pseudo-unitarity constraint |alpha|^2 - |beta|^2 = 1 fails.
    #[error("not an SU(1,1) element: constraint residual {residual:e} exceeds {tolerance:e}")]
    Constraint { residual: f64, tolerance: f64 },

    /// The Möbius denominator vanished; cannot happen for valid elements and
    /// signals corrupted input.
    #[error("singular boundary action: |conj(beta) zeta + conj(alpha)| < 1e-14")]
    SingularAction,

    /// Input too close to a degenerate configuration of a decomposition.
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),

    /// Cartan recomposition requires a nonnegative hyperbolic parameter.
    #[error("Cartan parameter t must be nonnegative, got {0}")]
    NegativeT(f64),

    /// A radial profile did not vanish at the end of its support.
    #[error("profile is not compactly supported: |value({0})| = {1:e}")]
    NonCompactSupport(f64, f64),

    /// Relative quantity requested against a vanishing reference.
    #[error("division by zero: reference magnitude {0:e} below 1e-14")]
    DivisionByZero(f64),

    /// Invalid quadrature or transform configuration.
    #[error("invalid configuration: {0}")]
    InvalidConfig(&'static str),
}
