use num_complex::Complex64;
use std::fmt;

/// Errors of the exact-algebra layer.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A rational function was built with a zero denominator.
    ZeroDenominator,
    /// Numeric evaluation hit a pole of a coefficient.
    Pole { at: Complex64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDenominator => write!(f, "zero denominator in Q(q)"),
            Error::Pole { at } => write!(f, "coefficient pole at q = {at}"),
        }
    }
}

impl std::error::Error for Error {}
