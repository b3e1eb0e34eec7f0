use core::fmt;

/// Errors raised by the exact arithmetic and enumeration routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A fixed-width integer operation would have overflowed.
    Overflow,
    /// A square matrix was required.
    NotSquare { rows: usize, cols: usize },
    /// Operands of incompatible shape or dimension.
    DimensionMismatch { expected: usize, found: usize },
    /// The matrix has zero determinant.
    Singular,
    /// The vertices do not span a full-dimensional simplex.
    Degenerate,
    /// Structurally invalid input.
    InvalidInput(&'static str),
    /// The unit-cube search in a facet exceeded its work budget.
    SearchTooLarge { budget: u128 },
    /// An internal consistency check failed.
    Internal(&'static str),
    /// The coordinate box to scan holds more integer points than allowed.
    BoxTooLarge { volume: u128, budget: u128 },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Overflow => f.write_str("arithmetic overflow in 64-bit integer arithmetic"),
            Error::NotSquare { rows, cols } => {
                write!(f, "expected a square matrix, got {rows}x{cols}")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::Singular => f.write_str("matrix is singular"),
            Error::Degenerate => f.write_str("vertices are affinely dependent (degenerate simplex)"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::SearchTooLarge { budget } => write!(
                f,
                "facet sublattice search exceeded the work budget of {budget} point lookups"
            ),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
            Error::BoxTooLarge { volume, budget } => write!(
                f,
                "bounding box contains {volume} integer points, exceeding the point budget of {budget}"
            ),
        }
    }
}

impl core::error::Error for Error {}
