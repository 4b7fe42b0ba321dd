//! Error types shared by the whole crate.

use std::fmt;

/// Which component matrix of a bimatrix an error or classification refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Component {
    First,
    Second,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Component::First => write!(f, "first"),
            Component::Second => write!(f, "second"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An operation produced equal nonzero components, which is not a bimatrix.
    DegenerateCollapse,
    /// Operand dimensions are incompatible for the requested operation.
    DimMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    /// The bimatrix does not have the shape the operation requires.
    Shape(String),
    /// A row or column index (or index set) is invalid.
    IndexOutOfRange(String),
    /// Both components are singular; no biinverse exists.
    Bisingular,
    /// Exactly one component is singular; reports which one still inverts.
    SemiBisingular { singular: Component },
    /// A linear system has no solution in the named component.
    Inconsistent(Component),
    /// Spectral decomposition requested for a non-bidiagonalizable bimatrix.
    NotDiagonalizable(String),
    /// The similarity witness is singular where it must be invertible.
    SingularWitness(Component),
    /// A scalar or matrix entry is outside the domain of the operation.
    Domain(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegenerateCollapse => {
                write!(f, "degenerate collapse: components are equal and nonzero")
            }
            Error::DimMismatch { op, left, right } => write!(
                f,
                "dimension mismatch in {}: {}x{} vs {}x{}",
                op, left.0, left.1, right.0, right.1
            ),
            Error::Shape(msg) => write!(f, "shape error: {}", msg),
            Error::IndexOutOfRange(msg) => write!(f, "index out of range: {}", msg),
            Error::Bisingular => write!(f, "bisingular: both components are singular"),
            Error::SemiBisingular { singular } => {
                write!(f, "semi bisingular: {} component is singular", singular)
            }
            Error::Inconsistent(c) => write!(f, "inconsistent system in {} component", c),
            Error::NotDiagonalizable(msg) => write!(f, "not bidiagonalizable: {}", msg),
            Error::SingularWitness(c) => {
                write!(f, "similarity witness is singular in {} component", c)
            }
            Error::Domain(msg) => write!(f, "domain error: {}", msg),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
