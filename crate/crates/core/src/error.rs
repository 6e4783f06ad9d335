//! Crate-wide error type.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division by zero in field arithmetic or inside a parsed expression.
    DivisionByZero,
    /// Square root of a negative value.
    NegativeSqrt,
    /// Expression syntax error with a byte offset into the input.
    Parse { pos: usize, msg: String },
    /// A direction vector was zero where a non-zero one is required.
    ZeroVector,
    /// `point_along` was given a direction that is not an exact unit vector.
    NonUnitDirection,
    /// An angle is not an exact multiple of 30 degrees.
    UnclassifiableAngle,
    /// Polygon has fewer than 3 distinct vertices after cleanup.
    DegeneratePolygon,
    /// A matrix that must be orthogonal is not.
    NonOrthogonal,
    /// Assembly step referenced a kite index that does not exist yet.
    BadKiteIndex { step: usize, index: usize },
    /// Assembly step produced a placement identical to an existing kite.
    DuplicateKite { step: usize },
    /// Assembly step produced a kite overlapping an existing one.
    KiteOverlap { step: usize },
    /// Boundary extraction found edges that do not close into a cycle.
    OpenBoundary,
    /// Boundary extraction found more than one closed cycle.
    DisconnectedBoundary,
    /// Search explored more states than the caller allowed.
    SearchLimitExceeded { limit: usize },
    /// Tile parameter outside [0, 1].
    ParamOutOfRange,
    /// Unknown named tile.
    UnknownTile(String),
    /// Patch radius outside the supported range.
    RadiusOutOfRange,
    /// Dual tessellation of a patch without interior vertices.
    NoInteriorVertex,
    /// Lattice vectors are linearly dependent.
    DependentVectors,
    /// Scene has nothing to draw.
    EmptyScene,
    /// Invalid animation parameter range.
    InvalidRange,
    /// Sign-table or fixture file malformed.
    BadFixture(String),
    /// Underlying I/O failure.
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NegativeSqrt => write!(f, "square root of negative value"),
            Error::Parse { pos, msg } => write!(f, "parse error at byte {pos}: {msg}"),
            Error::ZeroVector => write!(f, "zero direction vector"),
            Error::NonUnitDirection => write!(f, "direction is not an exact unit vector"),
            Error::UnclassifiableAngle => write!(f, "angle is not a multiple of 30 degrees"),
            Error::DegeneratePolygon => write!(f, "degenerate polygon"),
            Error::NonOrthogonal => write!(f, "matrix is not orthogonal"),
            Error::BadKiteIndex { step, index } => {
                write!(f, "step {step}: kite index {index} out of range")
            }
            Error::DuplicateKite { step } => write!(f, "step {step}: duplicate kite"),
            Error::KiteOverlap { step } => write!(f, "step {step}: kite overlap"),
            Error::OpenBoundary => write!(f, "boundary edges form an open chain"),
            Error::DisconnectedBoundary => write!(f, "boundary is disconnected"),
            Error::SearchLimitExceeded { limit } => {
                write!(f, "search limit of {limit} states exceeded")
            }
            Error::ParamOutOfRange => write!(f, "tile parameter outside [0, 1]"),
            Error::UnknownTile(name) => write!(f, "unknown tile name: {name}"),
            Error::RadiusOutOfRange => write!(f, "patch radius out of range"),
            Error::NoInteriorVertex => write!(f, "patch has no interior vertex"),
            Error::DependentVectors => write!(f, "lattice vectors are linearly dependent"),
            Error::EmptyScene => write!(f, "scene is empty"),
            Error::InvalidRange => write!(f, "invalid parameter range"),
            Error::BadFixture(msg) => write!(f, "bad fixture: {msg}"),
            Error::Io(msg) => write!(f, "i/o error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
