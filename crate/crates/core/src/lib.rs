//! Exact-arithmetic construction kit for the Hat/Turtle monotile family.
//!
//! Everything is computed over the real quadratic field Q[√3]: the Laves
//! kite and its reflection assemblies, the 14-edge parametric boundary of
//! Tile(a, 1-a), dual Laves tessellations, periodic-patch verification,
//! and deterministic SVG rendering. No floating point is used anywhere in
//! the geometry; doubles appear only at the output boundary (display and
//! SVG coordinates).

pub mod error;
pub mod fixtures;
pub mod geom;
pub mod kite;
pub mod laves;
pub mod numeric;
pub mod render;
pub mod tilefamily;
pub mod tiling;

pub use error::Error;
pub use numeric::{Rational, QS3};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
