//! Exact torsion computations for elliptic curves over Q, base-changed to
//! quadratic fields and finite levels of Z_p-extensions.

pub mod arith;
pub mod classifier;
pub mod curve;
pub mod error;
pub mod gl2;
pub mod isogeny;
pub mod lmfdb;
pub mod parse;
pub mod torsion;
pub mod tower;

pub use error::{Error, Result};
