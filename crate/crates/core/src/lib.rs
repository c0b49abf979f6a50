//! Exact lattice computations around the Picard lattice of a general quartic
//! Hessian surface, realized inside the even unimodular lattice II(1,25).
//!
//! Everything is integer or rational arithmetic; no floating point is used.

pub mod autgroup;
pub mod error;
pub mod exact;
pub mod golay;
pub mod hessian;
pub mod lattices;
pub mod leech;
pub mod lorentz;
pub mod verify;
pub mod weber;

pub use error::{Error, Result};
