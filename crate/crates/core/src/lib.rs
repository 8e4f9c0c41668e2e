//! Finite permutation groups and the invariants used to study generation:
//! prime graphs, exponents, index prime sets, crown-based powers and finite
//! quotient towers.

mod error;
mod limits;

pub mod arith;
pub mod catalog;
pub mod crowns;
pub mod generation;
pub mod invariants;
pub mod perm_core;
pub mod towers;

pub use error::{Error, ErrorClass, Result};
pub use limits::Limits;
