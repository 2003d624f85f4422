//! Colored five-vertex lattice models, Demazure characters and atoms, and
//! the tableau crystals that connect them.

pub mod adjust;
pub mod crystal;
pub mod error;
pub mod laurent;
pub mod lattice;
pub mod patterns;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
