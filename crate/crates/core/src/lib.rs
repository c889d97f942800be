//! Finite, finitely presented and symbolic semigroups: Green's relations,
//! ideals and socles, right acts, string rewriting, and certificates for
//! chain conditions on principal right ideals.

pub mod acts;
pub mod chains;
pub mod constructions;
mod error;
pub mod green;
pub mod ideals;
pub mod rewrite;
pub mod semigroup;
mod set;

pub use error::{Error, Result};
pub use semigroup::FiniteSemigroup;
pub use set::ElementSet;
