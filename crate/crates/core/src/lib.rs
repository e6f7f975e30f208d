//! Core library for the widdershins spiral permutation class: pattern
//! containment, class enumeration and forbidden-pattern bases, permutation
//! graphs with their forbidden-subgraph catalog, and labelled-graph
//! antichains.

pub mod error;
pub mod order;
pub mod pattern;
pub mod perm;
pub mod widdershins;

pub use error::{Error, Result};
pub use perm::Permutation;
