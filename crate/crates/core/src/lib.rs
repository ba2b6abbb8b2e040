//! Hypergraph bialgebras in exact arithmetic.
//!
//! Hypergraphs are incidence matrices with at most 64 edges and 64 vertices.
//! The crate provides the coproducts, counits and products on isomorphism
//! classes, checks their algebraic laws on generated instances, and computes
//! chromatic and rainbow polynomial quartets.

pub mod canon;
pub mod chromatic;
pub mod cli;
pub mod coalgebra;
pub mod error;
pub mod hgx;
pub mod hypergraph;
pub mod laws;
pub mod linear;
pub mod partition;

pub use canon::{canonical_key, CanonicalKey};
pub use error::{Error, Result};
pub use hypergraph::{Component, Hypergraph, IndexSet, Involution, SpecialSubsets};
pub use linear::{Coeff, Key, LinComb, Pair, Triple};
