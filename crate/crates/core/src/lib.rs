//! Finite lattices, the adjunct operation, and zero-divisor graphs.
//!
//! The crate is organised bottom-up:
//!
//! - [`order`]: posets and lattices with meet/join tables and the order
//!   predicates (irreducibility, 0-distributivity, ideals).
//! - [`adjunct`]: the adjunct operation `L1 ]_a^b L2`, adjunct expressions
//!   (text format and evaluation), crowns, dismantlability and adjunct
//!   decomposition.
//! - [`graph`]: labelled simple graphs, diameter, girth, isomorphism, DOT.
//! - [`derived`]: zero-divisor, cover, comparability and incomparability
//!   graphs of a lattice, and the compositional zero-divisor graph of an
//!   adjunct.
//! - [`tree`]: rooted trees, non-ancestor graphs, and the conversions
//!   between rooted trees and lower dismantlable lattices.
//! - [`enumerate`]: exhaustive generation of lattices up to isomorphism.
//! - [`verify`]: the property suites run by `zdg check`.

pub mod adjunct;
pub mod derived;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod order;
pub mod tree;
pub mod verify;

pub use adjunct::{AdjunctExpr, ChainLeaf, Crown};
pub use error::{Error, Result};
pub use graph::{Length, SimpleGraph};
pub use order::{ElemId, IdealSet, Lattice, Poset};
pub use tree::RootedTree;
