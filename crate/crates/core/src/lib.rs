//! Exact computations on the Birkhoff polytope graph `G(Ω_n)`: the Cayley
//! graph of `Sym(n)` in which two permutations are adjacent when their
//! quotient `σ⁻¹τ` is a single cycle.
//!
//! The crate covers permutation arithmetic, explicit cliques and independent
//! sets, independent subgroups with maximality certificates, the recursive
//! lower-bound constructions for the independence number, and exact
//! branch-and-bound searches.

pub mod acceptance;
mod bits;
pub mod bounds;
pub mod builders;
pub mod config;
pub mod constructions;
pub mod data;
pub mod error;
pub mod graph;
pub mod perm;
pub mod permset;
pub mod solvers;

pub use config::Budget;
pub use error::{Error, Result};
pub use graph::{adjacent, BitGraph};
pub use perm::{format_cycles, parse_cycles, CycleDecomposition, Parity, Permutation};
pub use permset::{PermSet, PermSetDocument};
