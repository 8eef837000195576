//! Permutation representations of Artin braid groups: permutation
//! algebra, block permutations, the standard model families, structural
//! statistics, conjugacy normal forms, coset actions and exhaustive checks.
//!
//! Points are 1-based at every public interface. Composition is right to
//! left: `(f·g)(x) = f(g(x))`, and `f.conjugate(g)` is `g⁻¹·f·g`.
#![no_std]

extern crate alloc;

pub mod analysis;
pub mod block;
pub mod braid;
pub mod conjugacy;
pub mod coset;
pub mod error;
pub mod perm;
pub mod search;

pub use block::CPermSpec;
pub use braid::{BraidRep, ModelParams};
pub use conjugacy::NormalForm;
pub use coset::CosetSpace;
pub use error::*;
pub use perm::{CycleType, Permutation};
pub use search::SearchReport;
