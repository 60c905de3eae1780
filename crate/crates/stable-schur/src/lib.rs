//! Combinatorial and linear-algebra invariants of the stable representation
//! categories attached to the classical groups.
//!
//! The library has two layers.
//!
//! The combinatorial layer works in the Grothendieck groups of the stable
//! categories: partitions and their tableau counts ([`partitions`]), the
//! branching matrix between injective and simple classes ([`stable_rep`]),
//! specialization to a fixed rank ([`specialization`]), and Hilbert
//! functions, polynomials, and series of classes in the full Grothendieck
//! group including torsion ([`kgroup`]).
//!
//! The engine layer ([`engine`]) realizes finitely generated submodules of
//! tensor functors concretely, level by level, with exact rational
//! arithmetic, and recomputes the same invariants independently: level
//! dimensions, torsion, invariants under the stabilizer block, and
//! saturation. Agreement between the two layers is what the verification
//! suite in the companion CLI crate checks.
//!
//! All arithmetic is exact. Dimensions and multiplicities are integers;
//! linear algebra runs over arbitrary-precision rationals. The crate is
//! `no_std` (with `alloc`) so the core can be embedded anywhere; anything
//! involving files, JSON, or a terminal lives in the companion crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod engine;
pub mod kgroup;
pub mod partitions;
pub mod poly;
pub mod specialization;
pub mod stable_rep;

pub use partitions::Partition;
pub use stable_rep::{Basis, GroupFamily, Label, StableClass};
