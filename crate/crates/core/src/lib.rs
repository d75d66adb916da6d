// SPDX-License-Identifier: MIT
//! Maximal ancestral graphs (MAGs) and their Markov equivalence classes.
//!
//! The crate decides m-separation, ancestrality and maximality, tests Markov
//! equivalence through colliders with order, and builds the join of an
//! equivalence class (`sup[G]`) from a single member with a set of
//! orientation rules. Everything the rules claim can be checked against the
//! brute-force references in [`oracle`].
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod ancestral;
pub mod chordal;
pub mod equivalence;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod oracle;
pub mod orient;
pub mod projection;
pub mod separation;

pub use error::{Error, Internal, Result};
pub use graph::{Edge, EdgeKind, Mark, MixedGraph, Path, Relations, Triple};
