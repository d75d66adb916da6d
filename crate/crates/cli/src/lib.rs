// SPDX-License-Identifier: MIT
//! Text file format and DOT export for [`mag_core::MixedGraph`].
//!
//! ```text
//! # treatment example
//! vertices: Ap Azt CD4 Pcp
//! edge Ap -> CD4
//! edge Azt -> Pcp
//! edge CD4 <-> Pcp
//! ```

pub mod dot;
pub mod format;

pub use dot::dot_export;
pub use format::{parse_graph, serialize_graph, ParseError};
