//! Output formats for the `mdc` command-line tool.

pub mod document;
pub mod dot;

pub use document::{ColoringDocument, OracleDocument};
pub use dot::export_dot;
