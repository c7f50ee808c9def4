//! Minimum dominator colorings of oriented paths.
//!
//! An oriented path is the undirected path `v1 - v2 - ... - vn` with a
//! direction chosen for every edge. A dominator coloring is a proper
//! coloring in which every vertex of positive out-degree has some color
//! class contained in its open out-neighborhood.
//!
//! The crate provides the linear-time coloring algorithm ([`mdc::run_mdc`]),
//! an independent checker ([`validate`]), an exhaustive exact solver for
//! small instances ([`oracle`]), an orientation-space survey against the
//! closed-form minimum over all orientations ([`survey`]), and a scaling
//! harness ([`bench`]).

pub mod bench;
pub mod error;
pub mod mdc;
pub mod oracle;
pub mod path;
pub mod survey;
pub mod validate;

pub use error::{Error, Result};
pub use mdc::{run_mdc, Coloring};
pub use path::{DegreeProfile, Direction, OrientedPath};
pub use validate::{validate, ValidationReport};
