//! Legendrian fronts as event words.
//!
//! The crate models closed fronts of Legendrian links in standard contact
//! R^3 as words of cusp and crossing events, computes their classical
//! invariants, rewrites them by front moves, builds push-offs and positive
//! Whitehead doubles, and evaluates the slice-Bennequin and Stein 2-handle
//! obstructions.

pub mod code;
pub mod constructions;
pub mod error;
pub mod front;
pub mod grid;
pub mod invariants;
pub mod io;
pub mod moves;
pub mod obstructions;
pub mod oracles;
pub mod render;
pub mod report;

pub use code::{to_generic_code, GenericCode};
pub use error::{Error, Result};
pub use front::{validate, Direction, EventKind, FrontDiagram, FrontEvent, OrientedFront};
pub use grid::GridDiagram;
pub use invariants::InvariantReport;
pub use io::{parse_front, parse_grid, serialize_front, serialize_grid};

/// The README's examples, compiled and run as doctests.
#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
pub struct ReadmeDoctests;
