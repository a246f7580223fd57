//! Constructive b-colorings with `d + 1` colors for `d`-regular graphs of girth five.
//!
//! The crate builds colorings around a chosen center vertex `x` using three
//! strategies (no six-cycle through `x`, at most five six-cycles inside the
//! second closed neighborhood of `x`, and two closed bunches at `x`), emits a
//! [`Certificate`] for every run and checks it with an independent verifier.
//! Exhaustive oracles in [`oracle`] certify results on small instances.

pub mod certificate;
pub mod cli;
pub mod coloring;
pub mod construct;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod neighborhood;
pub mod oracle;
pub mod transversal;

pub use certificate::{verify_certificate, Certificate, Fingerprint, RejectReason, Verdict};
pub use coloring::PartialColoring;
pub use error::{Error, Result};
pub use graph::Graph;
pub use neighborhood::BunchStructure;
