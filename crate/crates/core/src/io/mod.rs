//! Graph interchange formats and the certificate JSON document.

mod certificate;
mod dimacs;
mod graph6;

pub use certificate::{read_certificate, write_certificate};
pub use dimacs::{parse_dimacs, write_dimacs};
pub use graph6::{parse_graph6, write_graph6};

use crate::error::Result;
use crate::graph::Graph;

/// Parses DIMACS when the first non-blank line is a `p` or `c` line, graph6
/// otherwise. A bare leading `p` or `c` is also how graph6 encodes 49 and 36
/// vertices, so the letter must be followed by whitespace or end the input.
pub fn parse_auto(text: &str) -> Result<Graph> {
    let mut bytes = text.trim_start().bytes();
    match (bytes.next(), bytes.next()) {
        (Some(b'p' | b'c'), None) => parse_dimacs(text),
        (Some(b'p' | b'c'), Some(b)) if b.is_ascii_whitespace() => parse_dimacs(text),
        _ => parse_graph6(text),
    }
}
