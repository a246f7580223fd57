//! graph6: a size header followed by the upper triangle of the adjacency
//! matrix in column-major order, six bits per printable byte (offset 63).

use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_SHORT: usize = 62;
const MAX_MEDIUM: usize = 258_047;

fn malformed(position: usize, reason: impl Into<String>) -> Error {
    Error::MalformedGraph6 {
        position,
        reason: reason.into(),
    }
}

/// Parses the first graph6 record of `text`. An optional `>>graph6<<`
/// header and surrounding whitespace are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_start();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let line = text.lines().next().unwrap_or("").trim_end();
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(malformed(0, "empty input"));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(malformed(
            pos,
            format!("byte {:#04x} outside 63..=126", bytes[pos]),
        ));
    }
    let (n, header_len) = if bytes[0] != 126 {
        (usize::from(bytes[0] - 63), 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        return Err(malformed(1, "8-byte size form is not supported"));
    } else if bytes.len() >= 4 {
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
        (n, 4)
    } else {
        return Err(malformed(bytes.len(), "truncated size header"));
    };

    let bits = n * n.saturating_sub(1) / 2;
    let data = &bytes[header_len..];
    let expected = bits.div_ceil(6);
    if data.len() != expected {
        return Err(malformed(
            header_len + data.len().min(expected),
            format!(
                "expected {expected} data bytes for n = {n}, found {}",
                data.len()
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if bits % 6 != 0 {
        let last = data[data.len() - 1] - 63;
        let pad_mask = (1u8 << (6 - bits % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(malformed(bytes.len() - 1, "nonzero padding bits"));
        }
    }
    Graph::new(n, &edges)
}

/// Canonical graph6 encoding, without a trailing newline.
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= MAX_SHORT {
        out.push(n as u8 + 63);
    } else if n <= MAX_MEDIUM {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 0x3f) as u8 + 63));
    } else {
        return Err(Error::InvalidParameter(format!(
            "graph6 writer supports at most {MAX_MEDIUM} vertices, got {n}"
        )));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn tiny_graphs() {
        let one = parse_graph6("@").unwrap();
        assert_eq!((one.n(), one.m()), (1, 0));
        assert_eq!(write_graph6(&one).unwrap(), "@");

        let k2 = parse_graph6("A_\n").unwrap();
        assert_eq!(k2.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(write_graph6(&k2).unwrap(), "A_");
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
    }

    #[test]
    fn petersen_round_trip() {
        let p = generators::petersen();
        let text = write_graph6(&p).unwrap();
        assert_eq!(parse_graph6(&text).unwrap(), p);
        assert_eq!(parse_graph6(&format!(">>graph6<<{text}\n")).unwrap(), p);
    }

    #[test]
    fn medium_size_header() {
        let g = generators::cycle(70).unwrap();
        let text = write_graph6(&g).unwrap();
        assert!(text.starts_with("~?@E"));
        assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        for bad in ["", "A", "A_?", "Aa", "A\u{7f}", "~", "~~??????", "A`"] {
            assert!(
                matches!(parse_graph6(bad), Err(Error::MalformedGraph6 { .. })),
                "{bad:?}"
            );
        }
    }
}
