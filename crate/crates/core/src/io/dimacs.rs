//! DIMACS edge format: `p edge n m`, then `e u v` lines with 1-based vertices.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn malformed(line: usize, reason: impl Into<String>) -> Error {
    Error::MalformedDimacs {
        line,
        reason: reason.into(),
    }
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut last_line = 1;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let mut fields = raw.split_whitespace();
        let Some(tag) = fields.next() else { continue };
        match (tag, n) {
            ("c", _) => continue,
            ("p", None) => {
                let rest: Vec<&str> = fields.collect();
                let [_format, count, _m] = rest.as_slice() else {
                    return Err(malformed(line_no, "expected `p <format> <n> <m>`"));
                };
                let count = count
                    .parse()
                    .map_err(|_| malformed(line_no, format!("bad vertex count `{count}`")))?;
                n = Some(count);
            }
            ("p", Some(_)) => return Err(malformed(line_no, "duplicate problem line")),
            (_, None) => return Err(malformed(line_no, "missing problem line")),
            ("e", Some(count)) => {
                let ends: Vec<&str> = fields.collect();
                let [u, v] = ends.as_slice() else {
                    return Err(malformed(line_no, "expected `e <u> <v>`"));
                };
                let parse = |s: &str| -> Result<usize> {
                    match s.parse::<usize>() {
                        Ok(x) if (1..=count).contains(&x) => Ok(x - 1),
                        _ => Err(malformed(
                            line_no,
                            format!("vertex `{s}` outside 1..={count}"),
                        )),
                    }
                };
                let (u, v) = (parse(u)?, parse(v)?);
                if u == v {
                    return Err(malformed(line_no, "self-loop"));
                }
                edges.push((u, v));
            }
            (other, Some(_)) => {
                return Err(malformed(line_no, format!("unknown line type `{other}`")))
            }
        }
    }
    let n = n.ok_or_else(|| malformed(last_line.max(1), "missing problem line"))?;
    Graph::new(n, &edges)
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}
