//! Replayable record of a constructed b-coloring and its independent verifier.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coloring::PartialColoring;
use crate::graph::Graph;

pub const CERTIFICATE_VERSION: u32 = 1;

/// Structural summary of the graph a certificate was produced for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fingerprint {
    pub n: usize,
    pub m: usize,
    /// Common degree when the graph is regular.
    pub degree: Option<usize>,
    /// `None` for acyclic graphs.
    pub girth: Option<usize>,
}

impl Fingerprint {
    pub fn of(g: &Graph) -> Self {
        Self::with_girth(g, g.girth())
    }

    pub(crate) fn with_girth(g: &Graph, girth: Option<usize>) -> Self {
        Self {
            n: g.n(),
            m: g.m(),
            degree: g.regular_degree(),
            girth,
        }
    }
}

/// A full coloring plus every choice that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub version: u32,
    pub fingerprint: Fingerprint,
    pub k: usize,
    pub strategy: String,
    pub center: usize,
    /// Neighbors of the center in bunch order; neighbor `i` has color `i + 1`.
    pub neighbor_order: Vec<usize>,
    /// Vertices of the first bunch in row order, for row-based constructions.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub row_order: Option<Vec<usize>>,
    /// Color of every vertex, 1-based.
    pub colors: Vec<usize>,
    /// Claimed b-vertex of each color class.
    pub b_vertices: BTreeMap<usize, usize>,
    /// Where the input came from (generator spec or input digest).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

impl Certificate {
    pub fn coloring(&self) -> Option<PartialColoring> {
        PartialColoring::from_colors(self.k, &self.colors).ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RejectReason {
    UnsupportedVersion(u32),
    FingerprintMismatch {
        expected: Fingerprint,
        found: Fingerprint,
    },
    WrongLength {
        expected: usize,
        found: usize,
    },
    ColorOutOfRange {
        vertex: usize,
        color: usize,
    },
    ImproperEdge(usize, usize),
    EmptyClass(usize),
    MissingBVertex(usize),
    UnknownClass(usize),
    VertexOutOfRange(usize),
    WrongClass {
        class: usize,
        vertex: usize,
    },
    NotABVertex {
        class: usize,
        vertex: usize,
    },
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::UnsupportedVersion(v) => write!(f, "unsupported certificate version {v}"),
            Self::FingerprintMismatch { expected, found } => write!(
                f,
                "fingerprint mismatch: graph has {expected:?}, certificate claims {found:?}"
            ),
            Self::WrongLength { expected, found } => {
                write!(f, "expected {expected} colors, found {found}")
            }
            Self::ColorOutOfRange { vertex, color } => {
                write!(f, "vertex {vertex} has color {color} outside 1..=k")
            }
            Self::ImproperEdge(u, v) => write!(f, "edge {u}-{v} is monochromatic"),
            Self::EmptyClass(c) => write!(f, "color class {c} is empty"),
            Self::MissingBVertex(c) => write!(f, "no b-vertex claimed for class {c}"),
            Self::UnknownClass(c) => write!(f, "b-vertex claimed for nonexistent class {c}"),
            Self::VertexOutOfRange(v) => write!(f, "claimed vertex {v} out of range"),
            Self::WrongClass { class, vertex } => {
                write!(
                    f,
                    "vertex {vertex} claimed for class {class} has another color"
                )
            }
            Self::NotABVertex { class, vertex } => {
                write!(
                    f,
                    "vertex {vertex} claimed for class {class} is not a b-vertex"
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject(RejectReason),
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Self::Accept)
    }
}

/// Checks a certificate against `g` from scratch: fingerprint, totality,
/// properness, nonempty classes and genuine claimed b-vertices. The first
/// failing check is reported.
pub fn verify_certificate(cert: &Certificate, g: &Graph) -> Verdict {
    match check(cert, g) {
        Ok(()) => Verdict::Accept,
        Err(reason) => Verdict::Reject(reason),
    }
}

fn check(cert: &Certificate, g: &Graph) -> Result<(), RejectReason> {
    if cert.version != CERTIFICATE_VERSION {
        return Err(RejectReason::UnsupportedVersion(cert.version));
    }
    let actual = Fingerprint::of(g);
    if actual != cert.fingerprint {
        return Err(RejectReason::FingerprintMismatch {
            expected: actual,
            found: cert.fingerprint.clone(),
        });
    }
    if cert.colors.len() != g.n() {
        return Err(RejectReason::WrongLength {
            expected: g.n(),
            found: cert.colors.len(),
        });
    }
    let k = cert.k;
    for (v, &color) in cert.colors.iter().enumerate() {
        if color == 0 || color > k {
            return Err(RejectReason::ColorOutOfRange { vertex: v, color });
        }
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| cert.colors[u] == cert.colors[v]) {
        return Err(RejectReason::ImproperEdge(u, v));
    }
    let mut sizes = vec![0usize; k + 1];
    for &color in &cert.colors {
        sizes[color] += 1;
    }
    if let Some(class) = (1..=k).find(|&c| sizes[c] == 0) {
        return Err(RejectReason::EmptyClass(class));
    }
    if let Some(&class) = cert.b_vertices.keys().find(|&&c| c == 0 || c > k) {
        return Err(RejectReason::UnknownClass(class));
    }
    for class in 1..=k {
        let &vertex = cert
            .b_vertices
            .get(&class)
            .ok_or(RejectReason::MissingBVertex(class))?;
        if vertex >= g.n() {
            return Err(RejectReason::VertexOutOfRange(vertex));
        }
        if cert.colors[vertex] != class {
            return Err(RejectReason::WrongClass { class, vertex });
        }
        let mut seen = vec![false; k + 1];
        seen[class] = true;
        for &w in g.neighbors(vertex) {
            seen[cert.colors[w]] = true;
        }
        if seen[1..].iter().any(|&s| !s) {
            return Err(RejectReason::NotABVertex { class, vertex });
        }
    }
    Ok(())
}
