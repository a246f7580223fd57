//! Constructions of b-colorings with `d + 1` colors around a center vertex.
//!
//! Every public strategy returns a [`Certificate`] that has already passed
//! [`verify_certificate`]; a rejection there is an internal bug and surfaces
//! as [`Error::InternalInvariantViolation`].

mod bounded;
mod lemma;
mod no_c6;
mod report;
mod two_bunch;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::certificate::{
    verify_certificate, Certificate, Fingerprint, Verdict, CERTIFICATE_VERSION,
};
use crate::coloring::PartialColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use bounded::{classify_s2_degrees, color_bounded_c6, order_by_degree_sequences, C6Case};
pub use lemma::lemma_extension;
pub use no_c6::{color_no_c6, monochromatic_edges, swap_repair};
pub use report::{
    auto_color, color_choice, hypothesis_report, HypothesisReport, ScopeFlags, VertexReport,
};
pub use two_bunch::{
    check_requirements, color_two_bunch, color_two_bunch_with, order_two_bunch, BunchMatrix,
    Requirement, RequirementViolation, Subcase,
};

/// The three constructions, in the order automatic dispatch tries them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    NoC6,
    BoundedC6,
    TwoBunch,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [Strategy::NoC6, Strategy::BoundedC6, Strategy::TwoBunch];

    pub fn name(self) -> &'static str {
        match self {
            Self::NoC6 => "no-c6",
            Self::BoundedC6 => "bounded-c6",
            Self::TwoBunch => "two-bunch",
        }
    }

    /// Runs this strategy at center `x`.
    pub fn color(self, g: &Graph, x: usize) -> Result<Certificate> {
        self.color_with(g, x, g.girth())
    }

    pub(crate) fn color_with(
        self,
        g: &Graph,
        x: usize,
        girth: Option<usize>,
    ) -> Result<Certificate> {
        match self {
            Self::NoC6 => no_c6::color_no_c6_with(g, x, girth),
            Self::BoundedC6 => bounded::color_bounded_c6_with(g, x, girth),
            Self::TwoBunch => two_bunch::color_two_bunch_in(g, x, girth),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|st| st.name() == s || st.name().replace('-', "_") == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown strategy `{s}`")))
    }
}

/// Degree `d` of a `d`-regular graph with `d >= 7`, or the reason it is not.
pub(crate) fn require_degree(g: &Graph) -> Result<usize> {
    let d = g
        .regular_degree()
        .ok_or_else(|| Error::PreconditionViolated("graph is not regular".into()))?;
    if d < 7 {
        return Err(Error::PreconditionViolated(format!("d={d} < 7")));
    }
    Ok(d)
}

pub(crate) fn require_girth(girth: Option<usize>, exact: bool) -> Result<()> {
    match girth {
        Some(5) => Ok(()),
        None | Some(6..) if !exact => Ok(()),
        Some(len) => Err(Error::PreconditionViolated(format!("girth {len} != 5"))),
        None => Err(Error::PreconditionViolated("graph is acyclic".into())),
    }
}

/// Checks the center exists and the whole-graph hypotheses shared by all
/// strategies:
/// `d`-regular with `d >= 7` and girth exactly five. Returns `d`.
pub(crate) fn require_scope(g: &Graph, x: usize, girth: Option<usize>) -> Result<usize> {
    g.check_vertex(x)?;
    let d = require_degree(g)?;
    require_girth(girth, true)?;
    Ok(d)
}

/// Colors the center `d + 1` and neighbor `i` (0-based) color `i + 1`.
pub(crate) fn color_center(
    c: &mut PartialColoring,
    x: usize,
    neighbor_order: &[usize],
) -> Result<()> {
    c.set(x, neighbor_order.len() + 1)?;
    for (i, &xi) in neighbor_order.iter().enumerate() {
        c.set(xi, i + 1)?;
    }
    Ok(())
}

pub(crate) struct Draft<'a> {
    pub strategy: Strategy,
    pub center: usize,
    pub neighbor_order: Vec<usize>,
    pub row_order: Option<Vec<usize>>,
    pub b_vertices: BTreeMap<usize, usize>,
    pub girth: Option<usize>,
    pub coloring: &'a PartialColoring,
}

/// Completes greedily, packages the result and runs the verifier on it.
pub(crate) fn finish(g: &Graph, draft: Draft<'_>) -> Result<Certificate> {
    let done = draft.coloring.greedy_complete(g, None)?;
    let cert = Certificate {
        version: CERTIFICATE_VERSION,
        fingerprint: Fingerprint::with_girth(g, draft.girth),
        k: done.k(),
        strategy: draft.strategy.name().to_string(),
        center: draft.center,
        neighbor_order: draft.neighbor_order,
        row_order: draft.row_order,
        colors: done.to_total()?,
        b_vertices: draft.b_vertices,
        provenance: None,
    };
    match verify_certificate(&cert, g) {
        Verdict::Accept => Ok(cert),
        Verdict::Reject(reason) => Err(Error::InternalInvariantViolation(format!(
            "{} certificate at center {} rejected: {reason}",
            draft.strategy, draft.center
        ))),
    }
}

/// Claims `x` for class `d + 1` and neighbor `i` for class `i + 1`.
pub(crate) fn star_b_vertices(x: usize, neighbor_order: &[usize]) -> BTreeMap<usize, usize> {
    let mut claims: BTreeMap<usize, usize> = neighbor_order
        .iter()
        .enumerate()
        .map(|(i, &xi)| (i + 1, xi))
        .collect();
    claims.insert(neighbor_order.len() + 1, x);
    claims
}
