use rayon::prelude::*;
use serde::Serialize;

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::neighborhood::{count_c6_through_vertex, LocalView};

use super::Strategy;

/// Whole-graph flags delimiting the open cases of the `d + 1` question.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScopeFlags {
    pub degree_at_least_7: bool,
    pub girth_is_5: bool,
    pub contains_c6: bool,
    /// `n <= 2d^3 - 2d^2 + 2d - 1`.
    pub within_order_bound: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexReport {
    pub vertex: usize,
    /// Six-cycles of the whole graph through the vertex.
    pub c6_through: usize,
    /// Six-cycles through the vertex inside `G[N2[v]]`; absent below girth 5.
    pub c6_in_n2: Option<usize>,
    /// Closed bunches at the vertex; absent below girth 5.
    pub closed_bunches: Option<usize>,
    pub strategies: Vec<Strategy>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisReport {
    pub n: usize,
    pub m: usize,
    /// Common degree, `None` when the graph is not regular.
    pub degree: Option<usize>,
    pub girth: Option<usize>,
    pub flags: ScopeFlags,
    pub vertices: Vec<VertexReport>,
}

impl HypothesisReport {
    /// `(vertex, strategy)` pairs whose preconditions hold, by vertex.
    pub fn applicable(&self) -> Vec<(usize, Strategy)> {
        self.vertices
            .iter()
            .flat_map(|v| v.strategies.iter().map(move |&s| (v.vertex, s)))
            .collect()
    }

    /// Why nothing applies, or an empty list if something does.
    pub fn reasons(&self) -> Vec<String> {
        let mut global = Vec::new();
        match self.degree {
            None => global.push("graph is not regular".to_string()),
            Some(d) if d < 7 => global.push(format!("d={d} < 7")),
            _ => {}
        }
        if !self.flags.girth_is_5 {
            global.push(match self.girth {
                Some(len) => format!("girth {len} != 5"),
                None => "graph is acyclic".to_string(),
            });
        }
        if !global.is_empty() || self.vertices.iter().any(|v| !v.strategies.is_empty()) {
            return global;
        }
        const SHOWN: usize = 10;
        let mut out: Vec<String> = self
            .vertices
            .iter()
            .take(SHOWN)
            .map(|v| {
                format!(
                    "vertex {}: {} six-cycles through it, {} inside N2 (> 5), {} closed bunches (< 2)",
                    v.vertex,
                    v.c6_through,
                    v.c6_in_n2.unwrap_or(0),
                    v.closed_bunches.unwrap_or(0)
                )
            })
            .collect();
        if self.vertices.len() > SHOWN {
            out.push(format!("and {} more vertices", self.vertices.len() - SHOWN));
        }
        out
    }
}

/// Runs `f` on a pool sized by `BCHROME_THREADS` when set.
fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let threads = std::env::var("BCHROME_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&t| t > 0);
    match threads.and_then(|t| rayon::ThreadPoolBuilder::new().num_threads(t).build().ok()) {
        Some(pool) => pool.install(f),
        None => f(),
    }
}

/// Per-vertex census and the strategies whose preconditions hold.
pub fn hypothesis_report(g: &Graph) -> HypothesisReport {
    let degree = g.regular_degree();
    let girth = g.girth();
    let girth_ok = girth.is_some_and(|len| len >= 5);
    let in_scope = degree.is_some_and(|d| d >= 7) && girth == Some(5);
    let vertices: Vec<VertexReport> = with_pool(|| {
        (0..g.n())
            .into_par_iter()
            .map(|v| {
                let c6_through = count_c6_through_vertex(g, v).unwrap_or(0);
                let (c6_in_n2, closed_bunches) = if girth_ok {
                    let view = LocalView::new(g, v);
                    (
                        Some(view.c6_in_n2()),
                        Some(view.closed_bunch_neighbors().len()),
                    )
                } else {
                    (None, None)
                };
                let mut strategies = Vec::new();
                if in_scope {
                    if c6_through == 0 {
                        strategies.push(Strategy::NoC6);
                    }
                    if c6_in_n2.is_some_and(|c| c <= 5) {
                        strategies.push(Strategy::BoundedC6);
                    }
                    if closed_bunches.is_some_and(|c| c >= 2) {
                        strategies.push(Strategy::TwoBunch);
                    }
                }
                VertexReport {
                    vertex: v,
                    c6_through,
                    c6_in_n2,
                    closed_bunches,
                    strategies,
                }
            })
            .collect()
    });
    let flags = ScopeFlags {
        degree_at_least_7: degree.is_some_and(|d| d >= 7),
        girth_is_5: girth == Some(5),
        contains_c6: vertices.iter().any(|v| v.c6_through > 0),
        within_order_bound: degree.is_some_and(|d| g.n() + 2 * d * d < 2 * d * d * d + 2 * d),
    };
    HypothesisReport {
        n: g.n(),
        m: g.m(),
        degree,
        girth,
        flags,
        vertices,
    }
}

/// Tries no-C6, bounded-C6 and two-bunch at each vertex in turn and returns
/// the first certificate. A strategy whose preconditions hold but which
/// fails anyway is reported at once rather than skipped.
pub fn auto_color(g: &Graph) -> Result<Certificate> {
    let report = hypothesis_report(g);
    let pairs = report.applicable();
    if pairs.is_empty() {
        return Err(Error::NoStrategyApplies(report.reasons()));
    }
    for (v, s) in pairs {
        match s.color_with(g, v, report.girth) {
            Ok(cert) => return Ok(cert),
            Err(Error::PreconditionViolated(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::NoStrategyApplies(vec![
        "every applicable strategy rejected its preconditions".into(),
    ]))
}

/// Colors with `strategy` at `vertex`. A missing strategy tries all three
/// in order; a missing vertex takes the first vertex where the strategy
/// applies.
pub fn color_choice(
    g: &Graph,
    strategy: Option<Strategy>,
    vertex: Option<usize>,
) -> Result<Certificate> {
    match (strategy, vertex) {
        (Some(s), Some(v)) => s.color(g, v),
        (None, None) => auto_color(g),
        (None, Some(v)) => {
            let mut reasons = Vec::new();
            for s in Strategy::ALL {
                match s.color(g, v) {
                    Ok(cert) => return Ok(cert),
                    Err(Error::PreconditionViolated(r)) => reasons.push(format!("{s}: {r}")),
                    Err(e) => return Err(e),
                }
            }
            Err(Error::NoStrategyApplies(reasons))
        }
        (Some(s), None) => {
            let report = hypothesis_report(g);
            match report.applicable().into_iter().find(|&(_, t)| t == s) {
                Some((v, _)) => s.color_with(g, v, report.girth),
                None => {
                    let mut reasons = report.reasons();
                    if reasons.is_empty() {
                        reasons.push(format!("no vertex satisfies the {s} preconditions"));
                    }
                    Err(Error::PreconditionViolated(reasons.join("; ")))
                }
            }
        }
    }
}
