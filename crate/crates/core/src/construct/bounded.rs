use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::neighborhood::{BunchStructure, LocalView};
use crate::transversal::color_bunch;

use super::lemma::seed;
use super::{finish, require_scope, star_b_vertices, Draft, Strategy};

/// Shape of the induced second-sphere degrees when at most five six-cycles
/// pass through the center inside `N2[x]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum C6Case {
    /// No degree above two and at most five vertices of degree two.
    One,
    /// One vertex of degree three and at most two of degree two.
    Two,
}

/// Classifies a second-sphere degree multiset, or `None` when it accounts for
/// more than five six-cycles.
pub fn classify_s2_degrees(degrees: &[usize]) -> Option<C6Case> {
    let cycles: usize = degrees.iter().map(|&p| p * p.saturating_sub(1) / 2).sum();
    if cycles > 5 {
        return None;
    }
    let count = |p: usize| degrees.iter().filter(|&&q| q == p).count();
    match (count(3), count(2)) {
        (0, twos) if twos <= 5 => Some(C6Case::One),
        (1, twos) if twos <= 2 => Some(C6Case::Two),
        _ => None,
    }
}

/// Neighbors of `x` sorted by the non-ascending second-sphere degree
/// sequence of their bunch, largest sequence first, ties by identifier.
pub fn order_by_degree_sequences(g: &Graph, x: usize) -> Result<Vec<usize>> {
    g.check_vertex(x)?;
    if let Some(len) = g.girth().filter(|&len| len < 5) {
        return Err(Error::GirthTooSmall(format!("girth is {len}")));
    }
    Ok(order_in(g, x, &LocalView::new(g, x)))
}

fn order_in(g: &Graph, x: usize, view: &LocalView<'_>) -> Vec<usize> {
    let mut keyed: Vec<(Vec<usize>, usize)> = g
        .neighbors(x)
        .iter()
        .map(|&s| {
            let mut seq: Vec<usize> = g
                .neighbors(s)
                .iter()
                .filter(|&&v| v != x)
                .map(|&v| view.s2_degree(v))
                .collect();
            seq.sort_unstable_by(|a, b| b.cmp(a));
            (seq, s)
        })
        .collect();
    keyed.sort_by(|(sa, a), (sb, b)| sb.cmp(sa).then(a.cmp(b)));
    keyed.into_iter().map(|(_, s)| s).collect()
}

/// Colors `g` with `d + 1` colors around a center lying on at most five
/// six-cycles inside `G[N2[x]]`.
pub fn color_bounded_c6(g: &Graph, x: usize) -> Result<Certificate> {
    color_bounded_c6_with(g, x, g.girth())
}

pub(crate) fn color_bounded_c6_with(
    g: &Graph,
    x: usize,
    girth: Option<usize>,
) -> Result<Certificate> {
    let d = require_scope(g, x, girth)?;
    let view = LocalView::new(g, x);
    let cycles = view.c6_in_n2();
    if cycles > 5 {
        return Err(Error::PreconditionViolated(format!(
            "{cycles} six-cycles through {x} inside N2[x], more than 5"
        )));
    }
    let degrees: Vec<usize> = view.s2().into_iter().map(|v| view.s2_degree(v)).collect();
    let case = classify_s2_degrees(&degrees).ok_or_else(|| {
        Error::InternalInvariantViolation(format!("degree multiset {degrees:?} unclassified"))
    })?;

    let order = order_in(g, x, &view);
    let bs = BunchStructure::new(g, x, Some(&order))?;
    let limit = match case {
        C6Case::One => 5,
        C6Case::Two => 3,
    };
    if let Some(i) = (limit..d).find(|&i| bs.bunch(i).iter().any(|&v| view.s2_degree(v) > 1)) {
        return Err(Error::InternalInvariantViolation(format!(
            "bunch {i} holds a vertex of induced degree above one in case {case:?}"
        )));
    }

    let mut c = seed(g, &bs, d)?;
    for t in 4..d {
        color_bunch(&mut c, g, &bs, t).map_err(|e| match e {
            Error::HallFailure { bunch, violator } => Error::InternalInvariantViolation(format!(
                "bunch {bunch} has no transversal (violator {violator:?})"
            )),
            other => other,
        })?;
    }
    finish(
        g,
        Draft {
            strategy: Strategy::BoundedC6,
            center: x,
            neighbor_order: order.clone(),
            row_order: None,
            b_vertices: star_b_vertices(x, &order),
            girth,
            coloring: &c,
        },
    )
}
