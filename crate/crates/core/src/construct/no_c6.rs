use std::collections::BTreeMap;

use crate::certificate::Certificate;
use crate::coloring::PartialColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::neighborhood::{count_c6_through_vertex, BunchStructure, LocalView};

use super::{color_center, finish, require_scope, star_b_vertices, Draft, Strategy};

/// Monochromatic edges `(u, v)` with `v` in bunch `t` and `u` in an earlier
/// bunch, ordered by the position of `v` and then by `u`.
pub fn monochromatic_edges(
    c: &PartialColoring,
    g: &Graph,
    bs: &BunchStructure,
    t: usize,
) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for &v in bs.bunch(t) {
        let Some(color) = c.get(v) else { continue };
        for &u in g.neighbors(v) {
            if c.get(u) == Some(color) && bs.bunch_of(u).is_some_and(|i| i < t) {
                out.push((u, v));
            }
        }
    }
    out
}

fn check_repair_input(c: &PartialColoring, g: &Graph, bs: &BunchStructure, t: usize) -> Result<()> {
    let d = bs.len();
    if t == 0 || t >= d {
        return Err(Error::InvalidParameter(format!("bunch {t} of {d}")));
    }
    let view = LocalView::new(g, bs.center());
    for (i, bunch) in bs.bunches()[..=t].iter().enumerate() {
        let mut colors = Vec::with_capacity(bunch.len());
        for &v in bunch {
            colors.push(c.get(v).ok_or_else(|| {
                Error::PreconditionViolated(format!("vertex {v} of bunch {i} is uncolored"))
            })?);
            let p = view.s2_degree(v);
            if p > 1 {
                return Err(Error::PreconditionViolated(format!(
                    "second-sphere vertex {v} has induced degree {p}"
                )));
            }
        }
        colors.sort_unstable();
        let expected: Vec<usize> = (1..=d).filter(|&col| col != i + 1).collect();
        if colors != expected {
            return Err(Error::PreconditionViolated(format!(
                "bunch {i} is not colored bijectively with [d] minus {}",
                i + 1
            )));
        }
    }
    Ok(())
}

/// Removes all monochromatic edges between bunch `t` and earlier bunches by
/// swapping colors inside bunch `t`. Returns the monochromatic edge count
/// before the first swap and after each swap; it ends at zero and strictly
/// decreases.
///
/// Requires bunches `0..=t` colored bijectively with `[d]` minus their own
/// color and every second-sphere vertex in them to have induced degree at
/// most one.
pub fn swap_repair(
    c: &mut PartialColoring,
    g: &Graph,
    bs: &BunchStructure,
    t: usize,
) -> Result<Vec<usize>> {
    check_repair_input(c, g, bs, t)?;
    let d = bs.len();
    let bunch = bs.bunch(t);
    // With induced degree at most one there is at most one backward neighbor.
    let back: Vec<Option<usize>> = bunch
        .iter()
        .map(|&v| bs.backward_neighbors(g, v).map(|b| b.first().copied()))
        .collect::<Result<_>>()?;
    let color_of = |c: &PartialColoring, v: usize| c.get(v).unwrap_or(0);

    let mut mono = monochromatic_edges(c, g, bs, t);
    let mut trace = vec![mono.len()];
    while let Some(&(u, v)) = mono.first() {
        let k = color_of(c, v);
        let i = bs.bunch_of(u).unwrap_or(usize::MAX);
        let (_, s) = bs.locate(v).unwrap_or((t, 0));
        let others = || (0..bunch.len()).filter(move |&p| p != s);
        let back_bunch = |p: usize| back[p].and_then(|w| bs.bunch_of(w));

        let shared_bunch = |c: &PartialColoring| {
            let mut by_bunch: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for p in others() {
                if let Some(l) = back_bunch(p).filter(|&l| l != i) {
                    by_bunch.entry(l).or_default().push(p);
                }
            }
            by_bunch
                .into_values()
                .filter(|ps| ps.len() >= 2)
                .flat_map(|ps| ps.into_iter())
                .find(|&p| back[p].is_some_and(|w| color_of(c, w) != k))
        };
        let in_own_class = || others().find(|&p| back_bunch(p) == Some(k - 1));

        let partner = others()
            .find(|&p| back[p].is_none())
            .or_else(|| others().find(|&p| back_bunch(p) == Some(i)))
            .or_else(|| {
                if t + 1 < d {
                    shared_bunch(c)
                } else {
                    in_own_class().or_else(|| shared_bunch(c))
                }
            });
        let Some(p) = partner else {
            return Err(Error::RepairStuck {
                bunch: t,
                vertex: v,
            });
        };
        let (vp, vs) = (bunch[p], bunch[s]);
        let (cp, cs) = (color_of(c, vp), color_of(c, vs));
        c.set(vp, cs)?;
        c.set(vs, cp)?;

        let next = monochromatic_edges(c, g, bs, t);
        if next.len() >= mono.len() {
            return Err(Error::InternalInvariantViolation(format!(
                "swap {vs}<->{vp} in bunch {t} left {} monochromatic edges (was {})",
                next.len(),
                mono.len()
            )));
        }
        trace.push(next.len());
        mono = next;
    }
    Ok(trace)
}

/// Colors `g` with `d + 1` colors around a center that lies on no six-cycle.
pub fn color_no_c6(g: &Graph, x: usize) -> Result<Certificate> {
    color_no_c6_with(g, x, g.girth())
}

pub(crate) fn color_no_c6_with(g: &Graph, x: usize, girth: Option<usize>) -> Result<Certificate> {
    let d = require_scope(g, x, girth)?;
    let cycles = count_c6_through_vertex(g, x)?;
    if cycles > 0 {
        return Err(Error::PreconditionViolated(format!(
            "vertex {x} lies on {cycles} six-cycles"
        )));
    }
    let bs = BunchStructure::new(g, x, None)?;
    let mut c = PartialColoring::new(g.n(), d + 1);
    color_center(&mut c, x, bs.neighbor_order())?;
    for (color, &v) in (2..=d).zip(bs.bunch(0)) {
        c.set(v, color)?;
    }
    for t in 1..d {
        let colors = (1..=d).filter(|&col| col != t + 1);
        for (color, &v) in colors.zip(bs.bunch(t)) {
            c.set(v, color)?;
        }
        swap_repair(&mut c, g, &bs, t)?;
    }
    finish(
        g,
        Draft {
            strategy: Strategy::NoC6,
            center: x,
            neighbor_order: bs.neighbor_order().to_vec(),
            row_order: None,
            b_vertices: star_b_vertices(x, bs.neighbor_order()),
            girth,
            coloring: &c,
        },
    )
}
