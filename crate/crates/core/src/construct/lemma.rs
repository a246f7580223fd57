use crate::coloring::PartialColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::neighborhood::BunchStructure;
use crate::transversal::color_bunch;

use super::{color_center, require_degree, require_girth};

/// Proper partial coloring of `N[x]` and the first four bunches in which `x`
/// and its first four neighbors (under `order`, ascending by default) are
/// b-vertices.
pub fn lemma_extension(g: &Graph, x: usize, order: Option<&[usize]>) -> Result<PartialColoring> {
    g.check_vertex(x)?;
    let d = require_degree(g)?;
    require_girth(g.girth(), false)?;
    let bs = BunchStructure::new(g, x, order)?;
    seed(g, &bs, d)
}

pub(crate) fn seed(g: &Graph, bs: &BunchStructure, d: usize) -> Result<PartialColoring> {
    let mut c = PartialColoring::new(g.n(), d + 1);
    color_center(&mut c, bs.center(), bs.neighbor_order())?;
    for (color, &v) in (2..=d).zip(bs.bunch(0)) {
        c.set(v, color)?;
    }
    for t in 1..4 {
        color_bunch(&mut c, g, bs, t).map_err(|e| match e {
            Error::HallFailure { bunch, violator } => Error::InternalInvariantViolation(format!(
                "seed bunch {bunch} has no transversal (violator {violator:?})"
            )),
            other => other,
        })?;
    }
    for &xi in &bs.neighbor_order()[..4] {
        if !c.is_b_vertex(g, xi) {
            return Err(Error::InternalInvariantViolation(format!(
                "seeded neighbor {xi} is not a b-vertex"
            )));
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn hoffman_singleton_seed() {
        let hs = generators::hoffman_singleton();
        let c = lemma_extension(&hs, 0, None).unwrap();
        assert!(c.is_proper(&hs));
        assert_eq!(c.get(0), Some(8));
        let b = c.b_vertices(&hs);
        assert!(b.len() >= 5);
        assert!(b.contains(&0));
        for &xi in &hs.neighbors(0)[..4] {
            assert!(c.available_colors(&hs, xi).unwrap().is_empty());
        }
        // The first bunch gets 2..=7 in ascending position order.
        let first: Vec<_> = hs
            .neighbors(hs.neighbors(0)[0])
            .iter()
            .filter(|&&v| v != 0)
            .map(|&v| c.get(v).unwrap())
            .collect();
        assert_eq!(first, (2..=7).collect::<Vec<_>>());
    }

    #[test]
    fn guards() {
        let p = generators::petersen();
        assert!(matches!(
            lemma_extension(&p, 0, None),
            Err(Error::PreconditionViolated(_))
        ));
        let hs = generators::hoffman_singleton();
        assert!(matches!(
            lemma_extension(&hs, 0, Some(&[1, 2])),
            Err(Error::InvalidParameter(_))
        ));
    }
}
