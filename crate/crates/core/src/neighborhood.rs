//! Structure around a center vertex `x`: bunches, the second sphere, induced
//! second-sphere degrees, six-cycle counts and closed bunches.
//!
//! Bunch indices are 0-based in this API. Bunch `i` belongs to the neighbor
//! `neighbor_order[i]` and is associated with color `i + 1` by the
//! constructions.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A center, an ordering of its neighbors and the bunch of every neighbor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BunchStructure {
    center: usize,
    neighbor_order: Vec<usize>,
    bunches: Vec<Vec<usize>>,
    location: HashMap<usize, (usize, usize)>,
}

impl BunchStructure {
    /// Builds the bunches of `x`. Without an explicit order the neighbors are
    /// taken in ascending identifier order. Vertices inside a bunch are always
    /// listed in ascending identifier order.
    pub fn new(g: &Graph, x: usize, neighbor_order: Option<&[usize]>) -> Result<Self> {
        g.check_vertex(x)?;
        let order = match neighbor_order {
            None => g.neighbors(x).to_vec(),
            Some(order) => {
                let mut sorted = order.to_vec();
                sorted.sort_unstable();
                if sorted != g.neighbors(x) {
                    return Err(Error::InvalidParameter(format!(
                        "{order:?} is not a permutation of the neighbors of {x}"
                    )));
                }
                order.to_vec()
            }
        };
        let mut location = HashMap::new();
        let mut bunches = Vec::with_capacity(order.len());
        for (i, &xi) in order.iter().enumerate() {
            let bunch: Vec<usize> = g
                .neighbors(xi)
                .iter()
                .copied()
                .filter(|&v| v != x)
                .collect();
            for (j, &v) in bunch.iter().enumerate() {
                if g.has_edge(x, v) {
                    return Err(Error::GirthTooSmall(format!(
                        "triangle {x}-{xi}-{v} through the center"
                    )));
                }
                if let Some((other, _)) = location.insert(v, (i, j)) {
                    return Err(Error::GirthTooSmall(format!(
                        "vertex {v} lies in bunches of {} and {xi}",
                        order[other]
                    )));
                }
            }
            bunches.push(bunch);
        }
        Ok(Self {
            center: x,
            neighbor_order: order,
            bunches,
            location,
        })
    }

    pub fn center(&self) -> usize {
        self.center
    }

    pub fn neighbor_order(&self) -> &[usize] {
        &self.neighbor_order
    }

    /// Number of bunches, i.e. the degree of the center.
    pub fn len(&self) -> usize {
        self.bunches.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bunches.is_empty()
    }

    pub fn bunch(&self, i: usize) -> &[usize] {
        &self.bunches[i]
    }

    pub fn bunches(&self) -> &[Vec<usize>] {
        &self.bunches
    }

    /// `(bunch index, position)` of a bunch vertex.
    pub fn locate(&self, v: usize) -> Option<(usize, usize)> {
        self.location.get(&v).copied()
    }

    pub fn bunch_of(&self, v: usize) -> Option<usize> {
        self.locate(v).map(|(i, _)| i)
    }

    /// Neighbors of `v` lying in bunches with a smaller index than its own.
    pub fn backward_neighbors(&self, g: &Graph, v: usize) -> Result<Vec<usize>> {
        let (i, _) = self.locate(v).ok_or(Error::NotInAnyBunch(v))?;
        Ok(g.neighbors(v)
            .iter()
            .copied()
            .filter(|&w| self.bunch_of(w).is_some_and(|p| p < i))
            .collect())
    }

    pub fn backward_degree(&self, g: &Graph, v: usize) -> Result<usize> {
        self.backward_neighbors(g, v).map(|b| b.len())
    }
}

/// Distances up to two from a center, for repeated local queries.
pub(crate) struct LocalView<'g> {
    g: &'g Graph,
    x: usize,
    dist: Vec<Option<usize>>,
}

impl<'g> LocalView<'g> {
    pub(crate) fn new(g: &'g Graph, x: usize) -> Self {
        Self {
            g,
            x,
            dist: g.bfs(x, 2),
        }
    }

    pub(crate) fn dist(&self, v: usize) -> Option<usize> {
        self.dist[v]
    }

    pub(crate) fn in_s2(&self, v: usize) -> bool {
        self.dist[v] == Some(2)
    }

    pub(crate) fn s2(&self) -> Vec<usize> {
        (0..self.g.n()).filter(|&v| self.in_s2(v)).collect()
    }

    pub(crate) fn s2_degree(&self, v: usize) -> usize {
        self.g
            .neighbors(v)
            .iter()
            .filter(|&&w| self.in_s2(w))
            .count()
    }

    /// Sum over the second sphere of `C(p, 2)` where `p` is the induced
    /// second-sphere degree. Under girth at least five every six-cycle through
    /// the center inside `N2[x]` is counted once, at its vertex opposite `x`.
    pub(crate) fn c6_in_n2(&self) -> usize {
        self.s2()
            .into_iter()
            .map(|v| {
                let p = self.s2_degree(v);
                p * p.saturating_sub(1) / 2
            })
            .sum()
    }

    /// Whether every vertex of the bunch of neighbor `xi` has all its
    /// neighbors within distance two of the center.
    pub(crate) fn is_closed_bunch(&self, xi: usize) -> bool {
        self.g
            .neighbors(xi)
            .iter()
            .filter(|&&v| v != self.x)
            .all(|&v| self.g.neighbors(v).iter().all(|&w| self.dist[w].is_some()))
    }

    pub(crate) fn closed_bunch_neighbors(&self) -> Vec<usize> {
        self.g
            .neighbors(self.x)
            .iter()
            .copied()
            .filter(|&xi| self.is_closed_bunch(xi))
            .collect()
    }
}

fn require_girth5(g: &Graph) -> Result<()> {
    match g.girth() {
        Some(len) if len < 5 => Err(Error::GirthTooSmall(format!("girth is {len}"))),
        _ => Ok(()),
    }
}

/// Vertices at distance exactly two from `x`.
pub fn second_sphere(g: &Graph, x: usize) -> Result<Vec<usize>> {
    g.check_vertex(x)?;
    Ok(LocalView::new(g, x).s2())
}

/// Degree of `v` in the subgraph induced by the second sphere of `x`.
pub fn s2_degree(g: &Graph, x: usize, v: usize) -> Result<usize> {
    g.check_vertex(x)?;
    g.check_vertex(v)?;
    let view = LocalView::new(g, x);
    if !view.in_s2(v) {
        return Err(Error::NotInS2(v));
    }
    Ok(view.s2_degree(v))
}

/// Number of six-cycles through `x` inside `G[N2[x]]`, by the closed formula.
pub fn count_c6_in_n2(g: &Graph, x: usize) -> Result<usize> {
    g.check_vertex(x)?;
    require_girth5(g)?;
    Ok(LocalView::new(g, x).c6_in_n2())
}

/// Number of six-cycles of `g` through `x`, by enumerating simple paths of
/// length five from `x` that end next to `x`. Each cycle is met in both
/// directions.
pub fn count_c6_through_vertex(g: &Graph, x: usize) -> Result<usize> {
    g.check_vertex(x)?;
    fn walk(g: &Graph, x: usize, v: usize, depth: usize, on_path: &mut [bool]) -> usize {
        if depth == 5 {
            return usize::from(g.has_edge(v, x));
        }
        let mut total = 0;
        for &w in g.neighbors(v) {
            if !on_path[w] {
                on_path[w] = true;
                total += walk(g, x, w, depth + 1, on_path);
                on_path[w] = false;
            }
        }
        total
    }
    let mut on_path = vec![false; g.n()];
    on_path[x] = true;
    Ok(walk(g, x, x, 0, &mut on_path) / 2)
}

/// Indices (under ascending neighbor order) of the bunches of `x` whose
/// vertices have every neighbor inside `N2(x)`.
pub fn closed_bunches(g: &Graph, x: usize) -> Result<Vec<usize>> {
    g.check_vertex(x)?;
    require_girth5(g)?;
    let view = LocalView::new(g, x);
    Ok(g.neighbors(x)
        .iter()
        .enumerate()
        .filter(|&(_, &xi)| view.is_closed_bunch(xi))
        .map(|(i, _)| i)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn petersen_bunches() {
        let p = generators::petersen();
        let bs = BunchStructure::new(&p, 0, None).unwrap();
        assert_eq!(bs.neighbor_order(), &[1, 4, 5]);
        assert_eq!(bs.bunches(), &[vec![2, 6], vec![3, 9], vec![7, 8]]);
        assert_eq!(bs.locate(9), Some((1, 1)));
        assert_eq!(bs.locate(0), None);
    }

    #[test]
    fn cycle_bunches_and_c4_rejection() {
        let c5 = generators::cycle(5).unwrap();
        let bs = BunchStructure::new(&c5, 0, None).unwrap();
        assert_eq!(bs.len(), 2);
        assert!(bs.bunches().iter().all(|b| b.len() == 1));

        let c4 = generators::cycle(4).unwrap();
        assert!(matches!(
            BunchStructure::new(&c4, 0, None),
            Err(Error::GirthTooSmall(_))
        ));
        let c3 = generators::cycle(3).unwrap();
        assert!(matches!(
            BunchStructure::new(&c3, 0, None),
            Err(Error::GirthTooSmall(_))
        ));
    }

    #[test]
    fn explicit_order_must_be_permutation() {
        let p = generators::petersen();
        assert!(BunchStructure::new(&p, 0, Some(&[5, 1, 4])).is_ok());
        assert!(BunchStructure::new(&p, 0, Some(&[5, 1])).is_err());
        assert!(BunchStructure::new(&p, 0, Some(&[5, 1, 2])).is_err());
    }

    #[test]
    fn backward_degrees_in_petersen() {
        let p = generators::petersen();
        let bs = BunchStructure::new(&p, 0, Some(&[1, 4, 5])).unwrap();
        assert_eq!(bs.backward_degree(&p, 2).unwrap(), 0);
        assert_eq!(bs.backward_degree(&p, 6).unwrap(), 0);
        // 7 is adjacent to 2 (first bunch) and 9 (second bunch).
        assert_eq!(bs.backward_neighbors(&p, 7).unwrap(), vec![2, 9]);
        assert_eq!(bs.backward_degree(&p, 7).unwrap(), 2);
        assert_eq!(bs.backward_degree(&p, 0), Err(Error::NotInAnyBunch(0)));
        for (i, bunch) in bs.bunches().iter().enumerate() {
            for &v in bunch {
                assert!(bs.backward_degree(&p, v).unwrap() <= i);
            }
        }
    }

    #[test]
    fn s2_degrees() {
        let p = generators::petersen();
        assert_eq!(s2_degree(&p, 0, 7).unwrap(), 2);
        assert_eq!(s2_degree(&p, 0, 1), Err(Error::NotInS2(1)));

        let c5 = generators::cycle(5).unwrap();
        assert_eq!(s2_degree(&c5, 0, 2).unwrap(), 1);
        let c7 = generators::cycle(7).unwrap();
        assert_eq!(s2_degree(&c7, 0, 2).unwrap(), 0);
        assert_eq!(count_c6_in_n2(&c7, 0).unwrap(), 0);

        let hs = generators::hoffman_singleton();
        for x in [0, 17, 49] {
            for v in second_sphere(&hs, x).unwrap() {
                assert_eq!(s2_degree(&hs, x, v).unwrap(), 6);
            }
        }
    }

    #[test]
    fn six_cycle_counts() {
        let p = generators::petersen();
        for x in 0..10 {
            assert_eq!(count_c6_in_n2(&p, x).unwrap(), 6);
            assert_eq!(count_c6_through_vertex(&p, x).unwrap(), 6);
        }
        let c5 = generators::cycle(5).unwrap();
        assert_eq!(count_c6_through_vertex(&c5, 0).unwrap(), 0);
        let c6 = generators::cycle(6).unwrap();
        assert_eq!(count_c6_through_vertex(&c6, 3).unwrap(), 1);
        assert!(matches!(count_c6_in_n2(&c6, 0), Ok(0)));
        let c4 = generators::cycle(4).unwrap();
        assert!(matches!(
            count_c6_in_n2(&c4, 0),
            Err(Error::GirthTooSmall(_))
        ));

        let hs = generators::hoffman_singleton();
        assert_eq!(count_c6_in_n2(&hs, 0).unwrap(), 630);
    }

    #[test]
    fn closed_bunch_census() {
        let p = generators::petersen();
        assert_eq!(closed_bunches(&p, 0).unwrap(), vec![0, 1, 2]);
        let hs = generators::hoffman_singleton();
        assert_eq!(closed_bunches(&hs, 3).unwrap(), (0..7).collect::<Vec<_>>());

        // C5 with a pendant path 2-5-6 hanging off the bunch of neighbor 1.
        let g = Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 5), (5, 6)]).unwrap();
        assert_eq!(closed_bunches(&g, 0).unwrap(), vec![1]);
    }
}
