//! Partial colorings, b-vertex checks and first-fit completion.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A coloring of some vertices with colors `1..=k`.
///
/// [`PartialColoring::set`] does not check properness, so intermediate states
/// of a repair loop can be represented; [`PartialColoring::assign`] does.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialColoring {
    k: usize,
    colors: Vec<Option<usize>>,
}

impl PartialColoring {
    pub fn new(n: usize, k: usize) -> Self {
        Self {
            k,
            colors: vec![None; n],
        }
    }

    /// Total coloring from 1-based colors.
    pub fn from_colors(k: usize, colors: &[usize]) -> Result<Self> {
        let mut c = Self::new(colors.len(), k);
        for (v, &color) in colors.iter().enumerate() {
            c.set(v, color)?;
        }
        Ok(c)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.colors[v]
    }

    pub fn as_slice(&self) -> &[Option<usize>] {
        &self.colors
    }

    pub fn is_colored(&self, v: usize) -> bool {
        self.colors[v].is_some()
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn colored_count(&self) -> usize {
        self.colors.iter().filter(|c| c.is_some()).count()
    }

    /// Sets a color without checking properness.
    pub fn set(&mut self, v: usize, color: usize) -> Result<()> {
        if color == 0 || color > self.k {
            return Err(Error::ColorOutOfRange { color, k: self.k });
        }
        if v >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            });
        }
        self.colors[v] = Some(color);
        Ok(())
    }

    pub fn clear(&mut self, v: usize) {
        self.colors[v] = None;
    }

    /// Sets a color, refusing if a neighbor already carries it.
    pub fn assign(&mut self, g: &Graph, v: usize, color: usize) -> Result<()> {
        g.check_vertex(v)?;
        if let Some(&w) = g
            .neighbors(v)
            .iter()
            .find(|&&w| self.colors[w] == Some(color))
        {
            return Err(Error::ImproperColoring(v, w));
        }
        self.set(v, color)
    }

    /// Total 1-based colors, or the first uncolored vertex.
    pub fn to_total(&self) -> Result<Vec<usize>> {
        self.colors
            .iter()
            .enumerate()
            .map(|(v, c)| c.ok_or(Error::NotTotal(v)))
            .collect()
    }

    /// Colors of `1..=k` absent from the closed neighborhood of `v`, ascending.
    pub fn available_colors(&self, g: &Graph, v: usize) -> Result<Vec<usize>> {
        g.check_vertex(v)?;
        let mut present = vec![false; self.k + 1];
        for w in std::iter::once(v).chain(g.neighbors(v).iter().copied()) {
            if let Some(c) = self.colors[w] {
                present[c] = true;
            }
        }
        Ok((1..=self.k).filter(|&c| !present[c]).collect())
    }

    /// Whether the closed neighborhood of `v` carries every color.
    pub fn is_b_vertex(&self, g: &Graph, v: usize) -> bool {
        self.colors[v].is_some() && self.available_colors(g, v).is_ok_and(|l| l.is_empty())
    }

    /// First edge whose endpoints share a color.
    pub fn first_conflict(&self, g: &Graph) -> Option<(usize, usize)> {
        g.edges()
            .find(|&(u, v)| self.colors[u].is_some() && self.colors[u] == self.colors[v])
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.first_conflict(g).is_none()
    }

    /// Colored vertices whose closed neighborhood carries all `k` colors.
    pub fn b_vertices(&self, g: &Graph) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.is_b_vertex(g, v)).collect()
    }

    /// Whether this total coloring is a proper coloring using every color of
    /// `1..=k` with a b-vertex in each class.
    pub fn is_b_coloring(&self, g: &Graph) -> Result<bool> {
        let colors = self.to_total()?;
        if !self.is_proper(g) {
            return Ok(false);
        }
        let mut has_b_vertex = vec![false; self.k + 1];
        for v in self.b_vertices(g) {
            has_b_vertex[colors[v]] = true;
        }
        Ok(has_b_vertex[1..].iter().all(|&b| b))
    }

    /// Colors every uncolored vertex with its smallest available color,
    /// scanning `order` (ascending identifiers by default). Vertices missing
    /// from `order` are scanned afterwards in ascending order.
    pub fn greedy_complete(&self, g: &Graph, order: Option<&[usize]>) -> Result<PartialColoring> {
        if let Some((u, v)) = self.first_conflict(g) {
            return Err(Error::ImproperColoring(u, v));
        }
        let mut out = self.clone();
        let default_order: Vec<usize>;
        let order = match order {
            Some(o) => {
                for &v in o {
                    g.check_vertex(v)?;
                }
                o
            }
            None => {
                default_order = (0..g.n()).collect();
                &default_order
            }
        };
        let tail = 0..g.n();
        for v in order.iter().copied().chain(tail) {
            if out.is_colored(v) {
                continue;
            }
            let color = out
                .available_colors(g, v)?
                .first()
                .copied()
                .ok_or(Error::CompletionFailed(v))?;
            debug_assert!(g.neighbors(v).iter().all(|&w| out.get(w) != Some(color)));
            out.set(v, color)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn availability() {
        let single = Graph::empty(1);
        let c = PartialColoring::new(1, 3);
        assert_eq!(c.available_colors(&single, 0).unwrap(), vec![1, 2, 3]);

        let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let c = PartialColoring::from_colors(3, &[1, 2, 3]).unwrap();
        assert!(c.available_colors(&path, 1).unwrap().is_empty());
        assert!(c.is_b_vertex(&path, 1));

        let c5 = generators::cycle(5).unwrap();
        let c = PartialColoring::from_colors(3, &[1, 2, 3, 1, 2]).unwrap();
        assert!(c.available_colors(&c5, 1).unwrap().is_empty());
        // Both neighbors of vertex 4 have color 1.
        assert_eq!(c.available_colors(&c5, 4).unwrap(), vec![3]);
        assert!(c.available_colors(&c5, 9).is_err());
    }

    #[test]
    fn b_coloring_checks() {
        let c5 = generators::cycle(5).unwrap();
        let good = PartialColoring::from_colors(3, &[1, 2, 3, 1, 2]).unwrap();
        assert!(good.is_b_coloring(&c5).unwrap());

        let improper = PartialColoring::from_colors(3, &[1, 2, 1, 2, 1]).unwrap();
        assert_eq!(improper.first_conflict(&c5), Some((0, 4)));
        assert!(!improper.is_b_coloring(&c5).unwrap());

        let c6 = generators::cycle(6).unwrap();
        let two = PartialColoring::from_colors(2, &[1, 2, 1, 2, 1, 2]).unwrap();
        assert_eq!(two.b_vertices(&c6).len(), 6);
        assert!(two.is_b_coloring(&c6).unwrap());

        let mut partial = PartialColoring::new(5, 3);
        partial.set(0, 1).unwrap();
        assert_eq!(partial.is_b_coloring(&c5), Err(Error::NotTotal(1)));
    }

    #[test]
    fn assign_checks_properness() {
        let c5 = generators::cycle(5).unwrap();
        let mut c = PartialColoring::new(5, 3);
        c.assign(&c5, 0, 1).unwrap();
        assert_eq!(c.assign(&c5, 1, 1), Err(Error::ImproperColoring(1, 0)));
        assert!(matches!(c.set(1, 4), Err(Error::ColorOutOfRange { .. })));
        assert!(matches!(c.set(1, 0), Err(Error::ColorOutOfRange { .. })));
    }

    #[test]
    fn first_fit_completion() {
        let c5 = generators::cycle(5).unwrap();
        let done = PartialColoring::new(5, 3)
            .greedy_complete(&c5, None)
            .unwrap();
        assert_eq!(done.to_total().unwrap(), vec![1, 2, 1, 2, 3]);

        let k3 = generators::cycle(3).unwrap();
        let mut c = PartialColoring::new(3, 2);
        c.set(0, 1).unwrap();
        c.set(1, 2).unwrap();
        assert_eq!(
            c.greedy_complete(&k3, None),
            Err(Error::CompletionFailed(2))
        );

        let reversed = PartialColoring::new(5, 3)
            .greedy_complete(&c5, Some(&[4, 3, 2, 1, 0]))
            .unwrap();
        assert_eq!(reversed.to_total().unwrap(), vec![3, 2, 1, 2, 1]);
    }

    #[test]
    fn completion_keeps_precolored_vertices() {
        let hs = generators::hoffman_singleton();
        let mut c = PartialColoring::new(50, 8);
        for (i, &v) in hs.neighbors(0).iter().enumerate() {
            c.set(v, i + 1).unwrap();
        }
        c.set(0, 8).unwrap();
        let done = c.greedy_complete(&hs, None).unwrap();
        assert!(done.is_total() && done.is_proper(&hs));
        for v in 0..50 {
            if let Some(color) = c.get(v) {
                assert_eq!(done.get(v), Some(color));
            }
        }
    }
}
