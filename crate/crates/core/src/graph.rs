//! Simple undirected graphs on dense vertex identifiers `0..n`.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};

/// A simple undirected graph. Neighbor lists are kept sorted and duplicate free.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse into one.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self { adj })
    }

    /// Graph with `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `Some(d)` when every vertex has degree `d`. The empty graph is not regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Length of a shortest cycle, or `None` when the graph is acyclic.
    ///
    /// Runs a breadth-first search from every vertex; a non-tree edge `uw`
    /// seen from root `r` closes a walk of length `dist(u) + dist(w) + 1`,
    /// and the minimum over all roots is exact.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            let mut touched = vec![root];
            dist[root] = 0;
            queue.push_back(root);
            'bfs: while let Some(u) = queue.pop_front() {
                if 2 * dist[u] >= best {
                    break 'bfs;
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        touched.push(w);
                        queue.push_back(w);
                    } else if w != parent[u] {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
            queue.clear();
            for v in touched {
                dist[v] = usize::MAX;
                parent[v] = usize::MAX;
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// Breadth-first distances from `v`; `None` marks unreachable vertices.
    pub fn distances(&self, v: usize) -> Result<Vec<Option<usize>>> {
        self.check_vertex(v)?;
        Ok(self.bfs(v, usize::MAX))
    }

    /// Distances from `v`, exploring no further than `radius`.
    pub(crate) fn bfs(&self, v: usize, radius: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[v] = Some(0);
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            if du >= radius {
                continue;
            }
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertices at distance exactly `k` from `v`, ascending.
    pub fn sphere(&self, v: usize, k: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        let dist = self.bfs(v, k);
        Ok((0..self.n()).filter(|&u| dist[u] == Some(k)).collect())
    }

    /// Subgraph induced by `s`. New identifiers follow the ascending order of
    /// the old ones; the returned map sends old identifiers to new ones.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<(Graph, BTreeMap<usize, usize>)> {
        for &v in s {
            self.check_vertex(v)?;
        }
        let map: BTreeMap<usize, usize> = {
            let mut keep: Vec<usize> = s.to_vec();
            keep.sort_unstable();
            keep.dedup();
            keep.into_iter()
                .enumerate()
                .map(|(new, old)| (old, new))
                .collect()
        };
        let mut adj = vec![Vec::new(); map.len()];
        for (&old, &new) in &map {
            adj[new] = self.adj[old]
                .iter()
                .filter_map(|w| map.get(w).copied())
                .collect();
            adj[new].sort_unstable();
        }
        Ok((Graph { adj }, map))
    }

    /// Copy of the graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(Error::InvalidParameter(format!(
                "permutation has length {}, expected {n}",
                perm.len()
            )));
        }
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
        }
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::new(n, &edges)
    }
}
