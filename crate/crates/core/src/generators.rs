//! Named graphs and a seeded random regular generator with a girth floor.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Petersen,
    Cycle,
    HoffmanSingleton,
    Robertson,
    RandomRegular,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.replace('_', "-").as_str() {
            "petersen" => Self::Petersen,
            "cycle" => Self::Cycle,
            "hoffman-singleton" => Self::HoffmanSingleton,
            "robertson" => Self::Robertson,
            "random-regular" => Self::RandomRegular,
            other => return Err(Error::InvalidParameter(format!("unknown family `{other}`"))),
        })
    }
}

/// Parameters for [`generate`]. `d` and `girth_min` only matter for random
/// regular graphs, `n` for cycles and random regular graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub family: Family,
    pub d: usize,
    pub n: usize,
    pub girth_min: usize,
    pub seed: u64,
    pub max_attempts: usize,
}

impl GenSpec {
    pub fn random_regular(d: usize, n: usize, girth_min: usize, seed: u64) -> Self {
        Self {
            family: Family::RandomRegular,
            d,
            n,
            girth_min,
            seed,
            max_attempts: 50,
        }
    }
}

pub fn generate(spec: &GenSpec) -> Result<Graph> {
    match spec.family {
        Family::Petersen => Ok(petersen()),
        Family::Cycle => cycle(spec.n),
        Family::HoffmanSingleton => Ok(hoffman_singleton()),
        Family::Robertson => Ok(robertson()),
        Family::RandomRegular => random_regular_girth(spec),
    }
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

/// Outer cycle `0..5`, spokes `i - i+5`, inner pentagram `5-7-9-6-8-5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, &edges).expect("static construction")
}

/// Five pentagons `P_h` (vertices `5h + j`) and five pentagrams `Q_i`
/// (vertices `25 + 5i + j`), with `P_h j` joined to `Q_i (h*i + j mod 5)`.
pub fn hoffman_singleton() -> Graph {
    let p = |h: usize, j: usize| 5 * h + j % 5;
    let q = |i: usize, j: usize| 25 + 5 * i + j % 5;
    let mut edges = Vec::with_capacity(175);
    for a in 0..5 {
        for j in 0..5 {
            edges.push((p(a, j), p(a, j + 1)));
            edges.push((q(a, j), q(a, j + 2)));
            for i in 0..5 {
                edges.push((p(a, j), q(i, a * i + j)));
            }
        }
    }
    Graph::new(50, &edges).expect("static construction")
}

/// The (4,5)-cage on 19 vertices: a Hamiltonian cycle plus one chord
/// `i -> i + s_i` per vertex.
pub fn robertson() -> Graph {
    const JUMPS: [usize; 19] = [8, 4, 7, 4, 8, 5, 7, 4, 7, 8, 4, 5, 7, 8, 4, 8, 4, 8, 4];
    let mut edges = Vec::with_capacity(38);
    for (i, s) in JUMPS.iter().enumerate() {
        edges.push((i, (i + 1) % 19));
        edges.push((i, (i + s) % 19));
    }
    Graph::new(19, &edges).expect("static construction")
}

/// Multigraph under repair; loops appear twice in their own list.
struct Pairing {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Pairing {
    fn random(n: usize, d: usize, rng: &mut ChaCha8Rng) -> Self {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
        stubs.shuffle(rng);
        let edges: Vec<(usize, usize)> = stubs.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        let mut adj = vec![Vec::with_capacity(d); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        Self { adj, edges }
    }

    fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.adj[u].iter().filter(|&&w| w == v).count()
    }

    fn unlink(&mut self, u: usize, v: usize) {
        let i = self.adj[u]
            .iter()
            .position(|&w| w == v)
            .expect("edge present");
        self.adj[u].swap_remove(i);
        let j = self.adj[v]
            .iter()
            .position(|&w| w == u)
            .expect("edge present");
        self.adj[v].swap_remove(j);
    }

    fn link(&mut self, u: usize, v: usize) {
        self.adj[u].push(v);
        self.adj[v].push(u);
    }

    /// Whether edge `uv` lies on a cycle shorter than `girth`: a loop, a
    /// parallel edge, or a `u`-`v` path of length below `girth - 1` avoiding it.
    fn on_short_cycle(&self, u: usize, v: usize, girth: usize) -> bool {
        if u == v || self.multiplicity(u, v) > 1 {
            return true;
        }
        let limit = girth.saturating_sub(2);
        let mut dist = std::collections::HashMap::from([(u, 0usize)]);
        let mut queue = VecDeque::from([u]);
        while let Some(a) = queue.pop_front() {
            let da = dist[&a];
            if da >= limit {
                continue;
            }
            for &b in &self.adj[a] {
                if a == u && b == v {
                    continue;
                }
                if b == v {
                    return true;
                }
                if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(b) {
                    e.insert(da + 1);
                    queue.push_back(b);
                }
            }
        }
        false
    }

    fn bad_edges(&self, girth: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&i| {
                let (u, v) = self.edges[i];
                self.on_short_cycle(u, v, girth)
            })
            .collect()
    }

    /// Replaces edges `i = uv` and `j = ab` by `ua` and `vb` when neither new
    /// edge closes a short cycle; otherwise leaves the pairing unchanged.
    fn try_swap(&mut self, i: usize, j: usize, girth: usize) -> bool {
        let (u, v) = self.edges[i];
        let (a, b) = self.edges[j];
        if u == a || v == b || [u, v].contains(&a) && [u, v].contains(&b) {
            return false;
        }
        if self.adj[u].contains(&a) || self.adj[v].contains(&b) {
            return false;
        }
        self.unlink(u, v);
        self.unlink(a, b);
        self.link(u, a);
        self.link(v, b);
        if self.on_short_cycle(u, a, girth) || self.on_short_cycle(v, b, girth) {
            self.unlink(u, a);
            self.unlink(v, b);
            self.link(u, v);
            self.link(a, b);
            return false;
        }
        self.edges[i] = (u, a);
        self.edges[j] = (v, b);
        true
    }
}

/// Random `d`-regular graph on `n` vertices with girth at least `girth_min`.
///
/// Pairs stubs uniformly, then removes loops, parallel edges and short cycles
/// by double-edge swaps against random partner edges. A swap is only kept if
/// neither new edge closes a short cycle, so the set of bad edges shrinks
/// monotonically. When swaps stall, a fresh pairing is drawn.
pub fn random_regular_girth(spec: &GenSpec) -> Result<Graph> {
    let GenSpec {
        d, n, girth_min, ..
    } = *spec;
    if n * d % 2 == 1 {
        return Err(Error::InvalidParameter(format!("n*d = {} is odd", n * d)));
    }
    if d >= n && n > 0 {
        return Err(Error::InvalidParameter(format!(
            "degree {d} needs more than {n} vertices"
        )));
    }
    if girth_min > 5 {
        return Err(Error::InvalidParameter(format!(
            "girth floor {girth_min} above supported maximum 5"
        )));
    }
    let girth = girth_min.max(3);
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let m = n * d / 2;
    for _ in 0..spec.max_attempts.max(1) {
        let mut pairing = Pairing::random(n, d, &mut rng);
        let mut stalled_sweeps = 0;
        loop {
            let bad = pairing.bad_edges(girth);
            if bad.is_empty() {
                let g = Graph::new(n, &pairing.edges)?;
                debug_assert_eq!(g.m(), m);
                return Ok(g);
            }
            let before = bad.len();
            for i in bad {
                let (u, v) = pairing.edges[i];
                if !pairing.on_short_cycle(u, v, girth) {
                    continue;
                }
                for _ in 0..64 {
                    let j = rng.random_range(0..m);
                    if j == i {
                        continue;
                    }
                    if rng.random_bool(0.5) {
                        let (a, b) = pairing.edges[j];
                        pairing.edges[j] = (b, a);
                    }
                    if pairing.try_swap(i, j, girth) {
                        break;
                    }
                }
            }
            if pairing.bad_edges(girth).len() >= before {
                stalled_sweeps += 1;
                if stalled_sweeps > 8 {
                    break;
                }
            } else {
                stalled_sweeps = 0;
            }
        }
    }
    Err(Error::GenerationFailed(spec.max_attempts))
}
