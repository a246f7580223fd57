//! Exhaustive ground truth for small graphs: b-coloring existence, the exact
//! b-chromatic number, chromatic number, cycle enumeration and transversal
//! backtracking. Every search honors [`SearchLimits`] and reports a budget
//! overrun as its own outcome rather than guessing.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::transversal::SetFamily;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_vertices: usize,
    pub time_budget: Duration,
    pub node_budget: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            max_vertices: 512,
            time_budget: Duration::from_secs(60),
            node_budget: 10_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BColoringSearch {
    /// A witness: 1-based colors of all vertices.
    Yes(Vec<usize>),
    No,
    BudgetExceeded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BChromatic {
    Exact(usize),
    /// Largest `k` confirmed, while some larger `k` could not be decided.
    LowerBoundOnly(usize),
}

struct Budget {
    start: Instant,
    limits: SearchLimits,
    nodes: u64,
    exceeded: bool,
}

impl Budget {
    fn new(limits: &SearchLimits) -> Self {
        Self {
            start: Instant::now(),
            limits: limits.clone(),
            nodes: 0,
            exceeded: false,
        }
    }

    /// Counts one search node; `false` once any budget is spent.
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.limits.node_budget
            || (self.nodes.is_multiple_of(1024) && self.start.elapsed() > self.limits.time_budget)
        {
            self.exceeded = true;
        }
        !self.exceeded
    }
}

/// Largest `k` such that at least `k` vertices have degree at least `k - 1`;
/// no b-coloring can use more colors.
pub fn m_degree(g: &Graph) -> usize {
    let mut degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    degrees
        .iter()
        .enumerate()
        .take_while(|&(i, &deg)| deg >= i)
        .count()
}

struct BSearch<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<usize>,
    budget: Budget,
}

impl BSearch<'_> {
    fn can_take(&self, v: usize, color: usize) -> bool {
        self.g.neighbors(v).iter().all(|&w| self.colors[w] != color)
    }

    /// Picks the b-vertex of class `class` among vertices after `prev`.
    /// Witnesses are increasing in identifier and class, which loses nothing
    /// since colors can be renamed.
    fn witness(&mut self, class: usize, prev: Option<usize>) -> Option<bool> {
        if class > self.k {
            return self.complete();
        }
        let first = prev.map_or(0, |p| p + 1);
        let remaining = self.k - class + 1;
        for v in first..self.g.n() {
            if self.g.n() - v < remaining {
                break;
            }
            if self.g.degree(v) + 1 < self.k {
                continue;
            }
            let fresh = match self.colors[v] {
                0 if self.can_take(v, class) => true,
                c if c == class => false,
                _ => continue,
            };
            if !self.budget.tick() {
                return None;
            }
            if fresh {
                self.colors[v] = class;
            }
            let mut present = vec![false; self.k + 1];
            present[class] = true;
            let mut open = Vec::new();
            for &w in self.g.neighbors(v) {
                match self.colors[w] {
                    0 => open.push(w),
                    c => present[c] = true,
                }
            }
            let missing: Vec<usize> = (1..=self.k).filter(|&c| !present[c]).collect();
            let found = if missing.len() <= open.len() {
                self.cover(&missing, &open, class, v)
            } else {
                Some(false)
            };
            if found != Some(false) {
                return found;
            }
            if fresh {
                self.colors[v] = 0;
            }
        }
        Some(false)
    }

    /// Places each missing color on a distinct uncolored neighbor.
    fn cover(&mut self, missing: &[usize], open: &[usize], class: usize, v: usize) -> Option<bool> {
        let Some((&color, rest)) = missing.split_first() else {
            return self.witness(class + 1, Some(v));
        };
        for &u in open {
            if self.colors[u] != 0 || !self.can_take(u, color) {
                continue;
            }
            if !self.budget.tick() {
                return None;
            }
            self.colors[u] = color;
            match self.cover(rest, open, class, v) {
                Some(false) => self.colors[u] = 0,
                other => return other,
            }
        }
        Some(false)
    }

    /// Extends to a proper total coloring, most constrained vertex first.
    fn complete(&mut self) -> Option<bool> {
        let mut best: Option<(usize, Vec<usize>)> = None;
        for v in 0..self.g.n() {
            if self.colors[v] != 0 {
                continue;
            }
            let options: Vec<usize> = (1..=self.k).filter(|&c| self.can_take(v, c)).collect();
            if best.as_ref().is_none_or(|(_, b)| options.len() < b.len()) {
                let empty = options.is_empty();
                best = Some((v, options));
                if empty {
                    break;
                }
            }
        }
        let Some((v, options)) = best else {
            return Some(true);
        };
        for c in options {
            if !self.budget.tick() {
                return None;
            }
            self.colors[v] = c;
            let found = self.complete();
            if found != Some(false) {
                return found;
            }
            self.colors[v] = 0;
        }
        Some(false)
    }
}

/// Decides whether `g` has a b-coloring with exactly `k` colors.
pub fn b_coloring_exists(g: &Graph, k: usize, lim: &SearchLimits) -> BColoringSearch {
    if g.n() > lim.max_vertices {
        return BColoringSearch::BudgetExceeded;
    }
    if k == 0 {
        return if g.n() == 0 {
            BColoringSearch::Yes(Vec::new())
        } else {
            BColoringSearch::No
        };
    }
    if k > m_degree(g) {
        return BColoringSearch::No;
    }
    let mut search = BSearch {
        g,
        k,
        colors: vec![0; g.n()],
        budget: Budget::new(lim),
    };
    match search.witness(1, None) {
        Some(true) => BColoringSearch::Yes(search.colors),
        Some(false) => BColoringSearch::No,
        None => BColoringSearch::BudgetExceeded,
    }
}

/// Scans `k` downward from the m-degree bound, testing each `k` on its own
/// (b-colorings for different `k` are not nested).
pub fn exact_b_chromatic(g: &Graph, lim: &SearchLimits) -> BChromatic {
    if g.n() == 0 {
        return BChromatic::Exact(0);
    }
    let mut blocked = false;
    for k in (1..=m_degree(g)).rev() {
        match b_coloring_exists(g, k, lim) {
            BColoringSearch::Yes(_) if blocked => return BChromatic::LowerBoundOnly(k),
            BColoringSearch::Yes(_) => return BChromatic::Exact(k),
            BColoringSearch::No => {}
            BColoringSearch::BudgetExceeded => blocked = true,
        }
    }
    // k = 1 always succeeds on a nonempty graph unless the vertex cap hit.
    BChromatic::LowerBoundOnly(0)
}

/// Chromatic number by plain backtracking, for small graphs.
pub fn chromatic_number(g: &Graph) -> usize {
    fn colorable(g: &Graph, order: &[usize], i: usize, k: usize, colors: &mut [usize]) -> bool {
        let Some(&v) = order.get(i) else { return true };
        let top = colors.iter().copied().max().unwrap_or(0);
        // New colors are opened in order, which removes color permutations.
        for c in 1..=k.min(top + 1) {
            if g.neighbors(v).iter().all(|&w| colors[w] != c) {
                colors[v] = c;
                if colorable(g, order, i + 1, k, colors) {
                    return true;
                }
                colors[v] = 0;
            }
        }
        false
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    (0..=g.n())
        .find(|&k| colorable(g, &order, 0, k, &mut vec![0; g.n()]))
        .unwrap_or(g.n())
}

/// Rotation and reflection minimal form of a cycle.
fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let len = cycle.len();
    let mut best: Option<Vec<usize>> = None;
    for start in 0..len {
        for dir in [1isize, -1] {
            let rotated: Vec<usize> = (0..len as isize)
                .map(|i| cycle[(start as isize + dir * i).rem_euclid(len as isize) as usize])
                .collect();
            if best.as_ref().is_none_or(|b| rotated < *b) {
                best = Some(rotated);
            }
        }
    }
    best.unwrap_or_default()
}

/// All distinct cycles of length `len` through `x`, canonicalized.
pub fn enumerate_cycles_through(g: &Graph, x: usize, len: usize) -> Result<Vec<Vec<usize>>> {
    g.check_vertex(x)?;
    if len < 3 {
        return Ok(Vec::new());
    }
    fn walk(
        g: &Graph,
        len: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        found: &mut BTreeSet<Vec<usize>>,
    ) {
        let v = *path.last().expect("nonempty path");
        if path.len() == len {
            if g.has_edge(v, path[0]) {
                found.insert(canonical_cycle(path));
            }
            return;
        }
        for &w in g.neighbors(v) {
            if !on_path[w] {
                on_path[w] = true;
                path.push(w);
                walk(g, len, path, on_path, found);
                path.pop();
                on_path[w] = false;
            }
        }
    }
    let mut found = BTreeSet::new();
    let mut on_path = vec![false; g.n()];
    on_path[x] = true;
    walk(g, len, &mut vec![x], &mut on_path, &mut found);
    Ok(found.into_iter().collect())
}

pub fn enumerate_c6_through(g: &Graph, x: usize) -> Result<Vec<Vec<usize>>> {
    enumerate_cycles_through(g, x, 6)
}

/// Six-cycles through `x` inside `G[N2[x]]`, counted by enumeration in the
/// induced subgraph.
pub fn c6_in_n2_by_enumeration(g: &Graph, x: usize) -> Result<usize> {
    g.check_vertex(x)?;
    let ball: Vec<usize> = g
        .distances(x)?
        .iter()
        .enumerate()
        .filter(|(_, d)| d.is_some_and(|d| d <= 2))
        .map(|(v, _)| v)
        .collect();
    let (h, map) = g.induced_subgraph(&ball)?;
    Ok(enumerate_c6_through(&h, map[&x])?.len())
}

/// Shortest cycle length up to `max_len` by enumeration, `None` if there is
/// no cycle that short.
pub fn shortest_cycle_by_enumeration(g: &Graph, max_len: usize) -> Option<usize> {
    (3..=max_len).find(|&len| {
        (0..g.n()).any(|x| enumerate_cycles_through(g, x, len).is_ok_and(|c| !c.is_empty()))
    })
}

/// Exhaustive injective search for a transversal.
pub fn transversal_backtrack(fam: &SetFamily) -> Result<Option<Vec<usize>>> {
    if fam.len() > 10 {
        return Err(Error::FamilyTooLarge(fam.len()));
    }
    fn go(fam: &SetFamily, i: usize, used: &mut [bool], pick: &mut Vec<usize>) -> bool {
        let Some(set) = fam.sets().get(i) else {
            return true;
        };
        for &e in set {
            if !used[e] {
                used[e] = true;
                pick.push(e);
                if go(fam, i + 1, used, pick) {
                    return true;
                }
                pick.pop();
                used[e] = false;
            }
        }
        false
    }
    let mut used = vec![false; fam.universe() + 1];
    let mut pick = Vec::new();
    Ok(go(fam, 0, &mut used, &mut pick).then_some(pick))
}
