//! Row and column ordering of the second sphere when two bunches are closed,
//! and the coloring read off that matrix.
//!
//! Column `c` (0-based) is the bunch of `columns[c]`; the first and last
//! columns are the two closed bunches. Row `r` is the closed neighborhood,
//! minus the first neighbor, of `rows[r]`, a vertex of the first column.
//! The construction itself works with 1-based indices so that row `i`,
//! column `j` is the vertex written `x_j^i`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::certificate::Certificate;
use crate::coloring::PartialColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::neighborhood::{BunchStructure, LocalView};

use super::{color_center, finish, require_scope, Draft, Strategy};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Subcase {
    /// The row-2 neighbor of `x_d^3` lies in a bunch not yet ordered.
    One,
    /// It lies in an ordered bunch and `x_4^1` has a row-2 neighbor.
    Two,
    /// As `Two`, but `x_4^1` has no row-2 neighbor.
    TwoNoRow2Neighbor,
}

/// The ordered second sphere of a center with two closed bunches.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BunchMatrix {
    pub center: usize,
    /// Neighbors of the center in column order.
    pub columns: Vec<usize>,
    /// First-column vertices in row order.
    pub rows: Vec<usize>,
    /// `cells[r][c]` is the vertex in row `r` and column `c`, 0-based.
    pub cells: Vec<Vec<usize>>,
    pub i1: Vec<usize>,
    pub subcase: Subcase,
}

impl BunchMatrix {
    pub fn d(&self) -> usize {
        self.columns.len()
    }

    /// `(row, column)` of every cell vertex, 0-based.
    pub fn positions(&self) -> HashMap<usize, (usize, usize)> {
        let mut pos = HashMap::new();
        for (r, row) in self.cells.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                pos.insert(v, (r, c));
            }
        }
        pos
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Requirement {
    /// Dimensions, first column agreeing with `rows`, columns a permutation
    /// of the center's neighbors.
    Shape,
    /// Every cell lies in its column's bunch; cells cover the second sphere
    /// exactly once.
    Cells,
    /// First and last columns are closed.
    One,
    /// Every row is the neighborhood of its first-column vertex.
    Two,
    /// The neighbors of `x_d^j` in column `j + 1` lie in rows 1 to 3 and
    /// make up `i1`.
    Three,
    /// The neighbor of `x_d^{d-2}` in column `d - 1` lies in row 2.
    Four,
    /// `i1` is independent.
    Independence,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RequirementViolation {
    pub requirement: Requirement,
    pub detail: String,
}

impl fmt::Display for RequirementViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}", self.requirement, self.detail)
    }
}

/// Every violated requirement of `m` on `g`; empty when the matrix is valid.
pub fn check_requirements(g: &Graph, m: &BunchMatrix) -> Vec<RequirementViolation> {
    let mut out = Vec::new();
    let mut fail = |requirement, detail: String| {
        out.push(RequirementViolation {
            requirement,
            detail,
        })
    };
    let x = m.center;
    if x >= g.n() {
        fail(Requirement::Shape, format!("center {x} out of range"));
        return out;
    }
    let d = m.d();
    let mut sorted = m.columns.clone();
    sorted.sort_unstable();
    if sorted != g.neighbors(x) || d < 7 {
        fail(
            Requirement::Shape,
            "columns are not the neighbors of the center".into(),
        );
        return out;
    }
    if m.rows.len() != d - 1 || m.cells.len() != d - 1 || m.cells.iter().any(|r| r.len() != d) {
        fail(Requirement::Shape, "matrix is not (d-1) x d".into());
        return out;
    }
    if let Some(r) = (0..d - 1).find(|&r| m.cells[r][0] != m.rows[r]) {
        fail(
            Requirement::Shape,
            format!(
                "row {} starts with {} instead of {}",
                r + 1,
                m.cells[r][0],
                m.rows[r]
            ),
        );
    }
    if let Some(&v) = m.cells.iter().flatten().find(|&&v| v >= g.n()) {
        fail(Requirement::Cells, format!("vertex {v} out of range"));
        return out;
    }

    let view = LocalView::new(g, x);
    let mut seen = BTreeSet::new();
    for (r, row) in m.cells.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            if !g.has_edge(v, m.columns[c]) || v == x {
                fail(
                    Requirement::Cells,
                    format!("cell ({}, {}) = {v} is outside its bunch", r + 1, c + 1),
                );
            }
            if !seen.insert(v) {
                fail(Requirement::Cells, format!("vertex {v} appears twice"));
            }
        }
    }
    let s2 = view.s2();
    if seen.len() != s2.len() || s2.iter().any(|v| !seen.contains(v)) {
        fail(
            Requirement::Cells,
            "cells do not cover the second sphere".into(),
        );
    }

    for c in [0, d - 1] {
        for r in 0..d - 1 {
            let v = m.cells[r][c];
            if let Some(&w) = g.neighbors(v).iter().find(|&&w| view.dist(w).is_none()) {
                fail(
                    Requirement::One,
                    format!("{v} in column {} has neighbor {w} at distance 3", c + 1),
                );
            }
        }
    }

    for r in 0..d - 1 {
        let mut expected: Vec<usize> = m.cells[r][1..].to_vec();
        expected.push(m.columns[0]);
        expected.sort_unstable();
        if g.neighbors(m.rows[r]) != expected.as_slice() {
            fail(
                Requirement::Two,
                format!("row {} is not the neighborhood of {}", r + 1, m.rows[r]),
            );
        }
    }

    let row_in_column = |v: usize, c: usize| (0..d - 1).find(|&r| m.cells[r][c] == v);
    let neighbor_in_column = |v: usize, c: usize| {
        g.neighbors(v)
            .iter()
            .copied()
            .find(|&w| row_in_column(w, c).is_some())
    };
    let mut three = BTreeSet::new();
    for j in 1..=d - 3 {
        let xd = m.cells[j - 1][d - 1];
        match neighbor_in_column(xd, j).map(|w| (w, row_in_column(w, j))) {
            Some((w, Some(r))) if r < 3 => {
                three.insert(w);
            }
            Some((w, _)) => fail(
                Requirement::Three,
                format!("neighbor {w} of x_d^{j} in column {} is below row 3", j + 1),
            ),
            None => fail(
                Requirement::Three,
                format!("x_d^{j} has no neighbor in column {}", j + 1),
            ),
        }
    }
    let i1: BTreeSet<usize> = m.i1.iter().copied().collect();
    if i1 != three || m.i1.len() != d - 3 {
        fail(
            Requirement::Three,
            format!("i1 {:?} differs from the forced set {three:?}", m.i1),
        );
    }

    let xd = m.cells[d - 3][d - 1];
    match neighbor_in_column(xd, d - 2).and_then(|w| row_in_column(w, d - 2)) {
        Some(1) => {}
        _ => fail(
            Requirement::Four,
            "x_d^{d-2} has no neighbor in row 2 of column d-1".into(),
        ),
    }

    for (a, &u) in m.i1.iter().enumerate() {
        for &v in &m.i1[a + 1..] {
            if g.has_edge(u, v) {
                fail(
                    Requirement::Independence,
                    format!("{u} and {v} are adjacent"),
                );
            }
        }
    }
    out
}

/// Incremental state of the ordering procedure, 1-based.
struct Builder<'a> {
    g: &'a Graph,
    d: usize,
    bs: BunchStructure,
    first: usize,
    last: usize,
    /// Bunch index per column; slot 0 unused.
    cols: Vec<Option<usize>>,
    /// First-column vertex per row; slot 0 unused.
    rows: Vec<Option<usize>>,
    row_of_first: HashMap<usize, usize>,
    i1: Vec<usize>,
    log: Vec<String>,
}

impl<'a> Builder<'a> {
    fn new(g: &'a Graph, x: usize, a: usize, b: usize, d: usize) -> Result<Self> {
        let bs = BunchStructure::new(g, x, None)?;
        let first = bs
            .neighbor_order()
            .iter()
            .position(|&v| v == a)
            .ok_or_else(|| Error::InvalidParameter(format!("{a} is not a neighbor of {x}")))?;
        let last = bs
            .neighbor_order()
            .iter()
            .position(|&v| v == b)
            .ok_or_else(|| Error::InvalidParameter(format!("{b} is not a neighbor of {x}")))?;
        if first == last {
            return Err(Error::InvalidParameter("the two bunches coincide".into()));
        }
        let mut cols = vec![None; d + 1];
        cols[1] = Some(first);
        cols[d] = Some(last);
        Ok(Self {
            g,
            d,
            bs,
            first,
            last,
            cols,
            rows: vec![None; d],
            row_of_first: HashMap::new(),
            i1: Vec::new(),
            log: vec![format!("center {x}: X_1 from {a}, X_d from {b}")],
        })
    }

    fn fail(&self, step: &str) -> Error {
        Error::ConstructionFailed {
            step: step.to_string(),
            log: self.log.clone(),
        }
    }

    fn neighbor_in_bunch(&self, v: usize, bunch: usize) -> Option<usize> {
        self.g
            .neighbors(v)
            .iter()
            .copied()
            .find(|&w| self.bs.bunch_of(w) == Some(bunch))
    }

    /// The first-column vertex sharing a row with `v`.
    fn first_of(&self, v: usize) -> Option<usize> {
        if self.bs.bunch_of(v) == Some(self.first) {
            Some(v)
        } else {
            self.neighbor_in_bunch(v, self.first)
        }
    }

    fn row_of(&self, v: usize) -> Option<usize> {
        self.first_of(v)
            .and_then(|u| self.row_of_first.get(&u).copied())
    }

    fn neighbor_in_row(&self, v: usize, row: usize) -> Option<usize> {
        self.g
            .neighbors(v)
            .iter()
            .copied()
            .find(|&w| self.bs.bunch_of(w).is_some() && self.row_of(w) == Some(row))
    }

    fn cell(&self, row: usize, col: usize) -> Option<usize> {
        let u = self.rows[row]?;
        let bunch = self.cols[col]?;
        if bunch == self.first {
            Some(u)
        } else {
            self.neighbor_in_bunch(u, bunch)
        }
    }

    fn need_cell(&self, row: usize, col: usize, step: &str) -> Result<usize> {
        self.cell(row, col).ok_or_else(|| self.fail(step))
    }

    /// Puts the row of `v` at position `row`.
    fn fix_row(&mut self, row: usize, v: usize, step: &str) -> Result<()> {
        let u = self.first_of(v).ok_or_else(|| self.fail(step))?;
        match (self.rows[row], self.row_of_first.get(&u)) {
            (None, None) => {
                self.rows[row] = Some(u);
                self.row_of_first.insert(u, row);
                self.log
                    .push(format!("{step}: row {row} through {v} (x_1^{row} = {u})"));
                Ok(())
            }
            _ => {
                self.log
                    .push(format!("{step}: row {row} through {v} is not new"));
                Err(self.fail(step))
            }
        }
    }

    fn is_ordered(&self, bunch: usize) -> bool {
        self.cols.contains(&Some(bunch))
    }

    fn set_col(&mut self, col: usize, bunch: usize, step: &str) -> Result<()> {
        if self.is_ordered(bunch) || self.cols[col].is_some() {
            self.log
                .push(format!("{step}: bunch {bunch} cannot become column {col}"));
            return Err(self.fail(step));
        }
        self.cols[col] = Some(bunch);
        self.log.push(format!(
            "{step}: column {col} is the bunch of {}",
            self.bs.neighbor_order()[bunch]
        ));
        Ok(())
    }

    fn unordered(&self) -> Vec<usize> {
        (0..self.d).filter(|&i| !self.is_ordered(i)).collect()
    }

    /// Lowest unplaced vertex of the last column.
    fn lowest_free_last(&self) -> Option<usize> {
        self.bs
            .bunch(self.last)
            .iter()
            .copied()
            .find(|&v| self.row_of(v).is_none())
    }

    /// Row `d - 2` from the lowest free last-column vertex, and column
    /// `d - 1` from its row-2 neighbor.
    fn close_like_subcase_one(&mut self) -> Result<()> {
        let d = self.d;
        let step = "x_d^{d-2} and X_{d-1}";
        let v = self.lowest_free_last().ok_or_else(|| self.fail(step))?;
        self.fix_row(d - 2, v, step)?;
        let y = self.neighbor_in_row(v, 2).ok_or_else(|| self.fail(step))?;
        let bunch = self.bs.bunch_of(y).ok_or_else(|| self.fail(step))?;
        self.set_col(d - 1, bunch, step)
    }

    fn build(mut self) -> Result<BunchMatrix> {
        let d = self.d;

        let step = "x_d^1";
        let xd1 = self.bs.bunch(self.last)[0];
        self.fix_row(1, xd1, step)?;

        let step = "X_2";
        let b2 = self.unordered()[0];
        self.set_col(2, b2, step)?;
        let x22 = self
            .neighbor_in_bunch(xd1, b2)
            .ok_or_else(|| self.fail(step))?;
        self.fix_row(2, x22, step)?;
        self.i1.push(x22);

        let step = "X_3";
        let xd2 = self.need_cell(2, d, step)?;
        let x21 = self.need_cell(1, 2, step)?;
        let choice = self.unordered().into_iter().find_map(|bunch| {
            let w = self.neighbor_in_bunch(xd2, bunch)?;
            let u = self.first_of(w)?;
            if self.row_of_first.contains_key(&u) {
                return None;
            }
            let xd3 = self.neighbor_in_bunch(u, self.last)?;
            (!self.g.has_edge(xd3, x21)).then_some((bunch, w))
        });
        let (b3, x33) = choice.ok_or_else(|| self.fail(step))?;
        self.set_col(3, b3, step)?;
        self.fix_row(3, x33, step)?;
        self.i1.push(x33);

        let step = "X_4";
        let xd3 = self.need_cell(3, d, step)?;
        let w = self
            .neighbor_in_row(xd3, 2)
            .ok_or_else(|| self.fail(step))?;
        let wb = self.bs.bunch_of(w).ok_or_else(|| self.fail(step))?;
        let subcase = if !self.is_ordered(wb) {
            self.log
                .push(format!("{step}: subcase 1, {w} in an unordered bunch"));
            self.set_col(4, wb, step)?;
            self.i1.push(w);

            let step = "x_d^{d-1}";
            let x32 = self.need_cell(2, 3, step)?;
            let v = self
                .neighbor_in_bunch(x32, self.last)
                .ok_or_else(|| self.fail(step))?;
            self.fix_row(d - 1, v, step)?;
            self.close_like_subcase_one()?;
            Subcase::One
        } else {
            self.log
                .push(format!("{step}: subcase 2, {w} in an ordered bunch"));
            let u = self
                .neighbor_in_row(xd3, 1)
                .ok_or_else(|| self.fail(step))?;
            let ub = self.bs.bunch_of(u).ok_or_else(|| self.fail(step))?;
            self.set_col(4, ub, step)?;
            self.i1.push(u);

            let step = "x_d^{d-1}";
            let x42 = self.need_cell(2, 4, step)?;
            let v = self
                .neighbor_in_bunch(x42, self.last)
                .ok_or_else(|| self.fail(step))?;
            self.fix_row(d - 1, v, step)?;

            match self.neighbor_in_row(u, 2) {
                Some(y) => {
                    let step = "X_{d-1} from x_4^1";
                    let yb = self.bs.bunch_of(y).ok_or_else(|| self.fail(step))?;
                    self.set_col(d - 1, yb, step)?;
                    let v = self
                        .neighbor_in_bunch(y, self.last)
                        .ok_or_else(|| self.fail(step))?;
                    self.fix_row(d - 2, v, step)?;
                    Subcase::Two
                }
                None => {
                    self.log.push(format!("x_4^1 = {u} has no row-2 neighbor"));
                    self.close_like_subcase_one()?;
                    Subcase::TwoNoRow2Neighbor
                }
            }
        };

        let step = "remaining rows";
        for row in 4..=d - 3 {
            let v = self.lowest_free_last().ok_or_else(|| self.fail(step))?;
            self.fix_row(row, v, step)?;
        }
        if self.lowest_free_last().is_some() {
            return Err(self.fail(step));
        }
        let step = "remaining columns";
        for j in 4..=d - 3 {
            let xdj = self.need_cell(j, d, step)?;
            let y = self
                .neighbor_in_row(xdj, 2)
                .ok_or_else(|| self.fail(step))?;
            let yb = self.bs.bunch_of(y).ok_or_else(|| self.fail(step))?;
            self.set_col(j + 1, yb, step)?;
        }
        for i in 5..=d - 2 {
            let v = self.need_cell(2, i, step)?;
            self.i1.push(v);
        }

        let step = "assemble";
        let mut cells = Vec::with_capacity(d - 1);
        for row in 1..d {
            let mut line = Vec::with_capacity(d);
            for col in 1..=d {
                line.push(self.need_cell(row, col, step)?);
            }
            cells.push(line);
        }
        let columns = (1..=d)
            .map(|c| self.cols[c].map(|b| self.bs.neighbor_order()[b]))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| self.fail(step))?;
        let matrix = BunchMatrix {
            center: self.bs.center(),
            columns,
            rows: cells.iter().map(|r| r[0]).collect(),
            cells,
            i1: self.i1.clone(),
            subcase,
        };
        let violations = check_requirements(self.g, &matrix);
        if !violations.is_empty() {
            self.log
                .extend(violations.iter().map(|v| format!("requirement check: {v}")));
            return Err(self.fail("requirements"));
        }
        Ok(matrix)
    }
}

/// Orders the second sphere of `x` with the bunches of neighbors `a` and `b`
/// as first and last columns.
pub fn order_two_bunch(g: &Graph, x: usize, a: usize, b: usize) -> Result<BunchMatrix> {
    order_with(g, x, a, b, g.girth())
}

fn order_with(
    g: &Graph,
    x: usize,
    a: usize,
    b: usize,
    girth: Option<usize>,
) -> Result<BunchMatrix> {
    let d = require_scope(g, x, girth)?;
    let view = LocalView::new(g, x);
    for v in [a, b] {
        if !g.has_edge(x, v) {
            return Err(Error::InvalidParameter(format!(
                "{v} is not a neighbor of {x}"
            )));
        }
        if !view.is_closed_bunch(v) {
            return Err(Error::PreconditionViolated(format!(
                "bunch of {v} has a neighbor at distance 3 from {x}"
            )));
        }
    }
    Builder::new(g, x, a, b, d)?.build()
}

/// Colors `g` from the matrix of the two lowest closed bunches at `x`.
pub fn color_two_bunch(g: &Graph, x: usize) -> Result<Certificate> {
    color_two_bunch_in(g, x, g.girth())
}

pub(crate) fn color_two_bunch_in(g: &Graph, x: usize, girth: Option<usize>) -> Result<Certificate> {
    require_scope(g, x, girth)?;
    let closed = LocalView::new(g, x).closed_bunch_neighbors();
    if closed.len() < 2 {
        return Err(Error::PreconditionViolated(format!(
            "{} closed bunches at {x}, need 2",
            closed.len()
        )));
    }
    color_two_bunch_impl(g, x, closed[0], closed[1], girth)
}

/// Colors `g` from the matrix with the bunches of `a` and `b` as first and
/// last columns.
pub fn color_two_bunch_with(g: &Graph, x: usize, a: usize, b: usize) -> Result<Certificate> {
    color_two_bunch_impl(g, x, a, b, g.girth())
}

fn color_two_bunch_impl(
    g: &Graph,
    x: usize,
    a: usize,
    b: usize,
    girth: Option<usize>,
) -> Result<Certificate> {
    let m = order_with(g, x, a, b, girth)?;
    let c = color_matrix(g, &m)?;
    let d = m.d();
    let mut claims: BTreeMap<usize, usize> = (0..d - 2).map(|i| (i + 1, m.columns[i])).collect();
    claims.insert(d - 1, m.rows[d - 3]);
    claims.insert(d, m.rows[d - 2]);
    claims.insert(d + 1, x);
    finish(
        g,
        Draft {
            strategy: Strategy::TwoBunch,
            center: x,
            neighbor_order: m.columns.clone(),
            row_order: Some(m.rows.clone()),
            b_vertices: claims,
            girth,
            coloring: &c,
        },
    )
}

/// Steps 1 to 7 of the matrix coloring, covering `N2[x]` only.
fn color_matrix(g: &Graph, m: &BunchMatrix) -> Result<PartialColoring> {
    let d = m.d();
    let fail = |step: &str, detail: String| Error::ConstructionFailed {
        step: step.to_string(),
        log: vec![format!("matrix {m:?}"), detail],
    };
    let cell = |row: usize, col: usize| m.cells[row - 1][col - 1];
    let mut c = PartialColoring::new(g.n(), d + 1);
    color_center(&mut c, m.center, &m.columns)?;
    for j in 1..d {
        c.set(cell(j, 1), j + 1)?;
    }
    for &v in &m.i1 {
        c.set(v, 1)?;
    }
    for j in 4..d {
        c.set(cell(j, d), d + 1)?;
    }

    let last_row: HashMap<usize, usize> = (1..d).map(|j| (cell(j, d), j)).collect();
    let mut step6 = Vec::new();
    for col in 2..=d - 2 {
        step6.extend((1..d).map(|row| (row, col)));
    }
    step6.extend((4..d).map(|row| (row, d - 1)));
    for (row, col) in step6 {
        let w = cell(row, col);
        if c.is_colored(w) {
            continue;
        }
        let s = g
            .neighbors(w)
            .iter()
            .find_map(|v| last_row.get(v))
            .ok_or_else(|| fail("step 6", format!("{w} has no neighbor in the last column")))?;
        c.set(w, s + 1)?;
    }
    for col in 1..=d - 2 {
        let mut seen = BTreeSet::new();
        for row in 1..d {
            if let Some(color) = c.get(cell(row, col)) {
                if !seen.insert(color) {
                    return Err(fail(
                        "step 6",
                        format!("color {color} repeats in column {col}"),
                    ));
                }
            }
        }
    }

    for row in 1..=3 {
        for col in [d - 1, d] {
            let w = cell(row, col);
            let color = c
                .available_colors(g, w)?
                .first()
                .copied()
                .ok_or_else(|| fail("step 7", format!("no color left for {w}")))?;
            c.set(w, color)?;
        }
    }
    if let Some((u, v)) = c.first_conflict(g) {
        return Err(fail(
            "N2 coloring",
            format!("edge {u}-{v} is monochromatic"),
        ));
    }
    Ok(c)
}
