//! Knots and links in grid position: parsing, validity, crossings, corner
//! census, Thurston-Bennequin invariants and elementary grid moves.
//!
//! An `n x n` grid carries one `X` and one `O` marker in every row and
//! every column. Rows are indexed `1..=n` top to bottom, columns `1..=n`
//! left to right. In every row the horizontal segment runs from the `X`
//! to the `O`; in every column the vertical segment runs from the `O` to
//! the `X`. Vertical segments always cross over horizontal ones.

use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GridError {
    #[error("line {line}: malformed header, expected `grid <n>`")]
    MalformedHeader { line: usize },
    #[error("line {line}: expected `{what}` row with {n} columns")]
    MalformedMarkerRow { line: usize, what: char, n: usize },
    #[error("line {line}: {what} columns are not a permutation of 1..={n}")]
    NotPermutation { line: usize, what: char, n: usize },
    #[error("X/O collision row {row}")]
    MarkerCollision { row: usize },
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("hole cell ({row},{col}) intersects a segment of the link")]
    HoleOnSegment { row: usize, col: usize },
    #[error("column {col} has no NE corner at its top")]
    NotNeCorner { col: usize },
    #[error("vertical translation by {shift} moves a segment across the hole cell")]
    TranslationCrossesHole { shift: usize },
    #[error("component index {index} out of range (grid has {count})")]
    BadComponent { index: usize, count: usize },
}

/// Corner type of a segment endpoint, named by the quadrant the corner
/// opens away from: an NW corner looks like `┌` (arms south and east).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Corner {
    NW,
    NE,
    SW,
    SE,
}

/// Requested framing for a 2-handle attached along one link component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FramingSpec {
    /// `tb - 1`, the default for Stein handles.
    TbMinusOne,
    Absolute(i64),
}

/// A knot or link in grid position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridDiagram {
    n: usize,
    /// Column of the X marker in each row, 1-based, indexed by `row - 1`.
    xs: Vec<usize>,
    /// Column of the O marker in each row.
    os: Vec<usize>,
    /// Cell marking the hole of the annulus 0-handle, if any.
    hole: Option<(usize, usize)>,
    /// Framing overrides per component index.
    framings: Vec<(usize, FramingSpec)>,
}

/// One crossing of the diagram; the vertical strand is the over strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Crossing {
    pub row: usize,
    pub col: usize,
    pub sign: i64,
}

/// Both endpoints of every vertical segment classified by corner type.
#[derive(Debug, Clone)]
pub struct CornerCensus {
    /// `(top, bottom)` corner of the vertical segment in each column,
    /// indexed by `col - 1`.
    pub columns: Vec<(Corner, Corner)>,
}

impl CornerCensus {
    pub fn count(&self, kind: Corner) -> usize {
        self.columns
            .iter()
            .flat_map(|&(t, b)| [t, b])
            .filter(|&c| c == kind)
            .count()
    }

    /// Columns whose vertical segment has the given corner at its top.
    pub fn columns_with_top(&self, kind: Corner) -> Vec<usize> {
        self.columns
            .iter()
            .enumerate()
            .filter(|(_, &(t, _))| t == kind)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

/// Classical invariants of one Legendrian link component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LegendrianInvariants {
    /// Signed self-crossing count of the component.
    pub writhe: i64,
    /// Number of NW corners on the component (left cusps of the front).
    pub nw_corners: usize,
    pub tb: i64,
    /// 2-handle framing, `tb - 1` unless overridden.
    pub framing: i64,
}

impl GridDiagram {
    pub fn new(
        xs: Vec<usize>,
        os: Vec<usize>,
        hole: Option<(usize, usize)>,
    ) -> Result<Self, GridError> {
        let g = GridDiagram {
            n: xs.len(),
            xs,
            os,
            hole,
            framings: Vec::new(),
        };
        g.validate()?;
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Column of the X marker in `row`.
    pub fn x_col(&self, row: usize) -> usize {
        self.xs[row - 1]
    }

    /// Column of the O marker in `row`.
    pub fn o_col(&self, row: usize) -> usize {
        self.os[row - 1]
    }

    /// Row of the X marker in `col`.
    pub fn x_row(&self, col: usize) -> usize {
        self.xs.iter().position(|&c| c == col).unwrap() + 1
    }

    /// Row of the O marker in `col`.
    pub fn o_row(&self, col: usize) -> usize {
        self.os.iter().position(|&c| c == col).unwrap() + 1
    }

    pub fn hole(&self) -> Option<(usize, usize)> {
        self.hole
    }

    pub fn framing_overrides(&self) -> &[(usize, FramingSpec)] {
        &self.framings
    }

    pub fn set_framing_override(&mut self, component: usize, spec: FramingSpec) {
        self.framings.push((component, spec));
    }

    fn validate(&self) -> Result<(), GridError> {
        let n = self.n;
        for (what, v) in [('X', &self.xs), ('O', &self.os)] {
            let mut seen = vec![false; n];
            for &c in v {
                if c == 0 || c > n || seen[c - 1] {
                    return Err(GridError::NotPermutation { line: 0, what, n });
                }
                seen[c - 1] = true;
            }
        }
        for r in 1..=n {
            if self.xs[r - 1] == self.os[r - 1] {
                return Err(GridError::MarkerCollision { row: r });
            }
        }
        if let Some((hr, hc)) = self.hole {
            if hr == 0 || hr > n || hc == 0 || hc > n {
                return Err(GridError::Malformed {
                    line: 0,
                    msg: format!("hole cell ({hr},{hc}) outside the grid"),
                });
            }
            if self.segment_covers_cell(hr, hc) {
                return Err(GridError::HoleOnSegment { row: hr, col: hc });
            }
        }
        Ok(())
    }

    /// True if any horizontal or vertical segment passes through cell `(r, c)`.
    fn segment_covers_cell(&self, r: usize, c: usize) -> bool {
        let (x, o) = (self.xs[r - 1], self.os[r - 1]);
        let (lo, hi) = (x.min(o), x.max(o));
        if lo <= c && c <= hi {
            return true;
        }
        let (xr, or) = (self.x_row(c), self.o_row(c));
        let (lo, hi) = (xr.min(or), xr.max(or));
        lo <= r && r <= hi
    }

    /// Row span `(top, bottom)` of the vertical segment in `col`.
    pub fn vertical_span(&self, col: usize) -> (usize, usize) {
        let (a, b) = (self.x_row(col), self.o_row(col));
        (a.min(b), a.max(b))
    }

    /// Column span `(left, right)` of the horizontal segment in `row`.
    pub fn horizontal_span(&self, row: usize) -> (usize, usize) {
        let (a, b) = (self.xs[row - 1], self.os[row - 1]);
        (a.min(b), a.max(b))
    }

    /// True if the vertical segment in `col` runs upward (O below X).
    pub fn vertical_up(&self, col: usize) -> bool {
        self.x_row(col) < self.o_row(col)
    }

    /// True if the horizontal segment in `row` runs eastward (X west of O).
    pub fn horizontal_east(&self, row: usize) -> bool {
        self.xs[row - 1] < self.os[row - 1]
    }

    /// All crossings; vertical over horizontal, signs from the component
    /// orientations (X to O along rows, O to X along columns).
    pub fn crossings(&self) -> Vec<Crossing> {
        let mut out = Vec::new();
        for col in 1..=self.n {
            let (top, bot) = self.vertical_span(col);
            for row in top + 1..bot {
                let (l, r) = self.horizontal_span(row);
                if l < col && col < r {
                    let sign = if self.vertical_up(col) != self.horizontal_east(row) {
                        1
                    } else {
                        -1
                    };
                    out.push(Crossing { row, col, sign });
                }
            }
        }
        out
    }

    /// Total writhe of the diagram, all components together.
    pub fn writhe(&self) -> i64 {
        self.crossings().iter().map(|c| c.sign).sum()
    }

    pub fn corner_census(&self) -> CornerCensus {
        let columns = (1..=self.n)
            .map(|col| {
                let (top, bot) = self.vertical_span(col);
                let top_corner = if self.arm_goes_east(top, col) {
                    Corner::NW
                } else {
                    Corner::NE
                };
                let bot_corner = if self.arm_goes_east(bot, col) {
                    Corner::SW
                } else {
                    Corner::SE
                };
                (top_corner, bot_corner)
            })
            .collect();
        CornerCensus { columns }
    }

    /// Direction of the horizontal arm leaving the marker at `(row, col)`.
    fn arm_goes_east(&self, row: usize, col: usize) -> bool {
        let other = if self.xs[row - 1] == col {
            self.os[row - 1]
        } else {
            self.xs[row - 1]
        };
        other > col
    }

    /// Components as row orbits of the traversal permutation, each sorted
    /// by smallest row. `component_of_row[r-1]` gives the component index.
    pub fn components(&self) -> Vec<Vec<usize>> {
        // Row r's horizontal ends at O in column os[r]; the vertical there
        // leads to the X of the next row.
        let next = |r: usize| self.x_row(self.os[r - 1]);
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 1..=self.n {
            if seen[start - 1] {
                continue;
            }
            let mut rows = Vec::new();
            let mut r = start;
            while !seen[r - 1] {
                seen[r - 1] = true;
                rows.push(r);
                r = next(r);
            }
            comps.push(rows);
        }
        comps
    }

    pub fn component_of_row(&self) -> Vec<usize> {
        let comps = self.components();
        let mut idx = vec![0; self.n];
        for (k, rows) in comps.iter().enumerate() {
            for &r in rows {
                idx[r - 1] = k;
            }
        }
        idx
    }

    pub fn component_of_col(&self) -> Vec<usize> {
        let by_row = self.component_of_row();
        (1..=self.n).map(|c| by_row[self.x_row(c) - 1]).collect()
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// tb, writhe and framing of one component. Self-crossings only; the
    /// linking with other components is reported by [`Self::linking_matrix`].
    pub fn legendrian_invariants(
        &self,
        component: usize,
    ) -> Result<LegendrianInvariants, GridError> {
        let comps = self.components();
        if component >= comps.len() {
            return Err(GridError::BadComponent {
                index: component,
                count: comps.len(),
            });
        }
        let row_comp = self.component_of_row();
        let col_comp = self.component_of_col();
        let writhe: i64 = self
            .crossings()
            .iter()
            .filter(|x| row_comp[x.row - 1] == component && col_comp[x.col - 1] == component)
            .map(|x| x.sign)
            .sum();
        let census = self.corner_census();
        let nw_corners = (1..=self.n)
            .filter(|&c| col_comp[c - 1] == component && census.columns[c - 1].0 == Corner::NW)
            .count();
        let tb = writhe - nw_corners as i64;
        let framing = self
            .framings
            .iter()
            .rev()
            .find(|(k, _)| *k == component)
            .map(|&(_, spec)| match spec {
                FramingSpec::TbMinusOne => tb - 1,
                FramingSpec::Absolute(f) => f,
            })
            .unwrap_or(tb - 1);
        Ok(LegendrianInvariants {
            writhe,
            nw_corners,
            tb,
            framing,
        })
    }

    /// Pairwise linking numbers; entry `(i, j)` is half the signed count
    /// of crossings between components `i != j`.
    pub fn linking_matrix(&self) -> Vec<Vec<i64>> {
        let k = self.component_count();
        let row_comp = self.component_of_row();
        let col_comp = self.component_of_col();
        let mut sums = vec![vec![0i64; k]; k];
        for x in self.crossings() {
            let (a, b) = (col_comp[x.col - 1], row_comp[x.row - 1]);
            if a != b {
                sums[a][b] += x.sign;
                sums[b][a] += x.sign;
            }
        }
        for row in &mut sums {
            for v in row.iter_mut() {
                debug_assert!(*v % 2 == 0);
                *v /= 2;
            }
        }
        sums
    }

    /// SW stabilization at the NE corner atop `col`: the corner is replaced
    /// by a small zigzag on an `(n+1) x (n+1)` grid. Adds one NW and one SE
    /// corner, preserves the writhe, drops tb by one.
    pub fn sw_stabilize_ne(&self, col: usize) -> Result<GridDiagram, GridError> {
        let census = self.corner_census();
        if census.columns[col - 1].0 != Corner::NE {
            return Err(GridError::NotNeCorner { col });
        }
        let (top, _) = self.vertical_span(col);
        let n = self.n;
        // New row inserted above `top`, new column inserted west of `col`:
        // old row r >= top maps to r+1, old column c >= col maps to c+1.
        let row_of = |r: usize| if r >= top { r + 1 } else { r };
        let col_of = |c: usize| if c >= col { c + 1 } else { c };
        let mut xs = vec![0; n + 1];
        let mut os = vec![0; n + 1];
        for r in 1..=n {
            xs[row_of(r) - 1] = col_of(self.xs[r - 1]);
            os[row_of(r) - 1] = col_of(self.os[r - 1]);
        }
        let top_is_x = self.x_row(col) == top;
        if top_is_x {
            // Strand ran up the column and west along the arm. The old top
            // marker moves up into the new row; the kink descends through
            // the new column.
            xs[top - 1] = col + 1;
            os[top - 1] = col;
            xs[top] = col;
        } else {
            // Strand ran west along the arm into the corner and down the
            // column; the kink ascends through the new column.
            os[row_of(top) - 1] = col;
            xs[top - 1] = col;
            os[top - 1] = col + 1;
        }
        let hole = self.hole.map(|(hr, hc)| (row_of(hr), col_of(hc)));
        let mut g = GridDiagram::new(xs, os, hole)?;
        g.framings = self.framings.clone();
        Ok(g)
    }

    /// Cyclically translate all rows down by `shift` (markers in row `r`
    /// move to row `r + shift mod n`). The hole cell does not move.
    pub fn vertical_translate(&self, shift: usize) -> Result<GridDiagram, GridError> {
        let n = self.n;
        let s = shift % n;
        let mut xs = vec![0; n];
        let mut os = vec![0; n];
        for r in 1..=n {
            let nr = (r - 1 + s) % n + 1;
            xs[nr - 1] = self.xs[r - 1];
            os[nr - 1] = self.os[r - 1];
        }
        let g = GridDiagram {
            n,
            xs,
            os,
            hole: self.hole,
            framings: self.framings.clone(),
        };
        match g.validate() {
            Ok(()) => Ok(g),
            Err(GridError::HoleOnSegment { .. }) => {
                Err(GridError::TranslationCrossesHole { shift: s })
            }
            Err(e) => Err(e),
        }
    }

    /// Rotate the diagram by 180 degrees: `(r, c) -> (n+1-r, n+1-c)` with
    /// marker roles preserved.
    pub fn rotate180(&self) -> GridDiagram {
        let n = self.n;
        let mut xs = vec![0; n];
        let mut os = vec![0; n];
        for r in 1..=n {
            xs[n - r] = n + 1 - self.xs[r - 1];
            os[n - r] = n + 1 - self.os[r - 1];
        }
        GridDiagram {
            n,
            xs,
            os,
            hole: self.hole.map(|(hr, hc)| (n + 1 - hr, n + 1 - hc)),
            framings: self.framings.clone(),
        }
    }
}

impl fmt::Display for GridDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 1..=self.n {
            for c in 1..=self.n {
                let ch = if self.xs[r - 1] == c {
                    'X'
                } else if self.os[r - 1] == c {
                    'O'
                } else if self.hole == Some((r, c)) {
                    '#'
                } else {
                    '.'
                };
                write!(f, "{ch}")?;
                if c < self.n {
                    write!(f, " ")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Parse the line-oriented grid file format.
///
/// ```text
/// grid 5
/// X 5 1 2 3 4
/// O 2 3 4 5 1
/// # optional lines:
/// hole 3 4
/// framing 0 tb-1
/// ```
pub fn parse_grid(text: &str) -> Result<GridDiagram, GridError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (lno, header) = lines.next().ok_or(GridError::MalformedHeader { line: 1 })?;
    let n: usize = header
        .strip_prefix("grid")
        .and_then(|rest| rest.trim().parse().ok())
        .filter(|&n| n >= 2)
        .ok_or(GridError::MalformedHeader { line: lno })?;

    let mut parse_markers = |what: char| -> Result<(usize, Vec<usize>), GridError> {
        let (lno, line) = lines.next().ok_or(GridError::MalformedMarkerRow {
            line: 0,
            what,
            n,
        })?;
        let mut it = line.split_whitespace();
        if it.next() != Some(&what.to_string()[..]) {
            return Err(GridError::MalformedMarkerRow { line: lno, what, n });
        }
        let cols: Vec<usize> = it.map(|t| t.parse().unwrap_or(0)).collect();
        if cols.len() != n || cols.iter().any(|&c| c == 0) {
            return Err(GridError::MalformedMarkerRow { line: lno, what, n });
        }
        Ok((lno, cols))
    };
    let (xline, xs) = parse_markers('X')?;
    let (oline, os) = parse_markers('O')?;

    let mut hole = None;
    let mut framings = Vec::new();
    for (lno, line) in lines {
        let mut it = line.split_whitespace();
        match it.next() {
            Some("hole") => {
                let r: usize = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| bad(lno, "expected `hole <row> <col>`"))?;
                let c: usize = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| bad(lno, "expected `hole <row> <col>`"))?;
                hole = Some((r, c));
            }
            Some("framing") => {
                let k: usize = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| bad(lno, "expected `framing <component> <int|tb-1>`"))?;
                let spec = match it.next() {
                    Some("tb-1") => FramingSpec::TbMinusOne,
                    Some(t) => FramingSpec::Absolute(
                        t.parse()
                            .map_err(|_| bad(lno, "framing value must be an integer or tb-1"))?,
                    ),
                    None => return Err(bad(lno, "expected `framing <component> <int|tb-1>`")),
                };
                framings.push((k, spec));
            }
            Some(other) => return Err(bad(lno, &format!("unknown directive `{other}`"))),
            None => {}
        }
    }

    // Attribute permutation failures to the marker lines they came from.
    let mut g = GridDiagram {
        n,
        xs,
        os,
        hole,
        framings,
    };
    match g.validate() {
        Ok(()) => {}
        Err(GridError::NotPermutation { what, n, .. }) => {
            let line = if what == 'X' { xline } else { oline };
            return Err(GridError::NotPermutation { line, what, n });
        }
        Err(e) => return Err(e),
    }
    g.framings.sort_by_key(|&(k, _)| k);
    Ok(g)
}

fn bad(line: usize, msg: &str) -> GridError {
    GridError::Malformed {
        line,
        msg: msg.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::fixtures;

    #[test]
    fn unknot_2x2() {
        let g = GridDiagram::new(vec![1, 2], vec![2, 1], None).unwrap();
        assert_eq!(g.writhe(), 0);
        assert_eq!(g.component_count(), 1);
        let census = g.corner_census();
        for kind in [Corner::NW, Corner::NE, Corner::SW, Corner::SE] {
            assert_eq!(census.count(kind), 1);
        }
        let inv = g.legendrian_invariants(0).unwrap();
        assert_eq!((inv.writhe, inv.nw_corners, inv.tb, inv.framing), (0, 1, -1, -2));
    }

    #[test]
    fn trefoil_invariants() {
        let g = fixtures::trefoil5();
        assert_eq!(g.n(), 5);
        assert_eq!(g.component_count(), 1);
        assert_eq!(g.writhe(), 3);
        let census = g.corner_census();
        assert_eq!(census.count(Corner::NW), 2);
        assert_eq!(census.columns_with_top(Corner::NW), vec![1, 2]);
        assert_eq!(census.columns_with_top(Corner::NE), vec![3, 4, 5]);
        let inv = g.legendrian_invariants(0).unwrap();
        assert_eq!(inv.tb, 1);
        assert_eq!(inv.framing, 0);
    }

    // Independent crossing enumeration: brute-force over all (row, col)
    // pairs with explicit segment membership tests.
    fn brute_force_crossings(g: &GridDiagram) -> Vec<(usize, usize, i64)> {
        let mut out = Vec::new();
        for row in 1..=g.n() {
            for col in 1..=g.n() {
                let (l, r) = g.horizontal_span(row);
                let (t, b) = g.vertical_span(col);
                if l < col && col < r && t < row && row < b {
                    let up = g.x_row(col) < g.o_row(col);
                    let east = g.x_col(row) < g.o_col(row);
                    let sign = if up != east { 1 } else { -1 };
                    out.push((row, col, sign));
                }
            }
        }
        out
    }

    #[test]
    fn crossings_match_brute_force() {
        for g in [
            fixtures::trefoil5(),
            fixtures::torus_knot(3),
            fixtures::figure_eight(),
        ] {
            let got: Vec<_> = g.crossings().iter().map(|c| (c.row, c.col, c.sign)).collect();
            let mut want = brute_force_crossings(&g);
            want.sort();
            let mut got_sorted = got.clone();
            got_sorted.sort();
            assert_eq!(got_sorted, want);
        }
    }

    #[test]
    fn torus_family_tb() {
        for n in 1..=4 {
            let g = fixtures::torus_knot(n);
            let inv = g.legendrian_invariants(0).unwrap();
            assert_eq!(inv.writhe, 2 * n as i64 + 1);
            assert_eq!(inv.tb, 2 * n as i64 - 1);
        }
    }

    #[test]
    fn stabilization_drops_tb() {
        let g = fixtures::trefoil5();
        let ne_col = g.corner_census().columns_with_top(Corner::NE)[0];
        let s = g.sw_stabilize_ne(ne_col).unwrap();
        assert_eq!(s.n(), 6);
        assert_eq!(s.writhe(), 3);
        assert_eq!(s.legendrian_invariants(0).unwrap().tb, 0);
        assert_eq!(s.component_count(), 1);

        // Applying twice drops tb by two.
        let ne2 = s.corner_census().columns_with_top(Corner::NE)[0];
        let s2 = s.sw_stabilize_ne(ne2).unwrap();
        assert_eq!(s2.legendrian_invariants(0).unwrap().tb, -1);

        // 2x2 unknot loses a tb as well.
        let u = GridDiagram::new(vec![1, 2], vec![2, 1], None).unwrap();
        let su = u.sw_stabilize_ne(2).unwrap();
        assert_eq!(su.n(), 3);
        assert_eq!(su.legendrian_invariants(0).unwrap().tb, -2);
    }

    #[test]
    fn stabilization_requires_ne() {
        let g = fixtures::trefoil5();
        assert_eq!(g.sw_stabilize_ne(1), Err(GridError::NotNeCorner { col: 1 }));
    }

    #[test]
    fn translation_identity_and_cycle() {
        let g = fixtures::trefoil5();
        assert_eq!(g.vertical_translate(0).unwrap(), g);
        assert_eq!(g.vertical_translate(g.n()).unwrap(), g);
        // Translation preserves tb but can trade writhe against corners.
        let t = g.vertical_translate(2).unwrap();
        assert_eq!(
            t.legendrian_invariants(0).unwrap().tb,
            g.legendrian_invariants(0).unwrap().tb
        );
        assert_eq!(t.vertical_translate(3).unwrap(), g);
    }

    #[test]
    fn rotate180_is_involution_and_swaps_census() {
        for g in [fixtures::trefoil5(), fixtures::figure_eight()] {
            let r = g.rotate180();
            assert_eq!(r.rotate180(), g);
            assert_eq!(r.writhe(), g.writhe());
            let (c0, c1) = (g.corner_census(), r.corner_census());
            assert_eq!(c0.count(Corner::NW), c1.count(Corner::SE));
            assert_eq!(c0.count(Corner::NE), c1.count(Corner::SW));
            assert_eq!(c0.count(Corner::SW), c1.count(Corner::NE));
            assert_eq!(c0.count(Corner::SE), c1.count(Corner::NW));
        }
        let u = GridDiagram::new(vec![1, 2], vec![2, 1], None).unwrap();
        assert_eq!(u.rotate180(), u);
    }

    #[test]
    fn tb_invariant_under_translation() {
        let g = fixtures::trefoil5();
        for s in 0..g.n() {
            let t = g.vertical_translate(s).unwrap();
            assert_eq!(t.legendrian_invariants(0).unwrap().tb, 1);
        }
        let f = fixtures::figure_eight();
        let tb = f.legendrian_invariants(0).unwrap().tb;
        for s in 0..f.n() {
            let t = f.vertical_translate(s).unwrap();
            assert_eq!(t.legendrian_invariants(0).unwrap().tb, tb);
        }
    }

    #[test]
    fn parse_round_trip_and_errors() {
        let g = parse_grid("grid 5\nX 5 1 2 3 4\nO 2 3 4 5 1\n").unwrap();
        assert_eq!(g, fixtures::trefoil5());

        let e = parse_grid("grid 2\nX 1 1\nO 2 1\n").unwrap_err();
        assert_eq!(
            e,
            GridError::NotPermutation {
                line: 2,
                what: 'X',
                n: 2
            }
        );

        let e = parse_grid("grid 2\nX 1 2\nO 1 1\n").unwrap_err();
        assert!(matches!(e, GridError::NotPermutation { what: 'O', .. }));

        let e = parse_grid("grid 3\nX 1 2 3\nO 3 2 1\n").unwrap_err();
        assert_eq!(e, GridError::MarkerCollision { row: 2 });
        assert_eq!(e.to_string(), "X/O collision row 2");

        assert!(matches!(
            parse_grid("grib 3\n"),
            Err(GridError::MalformedHeader { line: 1 })
        ));

        // Hole in the middle of a segment.
        let e = parse_grid("grid 3\nX 1 2 3\nO 2 3 1\nhole 1 1\n");
        assert!(matches!(e, Err(GridError::HoleOnSegment { .. })));
    }

    #[test]
    fn component_decomposition() {
        let g = fixtures::link_example();
        assert_eq!(g.component_count(), 2);
        let comps = g.components();
        let total: usize = comps.iter().map(|c| c.len()).sum();
        assert_eq!(total, g.n());
    }
}
