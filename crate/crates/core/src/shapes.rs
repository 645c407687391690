//! Strict partitions and shifted (skew) diagrams.
//!
//! A strict partition `{7 > 4 > 2 > 1}` is drawn as a shifted diagram: row `i`
//! carries `parts[i]` boxes after `i - 1` empty positions. A skew diagram is
//! the set difference of two nested shifted diagrams. Cells use matrix
//! coordinates `(row, col)`, 1-indexed with row 1 on top; the Cartesian box
//! `B(x, y)` of the literature corresponds to `x = col`, `y = -row`, so the
//! up-left neighbor `B(x-1, y+1)` is `(row - 1, col - 1)` and the box below,
//! `B(x, y-1)`, is `(row + 1, col)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A strictly decreasing sequence of positive integers; possibly empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StrictPartition {
    parts: Vec<u32>,
}

impl StrictPartition {
    /// Validates strict decrease and positivity of the parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::NonPositivePart);
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] <= w[1]) {
            return Err(Error::NotStrictlyDecreasing {
                prev: w[0],
                next: w[1],
            });
        }
        Ok(StrictPartition { parts })
    }

    pub fn empty() -> Self {
        StrictPartition { parts: Vec::new() }
    }

    /// Parses a comma- or whitespace-separated list of positive integers.
    /// The empty (or all-blank) string is the empty partition.
    pub fn parse(text: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for token in text.split(|c: char| c == ',' || c.is_whitespace()) {
            if token.is_empty() {
                continue;
            }
            let value: u32 = token
                .parse()
                .map_err(|_| Error::MalformedToken(token.to_string()))?;
            parts.push(value);
        }
        StrictPartition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The part at 0-based index `i`, or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// True when the shifted diagram of `inner` sits inside this one.
    pub fn contains(&self, inner: &StrictPartition) -> bool {
        inner.len() <= self.len() && (0..inner.len()).all(|i| inner.part(i) <= self.part(i))
    }

    /// The staircase `{m > m-1 > ... > 1}`.
    pub fn staircase(m: u32) -> Self {
        StrictPartition {
            parts: (1..=m).rev().collect(),
        }
    }

    /// The consecutive run `{hi > hi-1 > ... > lo}`; empty when `lo > hi`.
    pub fn run(hi: u32, lo: u32) -> Self {
        StrictPartition {
            parts: (lo..=hi).rev().collect(),
        }
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// One box of a diagram, 1-indexed, row 1 on top.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub fn new(row: u32, col: u32) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Cell { row, col }
    }

    /// `B(x-1, y+1)`: one row up, one column left.
    pub fn up_left(&self) -> Option<Cell> {
        (self.row > 1 && self.col > 1).then(|| Cell::new(self.row - 1, self.col - 1))
    }

    /// `B(x, y+1)`: one row up.
    pub fn up(&self) -> Option<Cell> {
        (self.row > 1).then(|| Cell::new(self.row - 1, self.col))
    }

    /// `B(x, y-1)`: one row down.
    pub fn down(&self) -> Cell {
        Cell::new(self.row + 1, self.col)
    }

    /// `B(x-1, y)`: one column left.
    pub fn left(&self) -> Option<Cell> {
        (self.col > 1).then(|| Cell::new(self.row, self.col - 1))
    }

    /// `B(x+1, y)`: one column right.
    pub fn right(&self) -> Cell {
        Cell::new(self.row, self.col + 1)
    }
}

/// A shifted skew diagram: the cell set of `outer` minus the cell set of
/// `inner`, both in shifted coordinates. Row `i` (1-based) occupies columns
/// `i + inner[i] ..= i + outer[i] - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: StrictPartition,
    inner: StrictPartition,
    cells: Vec<Cell>,
}

impl SkewShape {
    /// Builds the skew shape, rejecting inner partitions that stick out.
    pub fn new(outer: StrictPartition, inner: StrictPartition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained);
        }
        let mut cells = Vec::with_capacity(outer.size() - inner.size());
        for i in 0..outer.len() {
            let row = i as u32 + 1;
            let lo = row + inner.part(i);
            let hi = row + outer.part(i) - 1;
            for col in lo..=hi {
                cells.push(Cell::new(row, col));
            }
        }
        Ok(SkewShape {
            outer,
            inner,
            cells,
        })
    }

    pub fn empty() -> Self {
        SkewShape {
            outer: StrictPartition::empty(),
            inner: StrictPartition::empty(),
            cells: Vec::new(),
        }
    }

    /// Convenience constructor from part lists.
    pub fn from_parts(outer: &[u32], inner: &[u32]) -> Result<Self> {
        SkewShape::new(
            StrictPartition::new(outer.to_vec())?,
            StrictPartition::new(inner.to_vec())?,
        )
    }

    pub fn outer(&self) -> &StrictPartition {
        &self.outer
    }

    pub fn inner(&self) -> &StrictPartition {
        &self.inner
    }

    /// All cells, sorted by `(row, col)`.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn ncells(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Number of diagram rows (including empty ones), i.e. `len(outer)`.
    pub fn nrows(&self) -> u32 {
        self.outer.len() as u32
    }

    /// Column interval `(lo, hi)` of a row, or `None` when the row is empty
    /// or outside the diagram.
    pub fn row_interval(&self, row: u32) -> Option<(u32, u32)> {
        if row == 0 || row > self.nrows() {
            return None;
        }
        let i = (row - 1) as usize;
        let lo = row + self.inner.part(i);
        let hi = row + self.outer.part(i) - 1;
        (lo <= hi).then_some((lo, hi))
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.row_interval(cell.row)
            .is_some_and(|(lo, hi)| lo <= cell.col && cell.col <= hi)
    }

    /// Length of the longest row.
    pub fn max_row_len(&self) -> u32 {
        (0..self.outer.len())
            .map(|i| self.outer.part(i) - self.inner.part(i))
            .max()
            .unwrap_or(0)
    }

    /// Cells in the order the row word reads them: bottom row first, each
    /// row left to right.
    pub fn cells_reading_order(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.cells.len());
        for row in (1..=self.nrows()).rev() {
            if let Some((lo, hi)) = self.row_interval(row) {
                for col in lo..=hi {
                    out.push(Cell::new(row, col));
                }
            }
        }
        out
    }

    /// The canonical representative of the translation class of the cell set.
    ///
    /// Empty rows are dropped, then the cell set is translated to the unique
    /// position where it is realizable as an `(outer, inner)` pair with the
    /// last row anchored on the staircase edge (`inner` shorter than
    /// `outer`). This is the lexicographically smallest realization; two
    /// shapes canonicalize identically exactly when their cell sets agree up
    /// to translation (after empty-row removal).
    pub fn canonicalize(&self) -> SkewShape {
        let intervals: Vec<(i64, i64)> = (1..=self.nrows())
            .filter_map(|row| self.row_interval(row))
            .map(|(lo, hi)| (lo as i64, hi as i64))
            .collect();
        if intervals.is_empty() {
            return SkewShape::empty();
        }
        let n = intervals.len();
        // Left excess e_i = a_i - i is strictly decreasing and then constant
        // for any valid skew cell set; anchoring the constant tail at zero
        // picks the minimal horizontal translate.
        let shift = intervals[n - 1].0 - n as i64;
        let mut outer = Vec::with_capacity(n);
        let mut inner = Vec::new();
        for (idx, &(a, b)) in intervals.iter().enumerate() {
            let i = idx as i64 + 1;
            let lambda = b - i + 1 - shift;
            let mu = a - i - shift;
            debug_assert!(lambda >= 1 && mu >= 0);
            outer.push(lambda as u32);
            if mu > 0 {
                inner.push(mu as u32);
            } else {
                debug_assert!(intervals[idx..].iter().enumerate().all(
                    |(j, &(a2, _))| a2 - (idx + j) as i64 - 1 - shift == 0
                ));
            }
        }
        let canonical = SkewShape::new(
            StrictPartition::new(outer).expect("canonical outer is strict"),
            StrictPartition::new(inner).expect("canonical inner is strict"),
        )
        .expect("canonical pair is contained");
        debug_assert_eq!(canonical.ncells(), self.ncells());
        canonical
    }

    /// All nonempty diagonals, ordered by offset `col - row`.
    pub fn diagonals(&self) -> Vec<Diagonal> {
        let mut by_offset: BTreeMap<i64, Vec<Cell>> = BTreeMap::new();
        for &cell in &self.cells {
            by_offset
                .entry(cell.col as i64 - cell.row as i64)
                .or_default()
                .push(cell);
        }
        by_offset
            .into_iter()
            .map(|(offset, mut cells)| {
                cells.sort();
                debug_assert!(cells
                    .windows(2)
                    .all(|w| w[1].row == w[0].row + 1 && w[1].col == w[0].col + 1));
                Diagonal { offset, cells }
            })
            .collect()
    }

    /// One text line per diagram row: a `.` per absent leading position and
    /// `[]` per cell. The empty shape renders as the empty string.
    pub fn render_ascii(&self) -> String {
        let mut out = String::new();
        for row in 1..=self.nrows() {
            let i = (row - 1) as usize;
            let skip = (row - 1 + self.inner.part(i)) as usize;
            let boxes = (self.outer.part(i) - self.inner.part(i)) as usize;
            out.push_str(&".".repeat(skip));
            out.push_str(&"[]".repeat(boxes));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// A maximal run of cells sharing `col - row`, which steps down-right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagonal {
    offset: i64,
    cells: Vec<Cell>,
}

impl Diagonal {
    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// `l_s`: one less than the number of cells.
    pub fn arm_length(&self) -> usize {
        self.cells.len() - 1
    }
}

/// A `(p, q)`-hook: `p` vertical boxes in the first column whose top box
/// starts a row of `q` boxes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hook {
    pub p: u32,
    pub q: u32,
    pub anchor: Cell,
}

impl Hook {
    pub fn new(p: u32, q: u32, anchor: Cell) -> Self {
        debug_assert!(p >= 1 && q >= 1);
        Hook { p, q, anchor }
    }

    /// The `p + q - 1` cells of the hook, sorted by `(row, col)`.
    pub fn cells(&self) -> Vec<Cell> {
        let mut cells = Vec::with_capacity((self.p + self.q - 1) as usize);
        for dc in 0..self.q {
            cells.push(Cell::new(self.anchor.row, self.anchor.col + dc));
        }
        for dr in 1..self.p {
            cells.push(Cell::new(self.anchor.row + dr, self.anchor.col));
        }
        cells.sort();
        cells
    }

    /// Recognizes a cell set as a hook; `None` when it is not one.
    pub fn from_cells(cells: &[Cell]) -> Option<Hook> {
        if cells.is_empty() {
            return None;
        }
        let mut sorted = cells.to_vec();
        sorted.sort();
        sorted.dedup();
        let anchor = sorted[0];
        let q = sorted.iter().filter(|c| c.row == anchor.row).count() as u32;
        let p = sorted.iter().filter(|c| c.col == anchor.col).count() as u32;
        let candidate = Hook::new(p, q, anchor);
        (candidate.cells() == sorted).then_some(candidate)
    }
}

/// All strict partitions with size at most `max_sum`, the empty partition
/// included, ordered lexicographically by parts.
pub fn strict_partitions_up_to(max_sum: usize) -> Vec<StrictPartition> {
    let mut out = Vec::new();
    let mut parts: Vec<u32> = Vec::new();
    fn go(parts: &mut Vec<u32>, budget: usize, out: &mut Vec<StrictPartition>) {
        out.push(StrictPartition {
            parts: parts.clone(),
        });
        let cap = parts.last().map_or(budget as u64, |&l| l as u64 - 1) as usize;
        for next in (1..=cap.min(budget)).rev() {
            parts.push(next as u32);
            go(parts, budget - next, out);
            parts.pop();
        }
    }
    go(&mut parts, max_sum, &mut out);
    out.sort();
    out
}

/// All strict partitions contained in `outer` (part-wise), the empty one
/// included, ordered lexicographically.
pub fn contained_strict_partitions(outer: &StrictPartition) -> Vec<StrictPartition> {
    let mut out = Vec::new();
    let mut parts: Vec<u32> = Vec::new();
    fn go(
        outer: &StrictPartition,
        parts: &mut Vec<u32>,
        out: &mut Vec<StrictPartition>,
    ) {
        out.push(StrictPartition {
            parts: parts.clone(),
        });
        let i = parts.len();
        if i >= outer.len() {
            return;
        }
        let hi = outer.part(i).min(parts.last().map_or(u32::MAX, |&l| l - 1));
        for next in (1..=hi).rev() {
            parts.push(next);
            go(outer, parts, out);
            parts.pop();
        }
    }
    go(outer, &mut parts, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trips_paper_example() {
        let p = StrictPartition::parse("7,4,2,1").unwrap();
        assert_eq!(p.parts(), &[7, 4, 2, 1]);
        assert_eq!(p.size(), 14);
        assert_eq!(StrictPartition::parse("7 4 2 1").unwrap(), p);
    }

    #[test]
    fn parse_empty_is_empty_partition() {
        assert!(StrictPartition::parse("").unwrap().is_empty());
        assert!(StrictPartition::parse("  ").unwrap().is_empty());
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert_eq!(
            StrictPartition::parse("4,4,1"),
            Err(Error::NotStrictlyDecreasing { prev: 4, next: 4 })
        );
        assert_eq!(StrictPartition::parse("3,0"), Err(Error::NonPositivePart));
        assert!(matches!(
            StrictPartition::parse("3,x"),
            Err(Error::MalformedToken(_))
        ));
    }

    #[test]
    fn make_skew_example_two() {
        let shape = SkewShape::from_parts(&[7, 4, 2, 1], &[4, 2]).unwrap();
        assert_eq!(shape.ncells(), 8);
        let expected = vec![
            Cell::new(1, 5),
            Cell::new(1, 6),
            Cell::new(1, 7),
            Cell::new(2, 4),
            Cell::new(2, 5),
            Cell::new(3, 3),
            Cell::new(3, 4),
            Cell::new(4, 4),
        ];
        assert_eq!(shape.cells(), &expected[..]);
    }

    #[test]
    fn make_skew_vertical_domino() {
        let shape = SkewShape::from_parts(&[2, 1], &[1]).unwrap();
        assert_eq!(shape.cells(), &[Cell::new(1, 2), Cell::new(2, 2)]);
    }

    #[test]
    fn make_skew_rejects_uncontained() {
        assert_eq!(
            SkewShape::from_parts(&[3], &[4]),
            Err(Error::NotContained)
        );
        assert_eq!(
            SkewShape::from_parts(&[3], &[2, 1]),
            Err(Error::NotContained)
        );
    }

    #[test]
    fn reading_order_bottom_row_first() {
        let shape = SkewShape::from_parts(&[2, 1], &[1]).unwrap();
        assert_eq!(
            shape.cells_reading_order(),
            vec![Cell::new(2, 2), Cell::new(1, 2)]
        );
        assert!(SkewShape::empty().cells_reading_order().is_empty());

        let ex2 = SkewShape::from_parts(&[7, 4, 2, 1], &[4, 2]).unwrap();
        let order = ex2.cells_reading_order();
        assert_eq!(order.len(), 8);
        assert_eq!(order[0], Cell::new(4, 4));
        assert_eq!(order.last(), Some(&Cell::new(1, 7)));
    }

    #[test]
    fn canonicalize_translates_domino() {
        let a = SkewShape::from_parts(&[3, 2], &[2, 1]).unwrap();
        let b = SkewShape::from_parts(&[2, 1], &[1]).unwrap();
        assert_eq!(a.canonicalize(), b);
        assert_eq!(b.canonicalize(), b);
    }

    #[test]
    fn canonicalize_fixes_straight_shapes() {
        let s = SkewShape::from_parts(&[5, 3, 2], &[]).unwrap();
        assert_eq!(s.canonicalize(), s);
    }

    #[test]
    fn canonicalize_drops_empty_first_row() {
        let s = SkewShape::from_parts(&[4, 3, 2, 1], &[4, 1]).unwrap();
        let c = s.canonicalize();
        assert_eq!(c, SkewShape::from_parts(&[3, 2, 1], &[1]).unwrap());
        assert_eq!(c.canonicalize(), c);
    }

    #[test]
    fn canonicalize_handles_middle_empty_row() {
        // {5,3,2}/{4,3} has an empty middle row; rows [5,5] and [3,4] remain.
        let s = SkewShape::from_parts(&[5, 3, 2], &[4, 3]).unwrap();
        let c = s.canonicalize();
        assert_eq!(c, SkewShape::from_parts(&[4, 2], &[3]).unwrap());
    }

    #[test]
    fn diagonals_follow_col_minus_row() {
        let domino = SkewShape::from_parts(&[2, 1], &[1]).unwrap();
        let ds = domino.diagonals();
        assert_eq!(ds.len(), 2);
        assert!(ds.iter().all(|d| d.arm_length() == 0));

        let single = SkewShape::from_parts(&[1], &[]).unwrap();
        assert_eq!(single.diagonals().len(), 1);
        assert_eq!(single.diagonals()[0].arm_length(), 0);

        // Cells (1,2), (1,3), (2,2) have pairwise distinct col - row.
        let shape = SkewShape::from_parts(&[3, 1], &[1]).unwrap();
        let ds = shape.diagonals();
        assert_eq!(ds.len(), 3);
        assert_eq!(
            ds.iter().map(|d| d.offset()).collect::<Vec<_>>(),
            vec![0, 1, 2]
        );

        // A straight staircase has one long main diagonal.
        let stair = SkewShape::from_parts(&[3, 2, 1], &[]).unwrap();
        let main = &stair.diagonals()[0];
        assert_eq!(main.offset(), 0);
        assert_eq!(main.arm_length(), 2);
    }

    #[test]
    fn render_shifted_diagram() {
        let s = SkewShape::from_parts(&[7, 4, 2, 1], &[]).unwrap();
        let expected = "\
[][][][][][][]
.[][][][]
..[][]
...[]
";
        assert_eq!(s.render_ascii(), expected);
        assert_eq!(SkewShape::empty().render_ascii(), "");

        let ex2 = SkewShape::from_parts(&[7, 4, 2, 1], &[4, 2]).unwrap();
        let expected = "\
....[][][]
...[][]
..[][]
...[]
";
        assert_eq!(ex2.render_ascii(), expected);
    }

    #[test]
    fn hook_cells_and_recognition() {
        let hook = Hook::new(2, 3, Cell::new(1, 1));
        let cells = hook.cells();
        assert_eq!(cells.len(), 4);
        assert_eq!(Hook::from_cells(&cells), Some(hook));

        // An L the other way round is not a hook.
        let bent = vec![Cell::new(1, 2), Cell::new(2, 1), Cell::new(2, 2)];
        assert_eq!(Hook::from_cells(&bent), None);

        let single = vec![Cell::new(3, 3)];
        assert_eq!(Hook::from_cells(&single), Some(Hook::new(1, 1, Cell::new(3, 3))));
    }

    #[test]
    fn strict_partition_generators() {
        let up_to_4: Vec<_> = strict_partitions_up_to(4)
            .into_iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(
            up_to_4,
            vec![
                vec![],
                vec![1],
                vec![2],
                vec![2, 1],
                vec![3],
                vec![3, 1],
                vec![4],
            ]
        );

        let outer = StrictPartition::new(vec![3, 1]).unwrap();
        let contained: Vec<_> = contained_strict_partitions(&outer)
            .into_iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(
            contained,
            vec![vec![], vec![1], vec![2], vec![2, 1], vec![3], vec![3, 1]]
        );
    }
}
