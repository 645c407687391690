//! Generalized shifted Young tableaux: validity, row words, content, and
//! backtracking enumeration.
//!
//! A filling is a GSYT when rows and columns are weakly increasing, each row
//! contains each marked letter at most once, and each column contains each
//! unmarked letter at most once. Enumeration walks the cells in reading order
//! (bottom row first, left to right) placing letters in increasing alphabet
//! order, so streams are deterministic and sorted lexicographically by the
//! letter order.

use std::collections::BTreeMap;

use serde_json::json;

use crate::error::{Error, Result};
use crate::shapes::{Cell, SkewShape, StrictPartition};
use crate::words::{self, Letter, Word};

/// A letter per cell of a skew shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    shape: SkewShape,
    /// Aligned with `shape.cells()` (sorted by row, then column).
    entries: Vec<Letter>,
}

impl Tableau {
    /// Builds a tableau from `(cell, letter)` pairs covering the shape
    /// exactly.
    pub fn new(shape: SkewShape, mut cell_entries: Vec<(Cell, Letter)>) -> Result<Self> {
        cell_entries.sort_by_key(|&(c, _)| c);
        if cell_entries.len() != shape.ncells()
            || cell_entries
                .iter()
                .zip(shape.cells())
                .any(|(&(c, _), &s)| c != s)
        {
            return Err(Error::ShapeMismatch);
        }
        let entries = cell_entries.into_iter().map(|(_, l)| l).collect();
        Ok(Tableau { shape, entries })
    }

    /// Builds a tableau from rows of letters, top to bottom, each row left to
    /// right over its cells. Empty diagram rows take empty vectors.
    pub fn from_rows(shape: SkewShape, rows: Vec<Vec<Letter>>) -> Result<Self> {
        if rows.len() != shape.nrows() as usize {
            return Err(Error::ShapeMismatch);
        }
        let mut pairs = Vec::with_capacity(shape.ncells());
        for (i, row_letters) in rows.into_iter().enumerate() {
            let row = i as u32 + 1;
            let width = match shape.row_interval(row) {
                Some((lo, hi)) => (hi - lo + 1) as usize,
                None => 0,
            };
            if row_letters.len() != width {
                return Err(Error::ShapeMismatch);
            }
            if let Some((lo, _)) = shape.row_interval(row) {
                for (dc, letter) in row_letters.into_iter().enumerate() {
                    pairs.push((Cell::new(row, lo + dc as u32), letter));
                }
            }
        }
        Tableau::new(shape, pairs)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn entries(&self) -> impl Iterator<Item = (Cell, Letter)> + '_ {
        self.shape
            .cells()
            .iter()
            .copied()
            .zip(self.entries.iter().copied())
    }

    pub fn entry(&self, cell: Cell) -> Option<Letter> {
        self.shape
            .cells()
            .binary_search(&cell)
            .ok()
            .map(|i| self.entries[i])
    }

    /// The three GSYT clauses.
    pub fn is_valid_gsyt(&self) -> bool {
        // Rows weakly increasing and marked letters unique per row.
        for row in 1..=self.shape.nrows() {
            let Some((lo, hi)) = self.shape.row_interval(row) else {
                continue;
            };
            let mut marked_seen: Vec<Letter> = Vec::new();
            let mut prev: Option<Letter> = None;
            for col in lo..=hi {
                let l = self.entry(Cell::new(row, col)).unwrap();
                if prev.is_some_and(|p| l < p) {
                    return false;
                }
                prev = Some(l);
                if l.is_marked() {
                    if marked_seen.contains(&l) {
                        return false;
                    }
                    marked_seen.push(l);
                }
            }
        }
        // Columns weakly increasing and unmarked letters unique per column.
        // Columns of a skew shape are contiguous, so adjacent pairs suffice
        // for monotonicity; uniqueness is checked over the whole column.
        let mut by_col: BTreeMap<u32, Vec<Letter>> = BTreeMap::new();
        for (cell, l) in self.entries() {
            by_col.entry(cell.col).or_default().push(l);
        }
        for column in by_col.values() {
            let mut unmarked_seen: Vec<Letter> = Vec::new();
            for pair in column.windows(2) {
                if pair[1] < pair[0] {
                    return false;
                }
            }
            for &l in column {
                if !l.is_marked() {
                    if unmarked_seen.contains(&l) {
                        return false;
                    }
                    unmarked_seen.push(l);
                }
            }
        }
        true
    }

    /// Letters in reading order: bottom row first, left to right.
    pub fn row_word(&self) -> Word {
        self.shape
            .cells_reading_order()
            .into_iter()
            .map(|c| self.entry(c).unwrap())
            .collect()
    }

    pub fn content(&self) -> Content {
        let mut counts = Vec::new();
        for l in &self.entries {
            let v = l.value() as usize;
            if counts.len() < v {
                counts.resize(v, 0);
            }
            counts[v - 1] += 1;
        }
        Content::new(counts)
    }

    /// One line per diagram row; `.` per absent leading position and the
    /// entry in brackets per cell, padded to a common width.
    pub fn render_ascii(&self) -> String {
        let width = self
            .entries
            .iter()
            .map(|l| l.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for row in 1..=self.shape.nrows() {
            let i = (row - 1) as usize;
            let skip = (row - 1 + self.shape.inner().part(i)) as usize;
            out.push_str(&".".repeat(skip * (width + 2)));
            if let Some((lo, hi)) = self.shape.row_interval(row) {
                for col in lo..=hi {
                    let tok = self.entry(Cell::new(row, col)).unwrap().to_string();
                    out.push('[');
                    out.push_str(&tok);
                    out.push_str(&" ".repeat(width - tok.len()));
                    out.push(']');
                }
            }
            out.push('\n');
        }
        out
    }

    /// JSON form: outer, inner, and per-row `{skip, entries}` objects with
    /// letters in the word token syntax.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = (1..=self.shape.nrows())
            .map(|row| {
                let i = (row - 1) as usize;
                let skip = row - 1 + self.shape.inner().part(i);
                let entries: Vec<String> = match self.shape.row_interval(row) {
                    Some((lo, hi)) => (lo..=hi)
                        .map(|col| self.entry(Cell::new(row, col)).unwrap().to_string())
                        .collect(),
                    None => Vec::new(),
                };
                json!({ "skip": skip, "entries": entries })
            })
            .collect();
        json!({
            "outer": self.shape.outer().parts(),
            "inner": self.shape.inner().parts(),
            "rows": rows,
        })
    }
}

/// Occurrence counts `a_s` of each value `s` (marked or not), trailing zeros
/// trimmed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Content {
    counts: Vec<u32>,
}

impl Content {
    pub fn new(mut counts: Vec<u32>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Content { counts }
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn size(&self) -> usize {
        self.counts.iter().map(|&c| c as usize).sum()
    }

    /// Strictly decreasing with every count positive.
    pub fn is_strict(&self) -> bool {
        self.counts.iter().all(|&c| c > 0)
            && self.counts.windows(2).all(|w| w[0] > w[1])
    }

    /// The content as a strict partition, when it is one.
    pub fn to_partition(&self) -> Option<StrictPartition> {
        self.is_strict()
            .then(|| StrictPartition::new(self.counts.clone()).unwrap())
    }
}

// Letters are encoded as small codes during search: marked v = 2v - 2,
// unmarked v = 2v - 1, so code order is exactly the alphabet order.
#[inline]
fn code_is_marked(code: u16) -> bool {
    code % 2 == 0
}

#[inline]
fn code_value(code: u16) -> u32 {
    code as u32 / 2 + 1
}

#[inline]
fn code_to_letter(code: u16) -> Letter {
    if code_is_marked(code) {
        Letter::marked(code_value(code))
    } else {
        Letter::unmarked(code_value(code))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum ContentMode {
    /// No content restriction.
    Any,
    /// Final content must be strictly decreasing and positive.
    StrictlyDecreasing,
    /// Final content must equal this target exactly (counts per value).
    Exact(Vec<u32>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum SearchState {
    Fresh,
    Running,
    Finished,
}

/// Depth-first filling search over the cells of a shape in reading order.
///
/// Candidates at a cell are bounded below by the row neighbor on the left and
/// above by the column neighbor below, with the strict at-most-once
/// exclusions folded into the bounds. Content pruning keeps the running
/// counts consistent with some admissible completion.
#[derive(Debug, Clone)]
pub(crate) struct FillingSearch {
    cells: Vec<Cell>,
    left: Vec<Option<usize>>,
    below: Vec<Option<usize>>,
    max_letter: u32,
    codes: Vec<u16>,
    counts: Vec<u32>,
    mode: ContentMode,
    amenable_only: bool,
    require_first_unmarked: bool,
    state: SearchState,
    scratch_letters: Vec<Letter>,
    scratch_lo: Vec<u64>,
    scratch_caps: Vec<u32>,
}

impl FillingSearch {
    fn new(shape: &SkewShape, max_letter: u32, mode: ContentMode, amenable_only: bool) -> Self {
        assert!(max_letter <= 16_384, "enumeration alphabet too large");
        let require_first_unmarked = amenable_only;
        let cells = shape.cells_reading_order();
        let index_of = |cell: Cell| -> Option<usize> { cells.iter().position(|&c| c == cell) };
        let left = cells
            .iter()
            .map(|c| c.left().filter(|&l| shape.contains_cell(l)).and_then(index_of))
            .collect();
        let below = cells
            .iter()
            .map(|c| Some(c.down()).filter(|&d| shape.contains_cell(d)).and_then(index_of))
            .collect();
        let n = cells.len();
        FillingSearch {
            cells,
            left,
            below,
            max_letter,
            codes: vec![0; n],
            counts: vec![0; max_letter as usize],
            mode,
            amenable_only,
            require_first_unmarked,
            state: SearchState::Fresh,
            scratch_letters: Vec::with_capacity(n),
            scratch_lo: vec![0; max_letter as usize],
            scratch_caps: vec![0; max_letter as usize],
        }
    }

    pub(crate) fn gsyt(shape: &SkewShape, max_letter: u32) -> Self {
        FillingSearch::new(shape, max_letter, ContentMode::Any, false)
    }

    pub(crate) fn amenable(shape: &SkewShape) -> Self {
        // A strictly decreasing positive content with largest value m needs
        // at least m + (m-1) + ... + 1 cells, so values beyond the staircase
        // bound cannot occur in an amenable filling.
        let n = shape.ncells() as u32;
        let mut cap = 0;
        while (cap + 1) * (cap + 2) / 2 <= n {
            cap += 1;
        }
        FillingSearch::new(shape, cap, ContentMode::StrictlyDecreasing, true)
    }

    pub(crate) fn amenable_with_content(shape: &SkewShape, nu: &StrictPartition) -> Self {
        let target: Vec<u32> = (0..nu.len()).map(|i| nu.part(i)).collect();
        FillingSearch::new(
            shape,
            nu.len() as u32,
            ContentMode::Exact(target),
            true,
        )
    }

    /// Amenable enumeration without content pruning: the full alphabet up to
    /// the cell count is walked. The only cut is that a value may not first
    /// appear marked in the row word, which the leading-letter amenability
    /// clauses force for every value.
    pub(crate) fn amenable_reference(shape: &SkewShape) -> Self {
        FillingSearch::new(shape, shape.ncells() as u32, ContentMode::Any, true)
    }

    #[inline]
    fn lower_code(&self, pos: usize) -> i64 {
        match self.left[pos] {
            Some(j) => {
                let c = self.codes[j];
                // A marked letter may not repeat within a row.
                if code_is_marked(c) {
                    c as i64 + 1
                } else {
                    c as i64
                }
            }
            None => 0,
        }
    }

    #[inline]
    fn upper_code(&self, pos: usize) -> i64 {
        let mut hi = 2 * self.max_letter as i64 - 1;
        if let Some(j) = self.below[pos] {
            let c = self.codes[j];
            // An unmarked letter may not repeat within a column.
            let b = if code_is_marked(c) {
                c as i64
            } else {
                c as i64 - 1
            };
            hi = hi.min(b);
        }
        hi
    }

    /// Whether the running counts can still finish in an admissible content,
    /// given that positions `0..=pos` are filled.
    fn content_feasible(&mut self, pos: usize) -> bool {
        match self.mode {
            ContentMode::Any => true,
            ContentMode::Exact(_) => {
                let m = self.max_letter as usize;
                {
                    let ContentMode::Exact(target) = &self.mode else {
                        unreachable!()
                    };
                    if (0..m).any(|v| self.counts[v] > target[v]) {
                        return false;
                    }
                }
                self.compute_caps(pos);
                let ContentMode::Exact(target) = &self.mode else {
                    unreachable!()
                };
                (0..m).all(|v| target[v] - self.counts[v] <= self.scratch_caps[v])
            }
            ContentMode::StrictlyDecreasing => {
                self.compute_caps(pos);
                self.strict_completion_exists()
            }
        }
    }

    /// Upper bounds on how much each value count can still grow: for each
    /// unfilled cell, a value is admissible when some letter of that value
    /// fits between the nearest filled letter leftwards in its row and the
    /// nearest filled letter downwards in its column.
    fn compute_caps(&mut self, pos: usize) {
        let m = self.max_letter as usize;
        self.scratch_caps[..m].fill(0);
        let cur_row = self.cells[pos].row;
        let cur_code = self.codes[pos];
        for i in pos + 1..self.cells.len() {
            let cell = self.cells[i];
            // Rows fill left to right, so every later cell of the current
            // row sits right of the cursor and is bounded below by it.
            let lo = if cell.row == cur_row { cur_code as i64 } else { 0 };
            let hi = match self.below[i] {
                Some(j) if j <= pos => {
                    let c = self.codes[j];
                    if code_is_marked(c) {
                        c as i64
                    } else {
                        c as i64 - 1
                    }
                }
                _ => 2 * self.max_letter as i64 - 1,
            };
            for v in 1..=m {
                let unmarked = 2 * v as i64 - 1;
                let marked = 2 * v as i64 - 2;
                if unmarked >= lo && marked <= hi {
                    self.scratch_caps[v - 1] += 1;
                }
            }
        }
    }

    /// Is there a strictly decreasing positive sequence `a` with
    /// `counts <= a <= counts + caps` and total equal to the cell count?
    fn strict_completion_exists(&mut self) -> bool {
        let total = self.cells.len() as u64;
        let m = self.max_letter as usize;
        if total == 0 {
            return true;
        }
        let tmin = (0..m).rev().find(|&v| self.counts[v] > 0).map_or(1, |v| v + 1);
        'next_t: for t in tmin..=m {
            // Minimal admissible assignment, built right to left.
            let mut prev = 0u64;
            let mut sum_min = 0u64;
            for v in (0..t).rev() {
                let need = (self.counts[v] as u64).max(prev + 1);
                let upper = self.counts[v] as u64 + self.scratch_caps[v] as u64;
                if need > upper {
                    continue 'next_t;
                }
                self.scratch_lo[v] = need;
                prev = need;
                sum_min += need;
            }
            if sum_min > total {
                continue;
            }
            // Maximal admissible assignment, built left to right.
            let mut prev = u64::MAX;
            let mut sum_max = 0u64;
            for v in 0..t {
                let upper = self.counts[v] as u64 + self.scratch_caps[v] as u64;
                let hi = upper.min(prev.saturating_sub(1));
                if hi < self.scratch_lo[v] {
                    continue 'next_t;
                }
                prev = hi;
                sum_max += hi;
            }
            // Achievable totals form a contiguous range.
            if sum_min <= total && total <= sum_max {
                return true;
            }
        }
        false
    }

    #[inline]
    fn apply(&mut self, code: u16) {
        self.counts[(code_value(code) - 1) as usize] += 1;
    }

    #[inline]
    fn unapply(&mut self, code: u16) {
        self.counts[(code_value(code) - 1) as usize] -= 1;
    }

    fn leaf_accepts(&mut self) -> bool {
        if !self.amenable_only {
            return true;
        }
        self.scratch_letters.clear();
        self.scratch_letters
            .extend(self.codes.iter().map(|&c| code_to_letter(c)));
        words::is_amenable_letters(&self.scratch_letters)
    }

    /// Advances to the next complete assignment passing all filters; the
    /// codes are then the row word of the filling. Returns `false` when the
    /// search space is exhausted.
    pub(crate) fn next_assignment(&mut self) -> bool {
        let n = self.cells.len();
        if self.state == SearchState::Finished {
            return false;
        }
        let (mut pos, mut from) = if self.state == SearchState::Fresh {
            self.state = SearchState::Running;
            if n == 0 {
                self.state = SearchState::Finished;
                return true;
            }
            (0usize, 0i64)
        } else {
            let last = self.codes[n - 1];
            self.unapply(last);
            (n - 1, last as i64 + 1)
        };
        loop {
            // Fill positions from `pos` on, backtracking as needed.
            let complete = loop {
                let lo = self.lower_code(pos).max(from);
                let hi = self.upper_code(pos);
                let mut placed = None;
                let mut cand = lo;
                while cand <= hi {
                    let code = cand as u16;
                    if self.require_first_unmarked
                        && code_is_marked(code)
                        && self.counts[(code_value(code) - 1) as usize] == 0
                    {
                        cand += 1;
                        continue;
                    }
                    self.apply(code);
                    self.codes[pos] = code;
                    if self.content_feasible(pos) {
                        placed = Some(code);
                        break;
                    }
                    self.unapply(code);
                    cand += 1;
                }
                match placed {
                    Some(_) => {
                        pos += 1;
                        from = 0;
                        if pos == n {
                            break true;
                        }
                    }
                    None => {
                        if pos == 0 {
                            break false;
                        }
                        pos -= 1;
                        let prev = self.codes[pos];
                        self.unapply(prev);
                        from = prev as i64 + 1;
                    }
                }
            };
            if !complete {
                self.state = SearchState::Finished;
                return false;
            }
            if self.leaf_accepts() {
                return true;
            }
            let last = self.codes[n - 1];
            self.unapply(last);
            pos = n - 1;
            from = last as i64 + 1;
        }
    }

    /// Row-word codes of the current assignment.
    pub(crate) fn codes(&self) -> &[u16] {
        &self.codes
    }

    /// Content counts of the current assignment, one per value `1..=cap`.
    pub(crate) fn current_counts(&self) -> &[u32] {
        &self.counts
    }
}

/// Iterator over tableaux produced by a [`FillingSearch`].
pub struct TableauIter {
    search: FillingSearch,
    shape: SkewShape,
    /// Position of each reading-order cell within `shape.cells()`.
    perm: Vec<usize>,
}

impl TableauIter {
    fn new(shape: SkewShape, search: FillingSearch) -> Self {
        let perm = search
            .cells
            .iter()
            .map(|c| shape.cells().binary_search(c).unwrap())
            .collect();
        TableauIter {
            search,
            shape,
            perm,
        }
    }
}

impl Iterator for TableauIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if !self.search.next_assignment() {
            return None;
        }
        let mut entries = vec![Letter::unmarked(1); self.shape.ncells()];
        for (i, &code) in self.search.codes().iter().enumerate() {
            entries[self.perm[i]] = code_to_letter(code);
        }
        Some(Tableau {
            shape: self.shape.clone(),
            entries,
        })
    }
}

/// Every GSYT of the shape with letter values at most `max_letter`, in
/// reading-order lexicographic order.
pub fn enumerate_gsyt(shape: &SkewShape, max_letter: u32) -> TableauIter {
    TableauIter::new(shape.clone(), FillingSearch::gsyt(shape, max_letter))
}

/// Every GSYT of the shape whose row word is amenable, in reading-order
/// lexicographic order.
pub fn enumerate_amenable(shape: &SkewShape) -> TableauIter {
    TableauIter::new(shape.clone(), FillingSearch::amenable(shape))
}

/// Reference enumeration of the amenable tableaux that makes no use of
/// content bounds: every letter value up to the cell count is considered.
/// Slower than [`enumerate_amenable`] and intended to validate it.
pub fn enumerate_amenable_reference(shape: &SkewShape) -> TableauIter {
    TableauIter::new(shape.clone(), FillingSearch::amenable_reference(shape))
}

/// Counts amenable fillings, stopping once `limit` of them are seen.
pub(crate) fn count_amenable_capped(shape: &SkewShape, limit: u64) -> u64 {
    let mut search = FillingSearch::amenable(shape);
    let mut count = 0;
    while count < limit && search.next_assignment() {
        count += 1;
    }
    count
}

/// The shifted Littlewood-Richardson coefficient: the number of amenable
/// tableaux of shape `outer/inner` with content `nu`.
pub fn lr_coeff(
    outer: &StrictPartition,
    inner: &StrictPartition,
    nu: &StrictPartition,
) -> Result<u64> {
    let shape = SkewShape::new(outer.clone(), inner.clone())?;
    if nu.size() != shape.ncells() {
        return Ok(0);
    }
    let mut search = FillingSearch::amenable_with_content(&shape, nu);
    let mut count = 0;
    while search.next_assignment() {
        count += 1;
    }
    Ok(count)
}

/// All contents of amenable fillings with multiplicities, sorted
/// lexicographically. The empty shape decomposes as the empty partition with
/// coefficient one.
pub fn decompose(shape: &SkewShape) -> Result<Vec<(StrictPartition, u64)>> {
    let mut search = FillingSearch::amenable(shape);
    let mut grouped: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    while search.next_assignment() {
        let mut counts = search.current_counts().to_vec();
        while counts.last() == Some(&0) {
            counts.pop();
        }
        let strict =
            counts.iter().all(|&c| c > 0) && counts.windows(2).all(|w| w[0] > w[1]);
        if !strict {
            return Err(Error::InternalNonStrictContent(counts));
        }
        *grouped.entry(counts).or_insert(0) += 1;
    }
    Ok(grouped
        .into_iter()
        .map(|(parts, mult)| (StrictPartition::new(parts).unwrap(), mult))
        .collect())
}
