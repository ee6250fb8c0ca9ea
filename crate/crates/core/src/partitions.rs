//! Integer partitions and the pieces of their Young diagrams that the rest of
//! the crate is built on: contents, hooks, border strips, edge sequences and
//! the k-core / k-quotient pair.
//!
//! Rows and columns of a [`Cell`] are 1-based and diagrams are drawn in
//! English notation (row 1 on top).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zero parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Callers guarantee `parts` is weakly decreasing; zeros are trimmed.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `row` (1-based); zero past the last row.
    pub fn row_len(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    /// Length of column `col` (1-based).
    pub fn col_len(&self, col: usize) -> usize {
        if col == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= col).count()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// Whether the diagram of `other` sits inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// Cells in row-major reading order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |col| Cell::new(i + 1, col)))
    }

    /// Arm plus leg plus one.
    pub fn hook(&self, cell: Cell) -> usize {
        debug_assert!(self.contains_cell(cell));
        let arm = self.row_len(cell.row) - cell.col;
        let leg = self.col_len(cell.col) - cell.row;
        arm + leg + 1
    }

    /// Contents of all cells, one entry per cell, in reading order.
    pub fn content_multiset(&self) -> Vec<i64> {
        self.cells().map(Cell::content).collect()
    }

    /// Hook values of all cells, one entry per cell, in reading order.
    pub fn hook_multiset(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.cells()
            .map(|x| (self.row_len(x.row) - x.col) + (conj.row_len(x.col) - x.row) + 1)
            .collect()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.row_len(1);
        Partition::from_sorted((1..=width).map(|c| self.col_len(c)).collect())
    }

    /// `sum (i - 1) * part_i`, the minimal major-index weight of the shape.
    pub fn b_weight(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Positions `part_i + rows - i` for `i = 1..=rows`, in decreasing order.
    ///
    /// `rows` must be at least [`len`](Self::len).
    pub fn beta_set(&self, rows: usize) -> Vec<usize> {
        assert!(
            rows >= self.len(),
            "beta set needs at least {} rows",
            self.len()
        );
        (1..=rows).map(|i| self.row_len(i) + rows - i).collect()
    }

    /// Inverse of [`beta_set`](Self::beta_set) for any set of distinct positions.
    pub fn from_beta_set(positions: &[usize]) -> Partition {
        let mut sorted = positions.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        debug_assert!(
            sorted.windows(2).all(|w| w[0] > w[1]),
            "beta positions must be distinct"
        );
        let rows = sorted.len();
        Partition::from_sorted(
            sorted
                .iter()
                .enumerate()
                .map(|(i, &p)| p + i + 1 - rows)
                .collect(),
        )
    }

    /// The boundary path, padded with empty rows up to the smallest multiple of `k`.
    pub fn edge_sequence(&self, k: usize) -> Result<EdgeSequence> {
        if k == 0 {
            return Err(Error::ZeroStripSize);
        }
        let rows = self.len().div_ceil(k) * k;
        let mut steps = vec![Step::East; self.row_len(1) + rows];
        for pos in self.beta_set(rows) {
            steps[pos] = Step::North;
        }
        Ok(EdgeSequence { steps })
    }

    /// Component `s` is read off the steps whose label is congruent to `s` mod `k`.
    pub fn k_quotient(&self, k: usize) -> Result<PartitionTuple> {
        let word = self.edge_sequence(k)?;
        let components = (0..k)
            .map(|s| {
                EdgeSequence::from_steps(word.steps.iter().skip(s).step_by(k).copied()).decode()
            })
            .collect();
        Ok(PartitionTuple { components })
    }

    /// The unique partition with empty `k`-core whose `k`-quotient is `tuple`.
    pub fn from_quotient(tuple: &PartitionTuple, k: usize) -> Result<Partition> {
        if k == 0 {
            return Err(Error::ZeroStripSize);
        }
        if tuple.k() != k {
            return Err(Error::SizeMismatch {
                expected: k,
                found: tuple.k(),
            });
        }
        let rows = tuple
            .components
            .iter()
            .map(Partition::len)
            .max()
            .unwrap_or(0);
        let subwords: Vec<Vec<Step>> = tuple
            .components
            .iter()
            .map(|p| {
                let mut steps = vec![Step::East; p.row_len(1) + rows];
                for pos in p.beta_set(rows) {
                    steps[pos] = Step::North;
                }
                steps
            })
            .collect();
        let width = subwords.iter().map(Vec::len).max().unwrap_or(0);
        let steps = (0..width * k).map(|label| {
            subwords[label % k]
                .get(label / k)
                .copied()
                .unwrap_or(Step::East)
        });
        Ok(EdgeSequence::from_steps(steps).decode())
    }

    /// Slides every bead of the `k`-runner abacus as far up as it goes.
    pub fn k_core(&self, k: usize) -> Result<Partition> {
        if k == 0 {
            return Err(Error::ZeroStripSize);
        }
        let rows = self.len().div_ceil(k) * k;
        let mut per_runner = vec![0usize; k];
        for pos in self.beta_set(rows) {
            per_runner[pos % k] += 1;
        }
        let positions: Vec<usize> = per_runner
            .iter()
            .enumerate()
            .flat_map(|(r, &count)| (0..count).map(move |j| r + j * k))
            .collect();
        Ok(Partition::from_beta_set(&positions))
    }

    pub fn has_empty_core(&self, k: usize) -> Result<bool> {
        Ok(self.k_core(k)?.is_empty())
    }

    /// Every `(strip, rest)` with `self / rest` a border strip of size `k`,
    /// ordered by decreasing tail content.
    ///
    /// Strips are found by walking the rim from the last cell of each row:
    /// step down when the cell below exists, otherwise step left.
    pub fn removable_strips(&self, k: usize) -> Result<Vec<(BorderStrip, Partition)>> {
        if k == 0 {
            return Err(Error::ZeroStripSize);
        }
        let mut found = Vec::new();
        'heads: for head_row in 1..=self.len() {
            let mut cur = Cell::new(head_row, self.row_len(head_row));
            let mut cells = Vec::with_capacity(k);
            cells.push(cur);
            for _ in 1..k {
                let below = Cell::new(cur.row + 1, cur.col);
                cur = if self.contains_cell(below) {
                    below
                } else if cur.col > 1 {
                    Cell::new(cur.row, cur.col - 1)
                } else {
                    continue 'heads;
                };
                cells.push(cur);
            }
            if self.contains_cell(Cell::new(cur.row + 1, cur.col)) {
                continue;
            }
            let mut rest = self.parts.clone();
            for c in &cells {
                rest[c.row - 1] -= 1;
            }
            let strip = BorderStrip {
                height: cur.row - head_row,
                tail: cur,
                cells,
            };
            found.push((strip, Partition::from_sorted(rest)));
        }
        found.sort_by_key(|(strip, _)| std::cmp::Reverse(strip.tail.content()));
        Ok(found)
    }

    /// Compact notation: `654222`, `(10,3,1)` when a part exceeds 9, `∅` when empty.
    pub fn compact(&self) -> String {
        if self.is_empty() {
            "∅".to_string()
        } else if self.parts.iter().all(|&p| p < 10) {
            self.parts.iter().map(|p| p.to_string()).collect()
        } else {
            format!("({self})")
        }
    }

    /// All partitions of `n` in reverse lexicographic order, starting from `(n)`.
    pub fn all(n: usize) -> Partitions {
        Partitions {
            next: Some(if n == 0 { Vec::new() } else { vec![n] }),
        }
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts; the empty partition prints as the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({})", self.compact())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|e| Error::Parse {
                    input: s.to_string(),
                    reason: format!("{tok:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Iterator returned by [`Partition::all`].
#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        let mut a = current.clone();
        let mut rem = 0;
        while a.last() == Some(&1) {
            a.pop();
            rem += 1;
        }
        if let Some(last) = a.pop() {
            let v = last - 1;
            rem += 1;
            a.push(v);
            while rem > 0 {
                let x = rem.min(v);
                a.push(x);
                rem -= x;
            }
            self.next = Some(a);
        }
        Some(Partition { parts: current })
    }
}

/// A cell of a Young diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Column index minus row index.
    pub fn content(self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// A connected skew shape without a 2x2 square.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BorderStrip {
    /// Head (largest content) first, tail last.
    cells: Vec<Cell>,
    tail: Cell,
    height: usize,
}

impl BorderStrip {
    /// Validates that `outer / inner` is a border strip.
    pub fn between(outer: &Partition, inner: &Partition) -> Result<BorderStrip> {
        if !outer.contains(inner) {
            return Err(Error::NotContained {
                outer: outer.clone(),
                inner: inner.clone(),
            });
        }
        let fail = |reason| Error::NotBorderStrip {
            outer: outer.clone(),
            inner: inner.clone(),
            reason,
        };
        let mut cells: Vec<Cell> = outer.cells().filter(|&c| !inner.contains_cell(c)).collect();
        if cells.is_empty() {
            return Err(fail("empty"));
        }
        // Cells of a skew shape have distinct contents iff it has no 2x2 square,
        // and then connectivity means the contents form an interval.
        cells.sort_by_key(|c| std::cmp::Reverse(c.content()));
        for w in cells.windows(2) {
            match w[0].content() - w[1].content() {
                0 => return Err(fail("contains a 2x2 square")),
                1 => {}
                _ => return Err(fail("not connected")),
            }
        }
        let tail = *cells.last().expect("nonempty");
        let height = tail.row - cells[0].row;
        Ok(BorderStrip {
            cells,
            tail,
            height,
        })
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// The unique cell of smallest content.
    pub fn tail(&self) -> Cell {
        self.tail
    }

    pub fn head(&self) -> Cell {
        self.cells[0]
    }

    /// Number of rows spanned, minus one.
    pub fn height(&self) -> usize {
        self.height
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    North,
    East,
}

/// Lower-right boundary of a diagram read from the bottom-left; label 0 is the
/// first step.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeSequence {
    steps: Vec<Step>,
}

impl EdgeSequence {
    pub fn from_steps(steps: impl IntoIterator<Item = Step>) -> Self {
        EdgeSequence {
            steps: steps.into_iter().collect(),
        }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn north_labels(&self) -> Vec<usize> {
        self.labels_of(Step::North)
    }

    pub fn east_labels(&self) -> Vec<usize> {
        self.labels_of(Step::East)
    }

    fn labels_of(&self, step: Step) -> Vec<usize> {
        self.steps
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == step)
            .map(|(i, _)| i)
            .collect()
    }

    /// Each north step closes a row whose length is the number of east steps before it.
    pub fn decode(&self) -> Partition {
        let mut east = 0;
        let mut rows = Vec::new();
        for step in &self.steps {
            match step {
                Step::East => east += 1,
                Step::North => rows.push(east),
            }
        }
        rows.reverse();
        Partition::from_sorted(rows)
    }
}

/// A `k`-tuple of partitions.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PartitionTuple {
    components: Vec<Partition>,
}

impl PartitionTuple {
    pub fn new(components: Vec<Partition>) -> Self {
        PartitionTuple { components }
    }

    /// `k` empty components.
    pub fn empty(k: usize) -> Self {
        PartitionTuple {
            components: vec![Partition::empty(); k],
        }
    }

    /// Number of components.
    pub fn k(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, s: usize) -> &Partition {
        &self.components[s]
    }

    pub fn into_components(self) -> Vec<Partition> {
        self.components
    }

    /// All tuples of `k` partitions with `size` cells in total.
    pub fn all(k: usize, size: usize) -> Vec<PartitionTuple> {
        fn go(k: usize, size: usize, prefix: &mut Vec<Partition>, out: &mut Vec<PartitionTuple>) {
            if prefix.len() + 1 == k {
                for p in Partition::all(size) {
                    prefix.push(p);
                    out.push(PartitionTuple::new(prefix.clone()));
                    prefix.pop();
                }
                return;
            }
            for first in 0..=size {
                for p in Partition::all(first) {
                    prefix.push(p);
                    go(k, size - first, prefix, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        if k == 0 {
            if size == 0 {
                out.push(PartitionTuple::default());
            }
            return out;
        }
        go(k, size, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for PartitionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&p.compact())?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for PartitionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartitionTuple{self}")
    }
}
