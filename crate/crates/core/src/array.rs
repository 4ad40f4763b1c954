//! Dense blocks and partially filled arrays.
//!
//! A [`Block`] is the small fully populated matrix every building-block
//! family emits; a [`PartialArray`] is the `m x n` grid that holds a Heffter
//! array or one member of a Heffter array set. Both store entries row-major.

use std::fmt;

use crate::error::{Error, Result};

/// Row and column sums of a block or array.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SumProfile {
    pub row_sums: Vec<i64>,
    pub col_sums: Vec<i64>,
}

impl SumProfile {
    pub fn new(row_sums: Vec<i64>, col_sums: Vec<i64>) -> Self {
        Self { row_sums, col_sums }
    }

    /// `true` when every row and column sums to zero.
    pub fn is_zero(&self) -> bool {
        self.row_sums.iter().chain(&self.col_sums).all(|&s| s == 0)
    }
}

/// Entrywise sign flip and/or transposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Transform {
    Negate,
    Transpose,
    NegateTranspose,
}

/// A dense `rows x cols` grid of nonzero integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Block {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl Block {
    /// Builds a block from its rows.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidBlock("a block needs at least one row".into()));
        }
        let cols = rows[0].as_ref().len();
        if cols == 0 {
            return Err(Error::InvalidBlock("a block needs at least one column".into()));
        }
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::InvalidBlock(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            if let Some(j) = row.iter().position(|&v| v == 0) {
                return Err(Error::InvalidBlock(format!("zero entry at ({i},{j})")));
            }
            entries.extend_from_slice(row);
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    /// Builds a block from a fixed-size literal. Panics on a zero entry, so
    /// it is only meant for formulas whose entries are nonzero by domain.
    pub(crate) fn lit<const R: usize, const C: usize>(rows: [[i64; C]; R]) -> Self {
        Self::from_rows(&rows).expect("block literal with a zero entry")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        self.entries[r * self.cols + c]
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn sum_profile(&self) -> SumProfile {
        let row_sums = (0..self.rows).map(|r| self.row(r).iter().sum()).collect();
        let col_sums = (0..self.cols)
            .map(|c| (0..self.rows).map(|r| self.get(r, c)).sum())
            .collect();
        SumProfile { row_sums, col_sums }
    }

    pub fn negate(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|v| -v).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c));
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn transform(&self, t: Transform) -> Self {
        match t {
            Transform::Negate => self.negate(),
            Transform::Transpose => self.transpose(),
            Transform::NegateTranspose => self.negate().transpose(),
        }
    }

    /// Adds `delta` entrywise. The result must stay free of zeros.
    pub fn offset<const R: usize, const C: usize>(&self, delta: [[i64; C]; R]) -> Result<Self> {
        if R != self.rows || C != self.cols {
            return Err(Error::InvalidBlock(format!(
                "offset shape {R}x{C} does not match block {}x{}",
                self.rows, self.cols
            )));
        }
        let rows: Vec<Vec<i64>> = (0..R)
            .map(|r| (0..C).map(|c| self.get(r, c) + delta[r][c]).collect())
            .collect();
        Self::from_rows(&rows)
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// An `m x n` grid whose cells are empty or hold a nonzero integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialArray {
    rows: usize,
    cols: usize,
    cells: Vec<Option<i64>>,
}

impl PartialArray {
    /// An array with every cell empty.
    pub fn empty(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidBlock(format!(
                "array dimensions must be positive, got {rows}x{cols}"
            )));
        }
        Ok(Self {
            rows,
            cols,
            cells: vec![None; rows * cols],
        })
    }

    pub fn from_rows(rows: &[Vec<Option<i64>>]) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        let mut out = Self::empty(m, n)?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidBlock(format!(
                    "row {i} has {} cells, expected {n}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v == Some(0) {
                    return Err(Error::InvalidBlock(format!("zero entry at ({i},{j})")));
                }
                out.cells[i * n + j] = v;
            }
        }
        Ok(out)
    }

    /// A totally filled array copied from a block.
    pub fn from_block(block: &Block) -> Self {
        Self {
            rows: block.rows(),
            cols: block.cols(),
            cells: block.entries().iter().copied().map(Some).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Option<i64> {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        self.cells[r * self.cols + c]
    }

    /// Fills a cell. Refuses zero values and already filled cells.
    pub fn fill(&mut self, r: usize, c: usize, v: i64) -> Result<()> {
        if r >= self.rows || c >= self.cols {
            return Err(Error::InvalidBlock(format!(
                "cell ({r},{c}) outside {}x{} array",
                self.rows, self.cols
            )));
        }
        if v == 0 {
            return Err(Error::InvalidBlock(format!("zero entry at ({r},{c})")));
        }
        let cell = &mut self.cells[r * self.cols + c];
        if let Some(old) = *cell {
            return Err(Error::InvalidBlock(format!(
                "cell ({r},{c}) already holds {old}"
            )));
        }
        *cell = Some(v);
        Ok(())
    }

    /// Copies `block` with its top-left corner at `(r0, c0)`.
    pub fn place(&mut self, r0: usize, c0: usize, block: &Block) -> Result<()> {
        if r0 + block.rows() > self.rows || c0 + block.cols() > self.cols {
            return Err(Error::InvalidBlock(format!(
                "{}x{} block at ({r0},{c0}) overflows {}x{} array",
                block.rows(),
                block.cols(),
                self.rows,
                self.cols
            )));
        }
        for r in 0..block.rows() {
            for c in 0..block.cols() {
                self.fill(r0 + r, c0 + c, block.get(r, c))?;
            }
        }
        Ok(())
    }

    pub fn row_cells(&self, r: usize) -> &[Option<i64>] {
        &self.cells[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Option<i64>>> {
        (0..self.rows).map(|r| self.row_cells(r).to_vec()).collect()
    }

    /// Filled values in row-major order.
    pub fn values(&self) -> impl Iterator<Item = i64> + '_ {
        self.cells.iter().filter_map(|v| *v)
    }

    pub fn filled_count(&self) -> usize {
        self.cells.iter().filter(|v| v.is_some()).count()
    }

    pub fn is_totally_filled(&self) -> bool {
        self.cells.iter().all(Option::is_some)
    }

    pub fn row_filled(&self, r: usize) -> usize {
        self.row_cells(r).iter().filter(|v| v.is_some()).count()
    }

    pub fn col_filled(&self, c: usize) -> usize {
        (0..self.rows).filter(|&r| self.get(r, c).is_some()).count()
    }

    /// Row and column sums over filled cells.
    pub fn sum_profile(&self) -> SumProfile {
        let row_sums = (0..self.rows)
            .map(|r| self.row_cells(r).iter().flatten().sum())
            .collect();
        let col_sums = (0..self.cols)
            .map(|c| (0..self.rows).filter_map(|r| self.get(r, c)).sum())
            .collect();
        SumProfile { row_sums, col_sums }
    }

    pub fn transpose(&self) -> Self {
        let mut cells = Vec::with_capacity(self.cells.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                cells.push(self.get(r, c));
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            cells,
        }
    }

    pub fn negate(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            cells: self.cells.iter().map(|v| v.map(|x| -x)).collect(),
        }
    }
}
