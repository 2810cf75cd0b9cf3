//! Rectangular superboolean matrices with row and column labels.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::Mask;
use crate::{Error, Result, SbScalar};

/// A `rows x cols` grid of [`SbScalar`] stored row-major.
///
/// Labels are display metadata; every operation addresses rows and columns
/// by index. Default labels are `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SbMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<SbScalar>,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
}

pub(crate) fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

impl SbMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<SbScalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape {
                rows,
                cols,
                found: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
            row_labels: default_labels(rows),
            col_labels: default_labels(cols),
        })
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<SbScalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::Shape {
                    rows: n,
                    cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Self::new(n, cols, entries)
    }

    /// Parses rows written with the symbols `0`, `1`, `g`, e.g. `["10", "g1"]`.
    /// Whitespace inside a row is ignored. Panics on bad symbols; meant for
    /// literals in code and tests.
    pub fn from_symbols(rows: &[&str]) -> Self {
        let rows = rows
            .iter()
            .map(|r| {
                r.chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| SbScalar::from_symbol(c).expect("bad matrix symbol"))
                    .collect()
            })
            .collect();
        Self::from_rows(rows).expect("ragged matrix literal")
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> SbScalar) -> Self {
        let entries = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        Self::new(rows, cols, entries).expect("shape is consistent by construction")
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| SbScalar::from_bool(i == j))
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| SbScalar::Zero)
    }

    pub fn with_labels(mut self, row_labels: Vec<String>, col_labels: Vec<String>) -> Result<Self> {
        if row_labels.len() != self.rows {
            return Err(Error::LabelCount {
                expected: self.rows,
                found: row_labels.len(),
            });
        }
        if col_labels.len() != self.cols {
            return Err(Error::LabelCount {
                expected: self.cols,
                found: col_labels.len(),
            });
        }
        self.row_labels = row_labels;
        self.col_labels = col_labels;
        Ok(self)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn get(&self, i: usize, j: usize) -> SbScalar {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: SbScalar) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[SbScalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<SbScalar> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn entries(&self) -> &[SbScalar] {
        &self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<SbScalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// True when no entry is the ghost.
    pub fn is_boolean(&self) -> bool {
        self.entries.iter().all(|x| x.is_boolean())
    }

    /// Entrywise complement: `0 <-> 1`, ghosts stay ghosts.
    pub fn complement(&self) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|&x| match x {
                SbScalar::Zero => SbScalar::One,
                SbScalar::One => SbScalar::Zero,
                SbScalar::Ghost => SbScalar::Ghost,
            })
            .collect();
        Self {
            entries,
            ..self.clone()
        }
    }

    pub fn transpose(&self) -> Self {
        let t = Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i));
        Self {
            row_labels: self.col_labels.clone(),
            col_labels: self.row_labels.clone(),
            ..t
        }
    }

    /// The submatrix on the given row and column indices, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        if let Some(&i) = rows.iter().find(|&&i| i >= self.rows) {
            return Err(Error::UnknownLabel(format!("row {i}")));
        }
        if let Some(&j) = cols.iter().find(|&&j| j >= self.cols) {
            return Err(Error::UnknownColumn(j));
        }
        let sub = Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]));
        Ok(Self {
            row_labels: rows.iter().map(|&i| self.row_labels[i].clone()).collect(),
            col_labels: cols.iter().map(|&j| self.col_labels[j].clone()).collect(),
            ..sub
        })
    }

    /// `A[X;Y]` addressed by labels.
    pub fn submatrix_by_labels(&self, rows: &[&str], cols: &[&str]) -> Result<Self> {
        let find = |labels: &[String], l: &str| {
            labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| Error::UnknownLabel(l.to_string()))
        };
        let r = rows
            .iter()
            .map(|l| find(&self.row_labels, l))
            .collect::<Result<Vec<_>>>()?;
        let c = cols
            .iter()
            .map(|l| find(&self.col_labels, l))
            .collect::<Result<Vec<_>>>()?;
        self.submatrix(&r, &c)
    }

    /// Removes one row.
    pub fn without_row(&self, i: usize) -> Self {
        let keep: Vec<usize> = (0..self.rows).filter(|&r| r != i).collect();
        let all: Vec<usize> = (0..self.cols).collect();
        self.submatrix(&keep, &all).expect("indices in range")
    }

    /// Removes one column.
    pub fn without_col(&self, j: usize) -> Self {
        self.transpose().without_row(j).transpose()
    }

    /// Per-row masks `(ones, ghosts)` over the columns. Requires at most 64
    /// columns.
    pub(crate) fn row_masks(&self) -> Vec<(Mask, Mask)> {
        debug_assert!(self.cols <= 64);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .enumerate()
                    .fold((0, 0), |(ones, ghosts), (j, x)| match x {
                        SbScalar::One => (ones | 1 << j, ghosts),
                        SbScalar::Ghost => (ones, ghosts | 1 << j),
                        SbScalar::Zero => (ones, ghosts),
                    })
            })
            .collect()
    }
}

/// Rows of symbols separated by spaces, without a header.
impl fmt::Display for SbMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}
