//! Dense 0/1 matrices stored one row per machine word.
//!
//! Indices are 0-based: entry `(i, j)` is bit `j` of row word `i`. The text
//! form lists rows top to bottom joined by `|`, each row written column 0
//! first, e.g. `"01|10"`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// Widest supported row, in columns.
pub const MAX_COLS: usize = u64::BITS as usize;

/// Tallest supported matrix. Column signatures are packed into a `u64`.
pub const MAX_ROWS: usize = u64::BITS as usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    cols: usize,
    rows: Vec<u64>,
}

#[inline]
pub(crate) fn width_mask(cols: usize) -> u64 {
    if cols >= 64 {
        u64::MAX
    } else {
        (1u64 << cols) - 1
    }
}

/// Maps a row word to an integer whose numeric order is the lexicographic
/// order of the row read column 0 first.
#[inline]
pub(crate) fn lex_key(row: u64, cols: usize) -> u64 {
    row.reverse_bits() >> (64 - cols)
}

fn check_shape(rows: usize, cols: usize) -> Result<()> {
    if rows == 0 || cols == 0 {
        return Err(Error::EmptyDimension { rows, cols });
    }
    if cols > MAX_COLS {
        return Err(Error::TooManyColumns {
            cols,
            max: MAX_COLS,
        });
    }
    if rows > MAX_ROWS {
        return Err(Error::TooManyRows {
            rows,
            max: MAX_ROWS,
        });
    }
    Ok(())
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        check_shape(rows, cols)?;
        Ok(Self {
            cols,
            rows: vec![0; rows],
        })
    }

    /// Builds the matrix with ones exactly at `ones`.
    pub fn from_positions<I>(rows: usize, cols: usize, ones: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut m = Self::zeros(rows, cols)?;
        for (row, col) in ones {
            if row >= rows || col >= cols {
                return Err(Error::PositionOutOfRange {
                    row,
                    col,
                    rows,
                    cols,
                });
            }
            if m.get(row, col) {
                return Err(Error::DuplicatePosition { row, col });
            }
            m.rows[row] |= 1 << col;
        }
        Ok(m)
    }

    /// Builds from raw row words. Bits at or above `cols` must be clear.
    pub fn from_rows(cols: usize, rows: Vec<u64>) -> Result<Self> {
        check_shape(rows.len(), cols)?;
        let mask = width_mask(cols);
        if let Some(i) = rows.iter().position(|r| r & !mask != 0) {
            let col = (rows[i] & !mask).trailing_zeros() as usize;
            return Err(Error::PositionOutOfRange {
                row: i,
                col,
                rows: rows.len(),
                cols,
            });
        }
        Ok(Self { cols, rows })
    }

    /// Inverse of [`BinaryMatrix::cell_mask`]: cell `i * cols + j` maps to `(i, j)`.
    pub fn from_cell_mask(rows: usize, cols: usize, mask: u64) -> Result<Self> {
        check_shape(rows, cols)?;
        if rows * cols > 64 || (rows * cols < 64 && mask >> (rows * cols) != 0) {
            return Err(Error::UnsupportedShape {
                rows,
                cols,
                max_cells: 64,
            });
        }
        let w = width_mask(cols);
        let words = (0..rows).map(|i| (mask >> (i * cols)) & w).collect();
        Ok(Self { cols, rows: words })
    }

    /// Packs the matrix into one word, cell `i * cols + j` at bit position
    /// `i * cols + j`. `None` when the matrix has more than 64 cells.
    pub fn cell_mask(&self) -> Option<u64> {
        if self.rows.len() * self.cols > 64 {
            return None;
        }
        Some(
            self.rows
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &r)| acc | (r << (i * self.cols))),
        )
    }

    #[inline]
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn num_cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn row(&self, i: usize) -> u64 {
        self.rows[i]
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        (self.rows[row] >> col) & 1 == 1
    }

    /// Column `j` read top to bottom, row 0 in the most significant of the
    /// `num_rows()` low bits.
    pub fn column_signature(&self, col: usize) -> u64 {
        self.rows
            .iter()
            .fold(0u64, |acc, &r| (acc << 1) | ((r >> col) & 1))
    }

    pub fn count_ones(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// Positions of all ones in row-major order.
    pub fn ones(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, &r)| {
            let mut bits = r;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let j = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some((i, j))
            })
        })
    }

    /// Returns `B` with `B[rho(i)][sigma(j)] = A[i][j]`.
    pub fn apply_permutations(&self, rho: &Permutation, sigma: &Permutation) -> Result<Self> {
        if rho.len() != self.num_rows() {
            return Err(Error::SizeMismatch {
                expected: self.num_rows(),
                found: rho.len(),
            });
        }
        if sigma.len() != self.cols {
            return Err(Error::SizeMismatch {
                expected: self.cols,
                found: sigma.len(),
            });
        }
        let mut out = vec![0u64; self.rows.len()];
        for (i, &r) in self.rows.iter().enumerate() {
            let mut bits = r;
            let mut word = 0u64;
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                word |= 1 << sigma.image(j);
            }
            out[rho.image(i)] = word;
        }
        Ok(Self {
            cols: self.cols,
            rows: out,
        })
    }

    /// Row-major comparison, row 0 first, column 0 most significant.
    pub fn lex_compare(&self, other: &Self) -> Result<Ordering> {
        if self.num_rows() != other.num_rows() || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                left_rows: self.num_rows(),
                left_cols: self.cols,
                right_rows: other.num_rows(),
                right_cols: other.cols,
            });
        }
        Ok(self.lex_cmp_unchecked(other))
    }

    pub(crate) fn lex_cmp_unchecked(&self, other: &Self) -> Ordering {
        let n = self.cols;
        self.rows
            .iter()
            .map(|&r| lex_key(r, n))
            .cmp(other.rows.iter().map(|&r| lex_key(r, n)))
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.cols)
            .map(|j| {
                self.rows
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (i, &r)| acc | (((r >> j) & 1) << i))
            })
            .collect();
        Self {
            cols: self.rows.len(),
            rows,
        }
    }

    pub fn complement(&self) -> Self {
        let w = width_mask(self.cols);
        Self {
            cols: self.cols,
            rows: self.rows.iter().map(|r| !r & w).collect(),
        }
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::with_capacity(self.rows.len() * (self.cols + 1));
        for (i, &r) in self.rows.iter().enumerate() {
            if i > 0 {
                s.push('|');
            }
            for j in 0..self.cols {
                s.push(if (r >> j) & 1 == 1 { '1' } else { '0' });
            }
        }
        f.write_str(&s)
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMatrix(\"{self}\")")
    }
}

impl FromStr for BinaryMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::MalformedMatrix("empty string".into()));
        }
        let mut cols = None;
        let mut rows = Vec::new();
        for (i, text) in s.split('|').enumerate() {
            if text.is_empty() {
                return Err(Error::MalformedMatrix(format!("row {i} is empty")));
            }
            match cols {
                None => cols = Some(text.len()),
                Some(c) if c != text.len() => {
                    return Err(Error::MalformedMatrix(format!(
                        "row {i} has {} columns, expected {c}",
                        text.len()
                    )))
                }
                Some(_) => {}
            }
            if text.len() > MAX_COLS {
                return Err(Error::TooManyColumns {
                    cols: text.len(),
                    max: MAX_COLS,
                });
            }
            if rows.len() == MAX_ROWS {
                return Err(Error::TooManyRows {
                    rows: rows.len() + 1,
                    max: MAX_ROWS,
                });
            }
            let mut word = 0u64;
            for (j, b) in text.bytes().enumerate() {
                match b {
                    b'0' => {}
                    b'1' => word |= 1 << j,
                    _ => {
                        return Err(Error::MalformedMatrix(format!(
                            "unexpected character at row {i}, column {j}"
                        )))
                    }
                }
            }
            rows.push(word);
        }
        Self::from_rows(cols.unwrap_or(0), rows)
    }
}
