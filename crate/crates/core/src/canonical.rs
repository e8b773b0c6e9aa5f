//! Canonical forms, stabilizers and orbit sizes under the action of
//! `S_m × S_n` on the rows and columns of a binary matrix.
//!
//! The canonical form is the lexicographically least matrix of the orbit in
//! row-major order. For a fixed row order the least column arrangement sorts
//! the columns ascending as top-to-bottom bit strings, so the search runs over
//! row orders only. Rows are placed one at a time; after `t` rows the first `t`
//! rows of the result are already determined by sorting the column prefixes,
//! which gives an exact branch-and-bound. Identical rows are interchangeable
//! and each distinct value is tried once per level.

use num_bigint::BigUint;

use crate::counting::factorial;
use crate::matrix::{lex_key, BinaryMatrix};

/// Row count up to which the exhaustive row-order search is offered on
/// untrusted input. The search visits at most `m!` leaves.
pub const MAX_SEARCH_ROWS: usize = 8;

/// Distinct row values with their multiplicities.
fn row_multiset(a: &BinaryMatrix) -> (Vec<u64>, Vec<usize>) {
    let mut sorted = a.rows().to_vec();
    sorted.sort_unstable();
    let mut values = Vec::new();
    let mut counts: Vec<usize> = Vec::new();
    for r in sorted {
        if values.last() == Some(&r) {
            *counts.last_mut().unwrap() += 1;
        } else {
            values.push(r);
            counts.push(1);
        }
    }
    (values, counts)
}

fn multiplicity_factorials<T: Ord + Copy>(items: &[T]) -> BigUint {
    let mut sorted = items.to_vec();
    sorted.sort_unstable();
    sorted
        .chunk_by(|a, b| a == b)
        .map(|run| factorial(run.len()))
        .product()
}

/// Extends every column signature with the bits of `row`.
#[inline]
fn push_row(sigs: &[u64], row: u64, out: &mut [u64]) {
    for (j, (o, &s)) in out.iter_mut().zip(sigs).enumerate() {
        *o = (s << 1) | ((row >> j) & 1);
    }
}

/// Lex key of the newest row once the columns are sorted by signature.
#[inline]
fn newest_row_key(sorted: &[u64]) -> u64 {
    let n = sorted.len();
    sorted
        .iter()
        .enumerate()
        .fold(0u64, |acc, (j, &s)| acc | ((s & 1) << (n - 1 - j)))
}

/// Reusable canonical-form search for matrices of one shape.
///
/// Holds all scratch buffers so that repeated calls do not allocate.
pub struct Canonicalizer {
    rows: usize,
    cols: usize,
    values: Vec<u64>,
    remaining: Vec<usize>,
    /// Lex keys of the best rows found so far; `None` is larger than any key.
    best: Vec<Option<u64>>,
    /// Column signatures after each depth, `cols` words per level.
    levels: Vec<u64>,
    sorted: Vec<u64>,
    out: Vec<u64>,
}

impl Canonicalizer {
    pub fn new(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            values: Vec::with_capacity(rows),
            remaining: Vec::with_capacity(rows),
            best: vec![None; rows],
            levels: vec![0; (rows + 1) * cols],
            sorted: vec![0; cols],
            out: vec![0; rows],
        }
    }

    /// Row words of the canonical form of the matrix with the given rows.
    pub fn canonical_rows(&mut self, rows: &[u64]) -> &[u64] {
        assert_eq!(rows.len(), self.rows, "row count fixed at construction");
        self.out.copy_from_slice(rows);
        self.out.sort_unstable();
        self.values.clear();
        self.remaining.clear();
        for &r in &self.out {
            if self.values.last() == Some(&r) {
                *self.remaining.last_mut().unwrap() += 1;
            } else {
                self.values.push(r);
                self.remaining.push(1);
            }
        }
        self.best.fill(None);
        self.descend(0);
        for (o, k) in self.out.iter_mut().zip(&self.best) {
            *o = lex_key(k.expect("search reaches a leaf"), self.cols);
        }
        &self.out
    }

    /// Canonical form of a matrix packed by [`BinaryMatrix::cell_mask`].
    pub fn canonical_mask(&mut self, mask: u64) -> u64 {
        let n = self.cols;
        let w = crate::matrix::width_mask(n);
        let mut rows = [0u64; 64];
        for (i, r) in rows[..self.rows].iter_mut().enumerate() {
            *r = (mask >> (i * n)) & w;
        }
        self.canonical_rows(&rows[..self.rows])
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &r)| acc | (r << (i * n)))
    }

    fn descend(&mut self, depth: usize) {
        let n = self.cols;
        if depth == self.rows {
            return;
        }
        for v in 0..self.values.len() {
            if self.remaining[v] == 0 {
                continue;
            }
            let (cur, next) = self.levels.split_at_mut((depth + 1) * n);
            push_row(&cur[depth * n..], self.values[v], &mut next[..n]);
            self.sorted.copy_from_slice(&next[..n]);
            self.sorted.sort_unstable();
            let key = newest_row_key(&self.sorted);
            match self.best[depth] {
                Some(b) if key > b => continue,
                Some(b) if key == b => {}
                _ => {
                    self.best[depth] = Some(key);
                    for later in &mut self.best[depth + 1..] {
                        *later = None;
                    }
                }
            }
            self.remaining[v] -= 1;
            self.descend(depth + 1);
            self.remaining[v] += 1;
        }
    }
}

/// The lexicographically least matrix reachable by permuting rows and columns.
pub fn canonical_form(a: &BinaryMatrix) -> BinaryMatrix {
    let rows = Canonicalizer::new(a.num_rows(), a.num_cols())
        .canonical_rows(a.rows())
        .to_vec();
    BinaryMatrix::from_rows(a.num_cols(), rows).expect("canonical rows fit the original shape")
}

struct StabSearch {
    cols: usize,
    values: Vec<u64>,
    remaining: Vec<usize>,
    /// Sorted column prefixes of the target matrix after each depth.
    targets: Vec<Vec<u64>>,
    levels: Vec<u64>,
    sorted: Vec<u64>,
    leaves: u64,
}

impl StabSearch {
    fn descend(&mut self, depth: usize) {
        let n = self.cols;
        if depth == self.targets.len() {
            self.leaves += 1;
            return;
        }
        for v in 0..self.values.len() {
            if self.remaining[v] == 0 {
                continue;
            }
            let (cur, next) = self.levels.split_at_mut((depth + 1) * n);
            push_row(&cur[depth * n..], self.values[v], &mut next[..n]);
            self.sorted.copy_from_slice(&next[..n]);
            self.sorted.sort_unstable();
            if self.sorted != self.targets[depth] {
                continue;
            }
            self.remaining[v] -= 1;
            self.descend(depth + 1);
            self.remaining[v] += 1;
        }
    }
}

/// Number of pairs `(rho, sigma)` with `apply_permutations(a, rho, sigma) == a`.
///
/// Sums over distinct row arrangements whose column multiset matches that of
/// `a`; each contributes `∏ (row multiplicity)! · ∏ (column multiplicity)!`.
pub fn stabilizer_order(a: &BinaryMatrix) -> BigUint {
    let m = a.num_rows();
    let n = a.num_cols();
    let full: Vec<u64> = (0..n).map(|j| a.column_signature(j)).collect();
    let targets = (0..m)
        .map(|t| {
            let mut pre: Vec<u64> = full.iter().map(|s| s >> (m - 1 - t)).collect();
            pre.sort_unstable();
            pre
        })
        .collect();
    let (values, remaining) = row_multiset(a);
    let row_weight: BigUint = remaining.iter().map(|&c| factorial(c)).product();
    let mut search = StabSearch {
        cols: n,
        values,
        remaining,
        targets,
        levels: vec![0; (m + 1) * n],
        sorted: vec![0; n],
        leaves: 0,
    };
    search.descend(0);
    BigUint::from(search.leaves) * row_weight * multiplicity_factorials(&full)
}

pub fn orbit_size(a: &BinaryMatrix) -> BigUint {
    group_order(a) / stabilizer_order(a)
}

/// `m! · n!`
pub fn group_order(a: &BinaryMatrix) -> BigUint {
    factorial(a.num_rows()) * factorial(a.num_cols())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitData {
    pub canonical: BinaryMatrix,
    pub stabilizer_order: BigUint,
    pub orbit_size: BigUint,
}

pub fn orbit_data(a: &BinaryMatrix) -> OrbitData {
    let stabilizer_order = stabilizer_order(a);
    OrbitData {
        canonical: canonical_form(a),
        orbit_size: group_order(a) / &stabilizer_order,
        stabilizer_order,
    }
}

/// Reference implementations that iterate over all of `S_m × S_n`. Only
/// usable for small matrices.
pub mod naive {
    use std::collections::HashSet;

    use num_bigint::BigUint;

    use crate::matrix::BinaryMatrix;
    use crate::permutation::Permutation;

    fn images(a: &BinaryMatrix) -> impl Iterator<Item = BinaryMatrix> + '_ {
        Permutation::all(a.num_rows()).flat_map(move |rho| {
            Permutation::all(a.num_cols()).map(move |sigma| {
                a.apply_permutations(&rho, &sigma)
                    .expect("permutation sizes match")
            })
        })
    }

    pub fn stabilizer_order(a: &BinaryMatrix) -> BigUint {
        BigUint::from(images(a).filter(|b| b == a).count())
    }

    pub fn orbit(a: &BinaryMatrix) -> HashSet<BinaryMatrix> {
        images(a).collect()
    }

    pub fn canonical_form(a: &BinaryMatrix) -> BinaryMatrix {
        images(a)
            .min_by(|x, y| x.lex_cmp_unchecked(y))
            .expect("the group is never empty")
    }
}
