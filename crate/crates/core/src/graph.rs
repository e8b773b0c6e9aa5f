//! Simple bipartite graphs with a distinguished row side and column side,
//! and the biadjacency correspondence with [`BinaryMatrix`].

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;
use crate::permutation::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Row,
    Col,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub side: Side,
    pub index: usize,
}

impl Vertex {
    pub fn row(index: usize) -> Self {
        Self {
            side: Side::Row,
            index,
        }
    }

    pub fn col(index: usize) -> Self {
        Self {
            side: Side::Col,
            index,
        }
    }
}

/// Edges are `(row, col)` pairs; repeated edges are rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    rows: usize,
    cols: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new<I>(rows: usize, cols: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyDimension { rows, cols });
        }
        let mut set = BTreeSet::new();
        for (row, col) in edges {
            if row >= rows || col >= cols {
                return Err(Error::PositionOutOfRange {
                    row,
                    col,
                    rows,
                    cols,
                });
            }
            if !set.insert((row, col)) {
                return Err(Error::DuplicatePosition { row, col });
            }
        }
        Ok(Self {
            rows,
            cols,
            edges: set,
        })
    }

    pub fn num_rows(&self) -> usize {
        self.rows
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, row: usize, col: usize) -> bool {
        self.edges.contains(&(row, col))
    }

    pub fn side_len(&self, side: Side) -> usize {
        match side {
            Side::Row => self.rows,
            Side::Col => self.cols,
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        (0..self.rows)
            .map(Vertex::row)
            .chain((0..self.cols).map(Vertex::col))
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        let size = self.side_len(v.side);
        if v.index >= size {
            return Err(Error::VertexOutOfRange {
                index: v.index,
                size,
            });
        }
        Ok(())
    }

    /// The graph whose row `i` is adjacent to column `j` iff `a[i][j] = 1`.
    pub fn from_matrix(a: &BinaryMatrix) -> Self {
        Self {
            rows: a.num_rows(),
            cols: a.num_cols(),
            edges: a.ones().collect(),
        }
    }

    /// Numbers row vertex `r` as `rho(r)` and column vertex `c` as
    /// `sigma(c)`, then writes the biadjacency matrix of that numbering.
    pub fn to_matrix(&self, rho: &Permutation, sigma: &Permutation) -> Result<BinaryMatrix> {
        if rho.len() != self.rows {
            return Err(Error::SizeMismatch {
                expected: self.rows,
                found: rho.len(),
            });
        }
        if sigma.len() != self.cols {
            return Err(Error::SizeMismatch {
                expected: self.cols,
                found: sigma.len(),
            });
        }
        BinaryMatrix::from_positions(
            self.rows,
            self.cols,
            self.edges
                .iter()
                .map(|&(r, c)| (rho.image(r), sigma.image(c))),
        )
    }
}

pub fn graph_of_matrix(a: &BinaryMatrix) -> BipartiteGraph {
    BipartiteGraph::from_matrix(a)
}

pub fn matrix_of_graph(
    g: &BipartiteGraph,
    rho: &Permutation,
    sigma: &Permutation,
) -> Result<BinaryMatrix> {
    g.to_matrix(rho, sigma)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> BinaryMatrix {
        s.parse().unwrap()
    }

    fn edges(g: &BipartiteGraph) -> Vec<(usize, usize)> {
        g.edges().iter().copied().collect()
    }

    #[test]
    fn graph_of_matrix_examples() {
        let g = graph_of_matrix(&m("00|00"));
        assert_eq!((g.num_rows(), g.num_cols(), g.num_edges()), (2, 2, 0));
        assert_eq!(g.vertices().count(), 4);
        assert_eq!(edges(&graph_of_matrix(&m("10|01"))), vec![(0, 0), (1, 1)]);
        assert_eq!(edges(&graph_of_matrix(&m("11|00"))), vec![(0, 0), (0, 1)]);
    }

    #[test]
    fn matrix_of_graph_examples() {
        let g = BipartiteGraph::new(2, 2, [(0, 0), (1, 1)]).unwrap();
        let id = Permutation::identity(2);
        let swap = Permutation::new(vec![1, 0]).unwrap();
        assert_eq!(matrix_of_graph(&g, &id, &id).unwrap(), m("10|01"));
        assert_eq!(matrix_of_graph(&g, &swap, &swap).unwrap(), m("10|01"));
        assert_eq!(matrix_of_graph(&g, &swap, &id).unwrap(), m("01|10"));
        assert!(matches!(
            matrix_of_graph(&g, &Permutation::identity(3), &id),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            BipartiteGraph::new(2, 2, [(0, 1), (0, 1)]),
            Err(Error::DuplicatePosition { .. })
        ));
        assert!(BipartiteGraph::new(2, 2, [(0, 2)]).is_err());
        assert!(BipartiteGraph::new(0, 2, []).is_err());
    }
}
