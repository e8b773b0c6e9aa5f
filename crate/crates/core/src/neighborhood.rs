//! Neighborhood equivalence on the vertices of a bipartite graph.
//!
//! Two vertices are equivalent when they lie on the same side and have the
//! same neighbor set. Isolated vertices have an empty neighbor set, so all
//! isolated rows form one class and all isolated columns another; a row and
//! a column are never merged.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;

use crate::counting::factorial;
use crate::error::Result;
use crate::graph::{BipartiteGraph, Side, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexClass {
    pub side: Side,
    /// Sorted vertex indices within `side`.
    pub members: Vec<usize>,
}

impl VertexClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodClassification {
    /// Row classes first, then column classes, each ordered by smallest member.
    pub classes: Vec<VertexClass>,
    /// Class sizes, ascending.
    pub deltas: Vec<usize>,
    pub delta_factorial_product: BigUint,
}

impl NeighborhoodClassification {
    /// Number of classes.
    pub fn s(&self) -> usize {
        self.classes.len()
    }

    pub fn deltas_rows(&self) -> Vec<usize> {
        self.side_deltas(Side::Row)
    }

    pub fn deltas_cols(&self) -> Vec<usize> {
        self.side_deltas(Side::Col)
    }

    fn side_deltas(&self, side: Side) -> Vec<usize> {
        let mut d: Vec<usize> = self
            .classes
            .iter()
            .filter(|c| c.side == side)
            .map(VertexClass::len)
            .collect();
        d.sort_unstable();
        d
    }

    /// The class containing `v`, if `v` exists.
    pub fn class_of(&self, v: Vertex) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| c.side == v.side && c.members.binary_search(&v.index).is_ok())
    }
}

pub fn neighbors(g: &BipartiteGraph, v: Vertex) -> Result<BTreeSet<Vertex>> {
    g.check_vertex(v)?;
    let out = match v.side {
        Side::Row => g
            .edges()
            .range((v.index, 0)..(v.index + 1, 0))
            .map(|&(_, c)| Vertex::col(c))
            .collect(),
        Side::Col => g
            .edges()
            .iter()
            .filter(|&&(_, c)| c == v.index)
            .map(|&(r, _)| Vertex::row(r))
            .collect(),
    };
    Ok(out)
}

pub fn degree(g: &BipartiteGraph, v: Vertex) -> Result<usize> {
    neighbors(g, v).map(|n| n.len())
}

/// Adjacency lists for both sides, each list sorted.
fn adjacency(g: &BipartiteGraph) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let mut rows = vec![Vec::new(); g.num_rows()];
    let mut cols = vec![Vec::new(); g.num_cols()];
    for &(r, c) in g.edges() {
        rows[r].push(c);
        cols[c].push(r);
    }
    (rows, cols)
}

pub fn classify(g: &BipartiteGraph) -> NeighborhoodClassification {
    let (row_adj, col_adj) = adjacency(g);
    let mut classes = Vec::new();
    for (side, adj) in [(Side::Row, row_adj), (Side::Col, col_adj)] {
        let mut buckets: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (v, nbrs) in adj.into_iter().enumerate() {
            buckets.entry(nbrs).or_default().push(v);
        }
        let mut side_classes: Vec<VertexClass> = buckets
            .into_values()
            .map(|members| VertexClass { side, members })
            .collect();
        side_classes.sort_by_key(|c| c.members[0]);
        classes.extend(side_classes);
    }
    let mut deltas: Vec<usize> = classes.iter().map(VertexClass::len).collect();
    deltas.sort_unstable();
    let delta_factorial_product = deltas.iter().map(|&d| factorial(d)).product();
    NeighborhoodClassification {
        classes,
        deltas,
        delta_factorial_product,
    }
}

/// Degree sums over the row side, the column side, and all vertices.
pub fn degree_sum_check(g: &BipartiteGraph) -> (usize, usize, usize) {
    let (row_adj, col_adj) = adjacency(g);
    let row_sum: usize = row_adj.iter().map(Vec::len).sum();
    let col_sum: usize = col_adj.iter().map(Vec::len).sum();
    (row_sum, col_sum, row_sum + col_sum)
}

/// Sorted degree sequences of the row side and the column side.
pub fn degree_sequences(g: &BipartiteGraph) -> (Vec<usize>, Vec<usize>) {
    let (row_adj, col_adj) = adjacency(g);
    let sorted = |adj: Vec<Vec<usize>>| {
        let mut d: Vec<usize> = adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    };
    (sorted(row_adj), sorted(col_adj))
}
