//! Finite directed multigraphs with loops, and their Laplacians.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{IntMatrix, IntVector};

/// A strongly connected directed multigraph on vertices `0..n`.
///
/// `adj[(v, w)]` is the number of directed edges `v -> w`; loops sit on the
/// diagonal. Every vertex has outdegree at least one and the graph is
/// strongly connected; both are checked on construction and never rechecked.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectedMultigraph {
    adj: IntMatrix,
    outdegree: IntVector,
}

impl DirectedMultigraph {
    pub fn from_adjacency(adj: IntMatrix) -> Result<Self> {
        if !adj.is_square() {
            return Err(Error::NotSquare { rows: adj.rows(), cols: adj.cols() });
        }
        let n = adj.rows();
        if n == 0 {
            return Err(Error::Empty);
        }
        for v in 0..n {
            for w in 0..n {
                if adj[(v, w)].is_negative() {
                    return Err(Error::NegativeMultiplicity { row: v, col: w });
                }
            }
        }
        let outdegree: IntVector = (0..n).map(|v| adj.row(v).iter().sum()).collect();
        if let Some(v) = outdegree.iter().position(Zero::is_zero) {
            return Err(Error::ZeroOutdegree(v));
        }
        if !is_strongly_connected(&adj) {
            return Err(Error::NotStronglyConnected);
        }
        Ok(DirectedMultigraph { adj, outdegree })
    }

    /// Shorthand for small literal graphs.
    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_adjacency(IntMatrix::from_i64(rows))
    }

    /// Recovers the loopless multigraph whose Laplacian is `lap`.
    ///
    /// The diagonal of a Laplacian only records `d_v - d_vv`, so loops cannot
    /// be recovered; the result has none.
    pub fn from_laplacian(lap: &IntMatrix) -> Result<Self> {
        if !lap.is_square() {
            return Err(Error::NotSquare { rows: lap.rows(), cols: lap.cols() });
        }
        let n = lap.rows();
        if let Some(j) = lap.column_sums().iter().position(|s| !s.is_zero()) {
            return Err(Error::ColumnsNotZeroSum(j));
        }
        let mut adj = IntMatrix::zeros(n, n);
        for v in 0..n {
            for w in 0..n {
                let x = &lap[(v, w)];
                if v == w {
                    if x.is_negative() {
                        return Err(Error::NotLaplacian(format!("negative diagonal at {v}")));
                    }
                } else if x.is_positive() {
                    return Err(Error::NotLaplacian(format!("positive entry at ({v}, {w})")));
                } else {
                    // Δ_vw = -d_wv
                    adj[(w, v)] = -x;
                }
            }
        }
        Self::from_adjacency(adj)
    }

    pub fn n(&self) -> usize {
        self.adj.rows()
    }

    pub fn adjacency(&self) -> &IntMatrix {
        &self.adj
    }

    /// Number of edges `v -> w`.
    pub fn multiplicity(&self, v: usize, w: usize) -> &BigInt {
        &self.adj[(v, w)]
    }

    pub fn outdegree(&self, v: usize) -> &BigInt {
        &self.outdegree[v]
    }

    pub fn outdegrees(&self) -> &[BigInt] {
        &self.outdegree
    }

    pub fn indegree(&self, v: usize) -> BigInt {
        (0..self.n()).map(|w| &self.adj[(w, v)]).sum()
    }

    pub fn edge_count(&self) -> BigInt {
        self.outdegree.iter().sum()
    }

    /// `#E - #V`, the number of chips on the maximal stable configuration.
    pub fn excess(&self) -> BigInt {
        self.edge_count() - BigInt::from(self.n())
    }

    pub fn has_loops(&self) -> bool {
        (0..self.n()).any(|v| !self.adj[(v, v)].is_zero())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Total Laplacian: `Δ[v][v] = d_v - d_vv`, `Δ[v][w] = -d_wv` for `v != w`.
    /// Column `v` is the change in chips when `v` fires, negated.
    pub fn laplacian(&self) -> IntMatrix {
        let n = self.n();
        let mut lap = IntMatrix::zeros(n, n);
        for v in 0..n {
            for w in 0..n {
                lap[(v, w)] = if v == w {
                    &self.outdegree[v] - &self.adj[(v, v)]
                } else {
                    -&self.adj[(w, v)]
                };
            }
        }
        lap
    }

    /// Laplacian with row and column `sink` removed.
    pub fn reduced_laplacian(&self, sink: usize) -> Result<IntMatrix> {
        self.check_vertex(sink)?;
        Ok(self.laplacian().minor(sink, sink))
    }

    /// Column `v` of the Laplacian, without building the whole matrix.
    pub fn laplacian_column(&self, v: usize) -> IntVector {
        (0..self.n())
            .map(|w| if w == v { &self.outdegree[v] - &self.adj[(v, v)] } else { -&self.adj[(v, w)] })
            .collect()
    }
}

/// True iff the square nonnegative matrix, read as an adjacency matrix, is a
/// single strongly connected component. Non-square input is never connected.
pub fn is_strongly_connected(adj: &IntMatrix) -> bool {
    if !adj.is_square() || adj.rows() == 0 {
        return false;
    }
    let n = adj.rows();
    let reaches_all = |forward: bool| {
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for w in 0..n {
                let m = if forward { &adj[(v, w)] } else { &adj[(w, v)] };
                if !seen[w] && m.is_positive() {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    };
    reaches_all(true) && reaches_all(false)
}
