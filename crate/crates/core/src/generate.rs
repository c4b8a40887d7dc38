//! Seeded random instances for demos and property tests.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::DirectedMultigraph;
use crate::matrix::IntMatrix;

/// Adjacency matrix of the directed cycle `0 -> 1 -> ... -> n-1 -> 0`
/// (a single loop when `n == 1`).
pub fn cycle(n: usize) -> IntMatrix {
    let mut adj = IntMatrix::zeros(n, n);
    for v in 0..n {
        adj[(v, (v + 1) % n)] = BigInt::from(1);
    }
    adj
}

/// Random strongly connected multigraph with multiplicities in
/// `0..=max_multiplicity` (loops included), plus a Hamiltonian cycle through
/// a random vertex order so that strong connectivity always holds.
///
/// The same `(n, max_multiplicity, seed)` always yields the same graph.
pub fn random_strongly_connected(n: usize, max_multiplicity: u32, seed: u64) -> DirectedMultigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_graph_with(&mut rng, n, max_multiplicity)
}

pub fn random_graph_with<R: Rng>(rng: &mut R, n: usize, max_multiplicity: u32) -> DirectedMultigraph {
    assert!(n >= 1, "graph needs a vertex");
    let max = max_multiplicity.max(1);
    let mut adj = IntMatrix::zeros(n, n);
    for v in 0..n {
        for w in 0..n {
            adj[(v, w)] = BigInt::from(rng.gen_range(0..=max));
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for k in 0..n {
        let (v, w) = (order[k], order[(k + 1) % n]);
        if adj[(v, w)] == BigInt::from(0) {
            adj[(v, w)] = BigInt::from(rng.gen_range(1..=max));
        }
    }
    DirectedMultigraph::from_adjacency(adj).expect("Hamiltonian cycle guarantees strong connectivity")
}

/// Random `n x (n-1)` matrix with zero column sums and full column rank,
/// entries of the first `n-1` rows in `-max_entry..=max_entry`.
pub fn random_zero_sum_basis<R: Rng>(rng: &mut R, n: usize, max_entry: i64) -> IntMatrix {
    assert!(n >= 2 && max_entry >= 1);
    loop {
        let mut m = IntMatrix::zeros(n, n - 1);
        for j in 0..n - 1 {
            let mut sum = BigInt::from(0);
            for i in 0..n - 1 {
                let x = BigInt::from(rng.gen_range(-max_entry..=max_entry));
                sum += &x;
                m[(i, j)] = x;
            }
            m[(n - 1, j)] = -sum;
        }
        let top = m.select(&(0..n - 1).collect::<Vec<_>>(), &(0..n - 1).collect::<Vec<_>>());
        if crate::linalg::determinant(&top).map(|d| d != BigInt::from(0)).unwrap_or(false) {
            return m;
        }
    }
}
