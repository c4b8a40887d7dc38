//! Spanning-tree counts, the Pham index, the primitive period vector and the
//! Eulerian / coEulerian / directed-cactus classification.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::DirectedMultigraph;
use crate::linalg::{determinant, Lattice};
use crate::matrix::{IntMatrix, IntVector};

/// `κ(v)`: the number of spanning trees oriented toward `v`, computed as
/// `det` of the reduced Laplacian at `v` for every vertex.
pub fn tree_count_vector(g: &DirectedMultigraph) -> IntVector {
    let lap = g.laplacian();
    let kappa: IntVector = (0..g.n())
        .map(|v| determinant(&lap.minor(v, v)).expect("reduced Laplacian is square"))
        .collect();
    debug_assert!(kappa.iter().all(|k| k.is_positive()));
    debug_assert!(lap.mul_vec(&kappa).unwrap().iter().all(Zero::is_zero));
    kappa
}

fn gcd_all(values: &[BigInt]) -> BigInt {
    values.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Pham index `M_G = gcd_v κ(v)`.
pub fn pham_index(g: &DirectedMultigraph) -> BigInt {
    gcd_all(&tree_count_vector(g))
}

/// The unique primitive period vector `π = κ / M`.
pub fn period_vector(g: &DirectedMultigraph) -> IntVector {
    period_from_kappa(g, &tree_count_vector(g))
}

fn period_from_kappa(g: &DirectedMultigraph, kappa: &[BigInt]) -> IntVector {
    let m = gcd_all(kappa);
    let pi: IntVector = kappa.iter().map(|k| k / &m).collect();
    assert!(pi.iter().all(|p| p.is_positive()), "period vector must be strictly positive");
    assert!(gcd_all(&pi).is_one(), "period vector must be primitive");
    assert!(
        g.laplacian().mul_vec(&pi).unwrap().iter().all(Zero::is_zero),
        "period vector must lie in the Laplacian kernel"
    );
    pi
}

/// Order of `Z^n_0 / ΔZ^n`.
///
/// In the basis `{e_i - e_n}` of `Z^n_0`, `ΔZ^n` is spanned by the columns of
/// `Δ` with its last row dropped; the order is the index of that full-rank
/// lattice in `Z^{n-1}`. Tree counts are not consulted.
pub fn cokernel_order(g: &DirectedMultigraph) -> BigInt {
    let n = g.n();
    if n == 1 {
        return BigInt::one();
    }
    let lap = g.laplacian();
    let coords = lap.select(&(0..n - 1).collect::<Vec<_>>(), &(0..n).collect::<Vec<_>>());
    let lattice = Lattice::from_generators(&coords);
    debug_assert_eq!(lattice.rank(), n - 1);
    lattice.projected_index()
}

/// Indegree equals outdegree at every vertex.
pub fn is_eulerian(g: &DirectedMultigraph) -> bool {
    let balanced = (0..g.n()).all(|v| &g.indegree(v) == g.outdegree(v));
    debug_assert_eq!(
        balanced,
        g.laplacian().mul_vec(&vec![BigInt::one(); g.n()]).unwrap().iter().all(Zero::is_zero)
    );
    debug_assert_eq!(balanced, {
        let kappa = tree_count_vector(g);
        kappa.iter().all(|k| k == &kappa[0])
    });
    balanced
}

/// Pham index one.
pub fn is_coeulerian(g: &DirectedMultigraph) -> bool {
    pham_index(g).is_one()
}

/// Loopless with exactly one spanning tree toward every vertex.
pub fn is_directed_cactus(g: &DirectedMultigraph) -> bool {
    !g.has_loops() && tree_count_vector(g).iter().all(One::is_one)
}

/// Largest vertex count [`ucp_bruteforce`] accepts.
pub const UCP_MAX_VERTICES: usize = 10;

/// Exhaustive unique-cycle-property check: every edge (each parallel copy
/// counted separately) lies on exactly one simple directed cycle. Loops are
/// cycles of length one.
pub fn ucp_bruteforce(g: &DirectedMultigraph) -> Result<bool> {
    let n = g.n();
    if n > UCP_MAX_VERTICES {
        return Err(Error::TooLarge(format!("{n} vertices exceeds the limit of {UCP_MAX_VERTICES}")));
    }
    // through[v][w]: number of simple cycles through one fixed copy of v -> w.
    let mut through = IntMatrix::zeros(n, n);
    for start in 0..n {
        let mut path = vec![start];
        let mut on_path = vec![false; n];
        on_path[start] = true;
        extend_cycles(g, start, &mut path, &mut on_path, &mut through);
    }
    Ok((0..n).all(|v| (0..n).all(|w| g.multiplicity(v, w).is_zero() || through[(v, w)].is_one())))
}

// Enumerates simple cycles whose smallest vertex is `start`.
fn extend_cycles(
    g: &DirectedMultigraph,
    start: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    through: &mut IntMatrix,
) {
    let last = *path.last().unwrap();
    for next in start..g.n() {
        if g.multiplicity(last, next).is_zero() {
            continue;
        }
        if next == start {
            let mut cycle = path.clone();
            cycle.push(start);
            let edges: Vec<(usize, usize)> = cycle.windows(2).map(|w| (w[0], w[1])).collect();
            for (k, &(v, w)) in edges.iter().enumerate() {
                let others: BigInt = edges
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != k)
                    .map(|(_, &(a, b))| g.multiplicity(a, b).clone())
                    .product();
                through[(v, w)] += others;
            }
        } else if !on_path[next] {
            on_path[next] = true;
            path.push(next);
            extend_cycles(g, start, path, on_path, through);
            path.pop();
            on_path[next] = false;
        }
    }
}

/// Everything the classifier knows about a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphInvariants {
    pub kappa: IntVector,
    pub pham_index: BigInt,
    pub period: IntVector,
    pub cokernel_order: BigInt,
    pub is_eulerian: bool,
    pub is_coeulerian: bool,
    pub is_cactus: bool,
}

impl GraphInvariants {
    pub fn compute(g: &DirectedMultigraph) -> Self {
        let kappa = tree_count_vector(g);
        let pham_index = gcd_all(&kappa);
        let period = period_from_kappa(g, &kappa);
        let cokernel_order = cokernel_order(g);
        assert_eq!(cokernel_order, pham_index, "cokernel order must equal the Pham index");
        let is_eulerian = is_eulerian(g);
        let is_coeulerian = pham_index.is_one();
        let is_cactus = !g.has_loops() && kappa.iter().all(One::is_one);
        GraphInvariants { kappa, pham_index, period, cokernel_order, is_eulerian, is_coeulerian, is_cactus }
    }
}
