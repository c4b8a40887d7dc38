//! Laplacian lattices from zero-sum lattices, and the reduction from
//! nonnegative rank to the chip-firing halting problem.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::chipfiring::{max_stable, ChipConfig};
use crate::error::{Error, Result};
use crate::graph::DirectedMultigraph;
use crate::linalg::{determinant, hermite_normal_form, lattice_equal};
use crate::matrix::IntMatrix;

/// Largest coefficient box [`nonneg_rank_bruteforce`] will walk.
pub const MAX_BOX_POINTS: u64 = 5_000_000;

/// Basis `M` (`n x (n-1)`) of a full-rank sublattice `L` of `Z^n_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroSumLatticeBasis {
    basis: IntMatrix,
}

impl ZeroSumLatticeBasis {
    pub fn new(basis: IntMatrix) -> Result<Self> {
        let n = basis.rows();
        if n < 2 {
            return Err(Error::Empty);
        }
        if basis.cols() != n - 1 {
            return Err(Error::DimensionMismatch { expected: n - 1, found: basis.cols() });
        }
        if let Some(j) = basis.column_sums().iter().position(|s| !s.is_zero()) {
            return Err(Error::ColumnsNotZeroSum(j));
        }
        if determinant(&top_block(&basis))?.is_zero() {
            return Err(Error::RankDeficient);
        }
        Ok(ZeroSumLatticeBasis { basis })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(IntMatrix::from_i64(rows))
    }

    pub fn n(&self) -> usize {
        self.basis.rows()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.basis
    }
}

fn top_block(basis: &IntMatrix) -> IntMatrix {
    let m = basis.rows() - 1;
    basis.select(&(0..m).collect::<Vec<_>>(), &(0..basis.cols()).collect::<Vec<_>>())
}

/// Intermediate matrices of [`laplacian_from_lattice`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionTrace {
    /// Basis with its last row removed.
    pub a: IntMatrix,
    /// Hermite normal form of `a`.
    pub h: IntMatrix,
    /// `det H = |det A|`.
    pub d: BigInt,
    /// `k_j = ceil(Σ_i h_ij / d)` for the first `n-2` columns.
    pub k: Vec<BigInt>,
    /// `H` with `k_j d` subtracted just below the diagonal.
    pub b: IntMatrix,
    pub laplacian: IntMatrix,
}

/// Builds a loopless strongly connected multigraph with `ΔZ^n = L`.
///
/// Column 0 of `Δ` is `d e_0 - d e_{n-1}`; columns `1..n` carry `-B` in the
/// first `n-1` rows and a last row that makes each column sum to zero.
pub fn laplacian_from_lattice(lattice: &ZeroSumLatticeBasis) -> Result<(DirectedMultigraph, ConstructionTrace)> {
    let n = lattice.n();
    let m = n - 1;
    let a = top_block(lattice.matrix());
    let hf = hermite_normal_form(&a)?;
    let (h, d) = (hf.h, hf.det);

    let mut k = Vec::with_capacity(m.saturating_sub(1));
    let mut b = h.clone();
    for j in 0..m.saturating_sub(1) {
        let colsum: BigInt = (0..m).map(|i| &h[(i, j)]).sum();
        let kj = colsum.div_ceil(&d);
        b[(j + 1, j)] -= &kj * &d;
        k.push(kj);
    }

    let mut lap = IntMatrix::zeros(n, n);
    lap[(0, 0)] = d.clone();
    lap[(m, 0)] = -d.clone();
    for j in 0..m {
        let mut sum = BigInt::zero();
        for i in 0..m {
            let x = -&b[(i, j)];
            sum += &x;
            lap[(i, j + 1)] = x;
        }
        lap[(m, j + 1)] = -sum;
    }

    let graph = DirectedMultigraph::from_laplacian(&lap)?;
    debug_assert_eq!(graph.laplacian(), lap);
    assert!(lattice_equal(&lap, lattice.matrix())?, "ΔZ^n must equal L");
    Ok((graph, ConstructionTrace { a, h, d, k, b, laplacian: lap }))
}

/// Coefficient bound that makes [`nonneg_rank_bruteforce`] exhaustive.
///
/// If `σ - Mc = τ >= 0` then `Σ τ = Σ σ = t`, so each `|σ_i - τ_i| <= S`
/// with `S = max|σ| + t`, and `c = adj(A)(σ - τ)_top / det A`.
pub fn default_box_bound(lattice: &ZeroSumLatticeBasis, sigma: &[BigInt]) -> BigInt {
    let t: BigInt = sigma.iter().sum();
    if t.is_negative() {
        return BigInt::zero();
    }
    let s = sigma.iter().map(Signed::abs).max().unwrap_or_default() + &t;
    let a = top_block(lattice.matrix());
    let m = a.rows();
    let det = determinant(&a).expect("square").abs();
    // adj(A)_ij = (-1)^{i+j} det A with row j and column i removed.
    let row_norm = (0..m)
        .map(|i| (0..m).map(|j| if m == 1 { BigInt::from(1) } else { determinant(&a.minor(j, i)).unwrap().abs() }).sum::<BigInt>())
        .max()
        .unwrap_or_default();
    (row_norm * s).div_ceil(&det)
}

/// Whether some `c` with `|c_i| <= box_bound` has `σ - Mc >= 0`.
///
/// With no bound given, [`default_box_bound`] is used and the answer is
/// exact. Refuses boxes with more than [`MAX_BOX_POINTS`] points.
pub fn nonneg_rank_bruteforce(
    lattice: &ZeroSumLatticeBasis,
    sigma: &[BigInt],
    box_bound: Option<BigInt>,
) -> Result<bool> {
    let n = lattice.n();
    if sigma.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: sigma.len() });
    }
    if sigma.iter().sum::<BigInt>().is_negative() {
        return Ok(false);
    }
    let bound = box_bound.unwrap_or_else(|| default_box_bound(lattice, sigma));
    let m = n - 1;
    let side = bound.to_u64().and_then(|b| b.checked_mul(2)).and_then(|s| s.checked_add(1));
    let points = side.and_then(|s| (0..m).try_fold(1u64, |acc, _| acc.checked_mul(s)));
    let (Some(points), Some(b)) = (points, bound.to_i64()) else {
        return Err(Error::TooLarge(format!("box bound {bound}")));
    };
    if points > MAX_BOX_POINTS {
        return Err(Error::TooLarge(format!("{points} coefficient vectors")));
    }
    let cols = lattice.matrix().columns();
    let mut c = vec![-b; m];
    loop {
        // τ = σ - Σ c_j M_j
        let ok = (0..n).all(|i| {
            let mut tau = sigma[i].clone();
            for (cj, col) in c.iter().zip(&cols) {
                tau -= *cj * &col[i];
            }
            !tau.is_negative()
        });
        if ok {
            return Ok(true);
        }
        let mut j = 0;
        while j < m && c[j] == b {
            c[j] = -b;
            j += 1;
        }
        if j == m {
            return Ok(false);
        }
        c[j] += 1;
    }
}

/// The instance `(G, σ_max - σ)` that halts iff `σ` has nonnegative rank
/// relative to `L`.
pub fn reduce_rank_to_halting(
    lattice: &ZeroSumLatticeBasis,
    sigma: &[BigInt],
) -> Result<(DirectedMultigraph, ChipConfig)> {
    if sigma.len() != lattice.n() {
        return Err(Error::DimensionMismatch { expected: lattice.n(), found: sigma.len() });
    }
    let (graph, _) = laplacian_from_lattice(lattice)?;
    let smax = max_stable(&graph);
    let config = ChipConfig(smax.iter().zip(sigma).map(|(a, s)| a - s).collect());
    Ok((graph, config))
}
