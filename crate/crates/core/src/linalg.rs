//! Exact integer linear algebra.
//!
//! Hermite normal forms here are *lower triangular* and produced by column
//! operations: `H = AU` with `U` unimodular, `0 < h_ii` and `0 <= h_ij < h_ii`
//! for `j < i`. Lattices are always column spans.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{IntMatrix, IntVector};

/// Extended gcd: `(g, x, y)` with `x*a + y*b = g` and `g >= 0`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = &old_r / &r;
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                a[(i, j)] = v;
            }
        }
        prev = a[(k, k)].clone();
    }
    Ok(sign * &a[(n - 1, n - 1)])
}

/// Incremental integer row-echelon basis of a rational column space.
///
/// Each stored vector is zero at the pivot rows of all earlier vectors and
/// is kept primitive (content 1).
#[derive(Clone, Debug, Default)]
struct Echelon {
    vectors: Vec<(usize, IntVector)>,
}

impl Echelon {
    fn reduce(&self, v: &[BigInt]) -> IntVector {
        let mut v = v.to_vec();
        for (p, e) in &self.vectors {
            if v[*p].is_zero() {
                continue;
            }
            let g = e[*p].gcd(&v[*p]);
            let a = &e[*p] / &g;
            let b = &v[*p] / &g;
            for (x, y) in v.iter_mut().zip(e) {
                *x = &a * &*x - &b * y;
            }
            make_primitive(&mut v);
        }
        v
    }

    /// Adds `v` to the span; returns false if it was already dependent.
    fn insert(&mut self, v: &[BigInt]) -> bool {
        let r = self.reduce(v);
        match r.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                self.vectors.push((p, r));
                true
            }
            None => false,
        }
    }

    fn pivots(&self) -> Vec<usize> {
        self.vectors.iter().map(|(p, _)| *p).collect()
    }
}

fn make_primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Rank over the rationals.
pub fn rank(m: &IntMatrix) -> usize {
    let mut e = Echelon::default();
    (0..m.cols()).filter(|&j| e.insert(&m.column(j))).count()
}

/// Statistics recorded while computing a Hermite form modulo a determinant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularStats {
    /// The modulus the reduction started from.
    pub modulus: BigInt,
    /// Largest absolute value ever stored in the working matrix.
    pub peak_entry: BigInt,
}

impl ModularStats {
    fn new(modulus: &BigInt) -> Self {
        ModularStats { modulus: modulus.clone(), peak_entry: BigInt::zero() }
    }

    fn observe(&mut self, x: &BigInt) {
        if x.abs() > self.peak_entry {
            self.peak_entry = x.abs();
        }
    }
}

/// Lower-triangular Hermite form of the lattice spanned by the columns of
/// `gens` (`r x k`, rank `r`), given `modulus`, a positive multiple of the
/// lattice determinant.
///
/// Because `modulus * Z^r` lies in the lattice, every stored entry can be
/// reduced into `[0, modulus)`; after row `i` is settled the modulus shrinks
/// by the pivot `h_ii`.
fn modular_hnf(gens: &IntMatrix, modulus: &BigInt, stats: &mut ModularStats) -> IntMatrix {
    let r = gens.rows();
    let k = gens.cols();
    debug_assert!(k >= r && modulus.is_positive());
    let mut w = gens.clone();
    let mut rmod = modulus.clone();

    for i in 0..r {
        for j in i..k {
            for t in i..r {
                let x = w[(t, j)].mod_floor(&rmod);
                stats.observe(&x);
                w[(t, j)] = x;
            }
        }
        for j in i + 1..k {
            if w[(i, j)].is_zero() {
                continue;
            }
            let a = w[(i, i)].clone();
            let b = w[(i, j)].clone();
            let (g, u, v) = ext_gcd(&a, &b);
            let a_g = &a / &g;
            let b_g = &b / &g;
            for t in i..r {
                let ci = w[(t, i)].clone();
                let cj = w[(t, j)].clone();
                let ni = (&u * &ci + &v * &cj).mod_floor(&rmod);
                let nj = (&a_g * &cj - &b_g * &ci).mod_floor(&rmod);
                stats.observe(&ni);
                stats.observe(&nj);
                w[(t, i)] = ni;
                w[(t, j)] = nj;
            }
        }
        // Fold in rmod * e_i, which lies in the current sublattice.
        let (g, u, _) = ext_gcd(&w[(i, i)], &rmod);
        for t in i + 1..r {
            let x = (&u * &w[(t, i)]).mod_floor(&rmod);
            stats.observe(&x);
            w[(t, i)] = x;
        }
        w[(i, i)] = g.clone();
        stats.observe(&g);
        rmod = &rmod / &g;
    }

    let mut h = w.select(&(0..r).collect::<Vec<_>>(), &(0..r).collect::<Vec<_>>());
    let det: BigInt = (0..r).map(|i| h[(i, i)].clone()).product();
    // Reduce below-diagonal entries right to left so that the columns used
    // for reduction are already final. det * e_t is in the lattice, so lower
    // rows stay reduced modulo det throughout.
    for i in (0..r).rev() {
        for t in i + 1..r {
            let q = h[(t, i)].div_floor(&h[(t, t)]);
            if q.is_zero() {
                continue;
            }
            for s in t..r {
                let mut x = &h[(s, i)] - &q * &h[(s, t)];
                if s > t {
                    x = x.mod_floor(&det);
                }
                stats.observe(&x);
                h[(s, i)] = x;
            }
        }
    }
    h
}

/// Hermite normal form of a nonsingular square matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteForm {
    /// Lower triangular, `0 < h_ii`, `0 <= h_ij < h_ii` for `j < i`.
    pub h: IntMatrix,
    /// `|det A| = det H`, the product of the diagonal.
    pub det: BigInt,
}

pub fn hermite_normal_form(a: &IntMatrix) -> Result<HermiteForm> {
    hermite_normal_form_with_stats(a).map(|(h, _)| h)
}

/// As [`hermite_normal_form`], also reporting entry growth during reduction.
pub fn hermite_normal_form_with_stats(a: &IntMatrix) -> Result<(HermiteForm, ModularStats)> {
    let d = determinant(a)?.abs();
    if d.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let mut stats = ModularStats::new(&d);
    let h = modular_hnf(a, &d, &mut stats);
    debug_assert_eq!((0..h.rows()).map(|i| h[(i, i)].clone()).product::<BigInt>(), d);
    Ok((HermiteForm { h, det: d }, stats))
}

/// Invariant factors of the cokernel `Z^rows / M Z^cols`, restricted to the
/// nonzero diagonal of the Smith form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// `d_1 | d_2 | ... | d_r`, all positive.
    pub factors: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    /// Factors different from one: the cyclic decomposition of the torsion.
    pub fn nontrivial_factors(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = min_abs_entry(&a, (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j))))
        else {
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        loop {
            let p = a[(t, t)].clone();
            for i in t + 1..rows {
                let q = &a[(i, t)] / &p;
                if !q.is_zero() {
                    for j in t..cols {
                        let x = &a[(i, j)] - &q * &a[(t, j)];
                        a[(i, j)] = x;
                    }
                }
            }
            for j in t + 1..cols {
                let q = &a[(t, j)] / &p;
                if !q.is_zero() {
                    for i in t..rows {
                        let x = &a[(i, j)] - &q * &a[(i, t)];
                        a[(i, j)] = x;
                    }
                }
            }
            let cross = (t + 1..rows).map(|i| (i, t)).chain((t + 1..cols).map(|j| (t, j)));
            if let Some((i, j)) = min_abs_entry(&a, cross) {
                // A remainder smaller than the pivot is left; make it the pivot.
                a.swap_rows(t, i);
                a.swap_cols(t, j);
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let x = &a[(t, j)] + &a[(i, j)];
                        a[(t, j)] = x;
                    }
                }
                None => break,
            }
        }
        t += 1;
    }
    let factors: Vec<BigInt> = (0..t).map(|i| a[(i, i)].abs()).collect();
    debug_assert!(factors.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
    SmithForm { rank: factors.len(), factors }
}

fn min_abs_entry(a: &IntMatrix, cells: impl Iterator<Item = (usize, usize)>) -> Option<(usize, usize)> {
    cells.filter(|&c| !a[c].is_zero()).min_by(|&x, &y| a[x].abs().cmp(&a[y].abs()))
}

/// Solves `a x = b` over the rationals for nonsingular square `a`.
pub fn solve_rational(a: &IntMatrix, b: &[BigInt]) -> Result<Vec<BigRational>> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    if b.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: b.len() });
    }
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            a.row(i)
                .iter()
                .chain(std::iter::once(&b[i]))
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&i| !m[i][k].is_zero()).ok_or(Error::SingularMatrix)?;
        m.swap(k, p);
        let pivot = m[k].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == k || row[k].is_zero() {
                continue;
            }
            let f = &row[k] / &pivot[k];
            for (x, p) in row[k..].iter_mut().zip(&pivot[k..]) {
                *x -= &f * p;
            }
        }
    }
    Ok((0..n).map(|i| &m[i][n] / &m[i][i]).collect())
}

/// An integer lattice given by an arbitrary generating set of columns.
///
/// The generators may be dependent over the rationals. Internally the
/// lattice is projected onto `rank` coordinates on which that projection is
/// injective, and stored there in Hermite normal form.
#[derive(Clone, Debug)]
pub struct Lattice {
    ambient: usize,
    echelon: Echelon,
    rows: Vec<usize>,
    hnf: IntMatrix,
    stats: ModularStats,
}

impl Lattice {
    pub fn from_generators(gens: &IntMatrix) -> Self {
        let ambient = gens.rows();
        let mut echelon = Echelon::default();
        let mut spanning = Vec::new();
        for j in 0..gens.cols() {
            if echelon.insert(&gens.column(j)) {
                spanning.push(j);
            }
        }
        // The echelon vectors restricted to their pivot rows form a
        // triangular nonsingular block, so gens[rows, spanning] is nonsingular.
        let mut rows = echelon.pivots();
        rows.sort_unstable();
        let r = rows.len();
        if r == 0 {
            let stats = ModularStats::new(&BigInt::one());
            return Lattice { ambient, echelon, rows, hnf: IntMatrix::zeros(0, 0), stats };
        }
        let all: Vec<usize> = (0..gens.cols()).collect();
        let projected = gens.select(&rows, &all);
        let modulus = determinant(&projected.select(&(0..r).collect::<Vec<_>>(), &spanning))
            .expect("square minor")
            .abs();
        debug_assert!(!modulus.is_zero());
        let mut stats = ModularStats::new(&modulus);
        let hnf = modular_hnf(&projected, &modulus, &mut stats);
        Lattice { ambient, echelon, rows, hnf, stats }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Coordinates the lattice is projected onto.
    pub fn coordinate_rows(&self) -> &[usize] {
        &self.rows
    }

    /// Hermite form of the projected lattice.
    pub fn projected_hnf(&self) -> &IntMatrix {
        &self.hnf
    }

    pub fn stats(&self) -> &ModularStats {
        &self.stats
    }

    /// Index of the projected lattice in `Z^rank`: the product of the Hermite
    /// diagonal. For a full-rank lattice this is `|Z^m / L|`.
    pub fn projected_index(&self) -> BigInt {
        (0..self.rank()).map(|i| self.hnf[(i, i)].clone()).product()
    }

    fn check_dim(&self, v: &[BigInt]) -> Result<()> {
        if v.len() == self.ambient {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.ambient, found: v.len() })
        }
    }

    pub fn in_rational_span(&self, v: &[BigInt]) -> Result<bool> {
        self.check_dim(v)?;
        Ok(self.echelon.reduce(v).iter().all(Zero::is_zero))
    }

    /// Coefficients of `v` in the projected Hermite basis (rational in general).
    fn hermite_coefficients(&self, v: &[BigInt]) -> Vec<BigRational> {
        let r = self.rank();
        let mut residual: Vec<BigRational> =
            self.rows.iter().map(|&i| BigRational::from_integer(v[i].clone())).collect();
        let mut coeffs = Vec::with_capacity(r);
        for i in 0..r {
            let c = &residual[i] / BigRational::from_integer(self.hnf[(i, i)].clone());
            for (t, res) in residual.iter_mut().enumerate().skip(i) {
                *res -= &c * BigRational::from_integer(self.hnf[(t, i)].clone());
            }
            coeffs.push(c);
        }
        coeffs
    }

    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        if !self.in_rational_span(v)? {
            return Ok(false);
        }
        let r = self.rank();
        let mut residual: IntVector = self.rows.iter().map(|&i| v[i].clone()).collect();
        for i in 0..r {
            let (q, rem) = residual[i].div_rem(&self.hnf[(i, i)]);
            if !rem.is_zero() {
                return Ok(false);
            }
            for (t, res) in residual.iter_mut().enumerate().skip(i) {
                *res -= &q * &self.hnf[(t, i)];
            }
        }
        Ok(true)
    }

    /// Least `m >= 1` with `m * v` in the lattice, or `None` if no multiple is.
    pub fn order_of(&self, v: &[BigInt]) -> Result<Option<BigInt>> {
        if !self.in_rational_span(v)? {
            return Ok(None);
        }
        let m = self
            .hermite_coefficients(v)
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        Ok(Some(m))
    }

    /// Same lattice, decided by comparing Hermite forms on common coordinates.
    pub fn equals(&self, other: &Lattice, other_gens: &IntMatrix) -> bool {
        if self.ambient != other.ambient || self.rank() != other.rank() {
            return false;
        }
        // Equal rational spans: every generator of the other lies in ours.
        if !(0..other_gens.cols()).all(|j| self.in_rational_span(&other_gens.column(j)).unwrap_or(false)) {
            return false;
        }
        let all: Vec<usize> = (0..other_gens.cols()).collect();
        let projected = Lattice::from_generators(&other_gens.select(&self.rows, &all));
        projected.hnf == self.hnf
    }
}

/// A basis of a lattice: an `m x k` matrix of full column rank.
#[derive(Clone, Debug)]
pub struct LatticeBasis {
    basis: IntMatrix,
    lattice: Lattice,
}

impl LatticeBasis {
    pub fn new(basis: IntMatrix) -> Result<Self> {
        let lattice = Lattice::from_generators(&basis);
        if lattice.rank() != basis.cols() {
            return Err(Error::RankDeficient);
        }
        Ok(LatticeBasis { basis, lattice })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        self.lattice.contains(v)
    }
}

/// Whether `v` is an integer combination of the columns of `gens`.
pub fn lattice_contains(gens: &IntMatrix, v: &[BigInt]) -> Result<bool> {
    Lattice::from_generators(gens).contains(v)
}

/// Whether two generating sets span the same integer lattice.
pub fn lattice_equal(a: &IntMatrix, b: &IntMatrix) -> Result<bool> {
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch { expected: a.rows(), found: b.rows() });
    }
    let la = Lattice::from_generators(a);
    let lb = Lattice::from_generators(b);
    Ok(la.equals(&lb, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::int_vector;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64(rows)
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(&m(&[vec![2, -1], vec![-1, 2]])).unwrap(), BigInt::from(3));
        assert_eq!(determinant(&IntMatrix::identity(3)).unwrap(), BigInt::one());
        assert_eq!(determinant(&m(&[vec![2]])).unwrap(), BigInt::from(2));
        assert_eq!(determinant(&m(&[vec![0, 1], vec![1, 0]])).unwrap(), BigInt::from(-1));
        assert_eq!(determinant(&m(&[vec![1, 2], vec![2, 4]])).unwrap(), BigInt::zero());
        assert!(matches!(determinant(&m(&[vec![1, 2]])), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn ext_gcd_signs() {
        for (a, b) in [(0, 5), (5, 0), (-4, 6), (12, -18), (0, -3), (7, 7)] {
            let (a, b) = (BigInt::from(a), BigInt::from(b));
            let (g, x, y) = ext_gcd(&a, &b);
            assert!(!g.is_negative());
            assert_eq!(&x * &a + &y * &b, g);
            assert_eq!(g, a.gcd(&b));
        }
    }

    #[test]
    fn hnf_examples() {
        assert_eq!(hermite_normal_form(&IntMatrix::identity(3)).unwrap().h, IntMatrix::identity(3));
        let a = m(&[vec![2, 0], vec![1, 3]]);
        assert_eq!(hermite_normal_form(&a).unwrap().h, a);
        let hf = hermite_normal_form(&m(&[vec![0, 1], vec![-3, 0]])).unwrap();
        assert_eq!(hf.h, m(&[vec![1, 0], vec![0, 3]]));
        assert_eq!(hf.det, BigInt::from(3));
        assert_eq!(hermite_normal_form(&m(&[vec![1, 2], vec![2, 4]])), Err(Error::SingularMatrix));
    }

    #[test]
    fn smith_examples() {
        let s = smith_normal_form(&m(&[vec![2, -1], vec![-1, 2]]));
        assert_eq!(s.factors, int_vector(&[1, 3]));
        assert_eq!(smith_normal_form(&IntMatrix::identity(3)).factors, int_vector(&[1, 1, 1]));
        assert_eq!(smith_normal_form(&m(&[vec![2, 0], vec![0, 2]])).factors, int_vector(&[2, 2]));
        let s = smith_normal_form(&m(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]));
        assert_eq!(s.factors, int_vector(&[2, 6, 12]));
        let s = smith_normal_form(&m(&[vec![1, 2], vec![2, 4]]));
        assert_eq!((s.rank, s.factors), (1, int_vector(&[1])));
    }

    #[test]
    fn contains_examples() {
        assert!(lattice_contains(&m(&[vec![2]]), &int_vector(&[4])).unwrap());
        assert!(!lattice_contains(&m(&[vec![2]]), &int_vector(&[3])).unwrap());
        assert!(!lattice_contains(&m(&[vec![2], vec![-2]]), &int_vector(&[1, -1])).unwrap());
        assert!(lattice_contains(&m(&[vec![2], vec![-2]]), &int_vector(&[-4, 4])).unwrap());
        // Outside the rational span.
        assert!(!lattice_contains(&m(&[vec![2], vec![-2]]), &int_vector(&[2, 2])).unwrap());
        assert!(matches!(
            lattice_contains(&m(&[vec![2]]), &int_vector(&[1, 1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn equal_examples() {
        let id = IntMatrix::identity(2);
        assert!(lattice_equal(&id, &id).unwrap());
        let two = m(&[vec![2, 0], vec![0, 2]]);
        let skew = m(&[vec![2, 0], vec![2, 2]]);
        assert!(lattice_equal(&two, &skew).unwrap());
        assert!(!lattice_equal(&two, &id).unwrap());
        // Dependent generators of the same rank-one lattice.
        let a = m(&[vec![2, 4, 6], vec![-2, -4, -6]]);
        let b = m(&[vec![2], vec![-2]]);
        assert!(lattice_equal(&a, &b).unwrap());
        assert!(!lattice_equal(&a, &m(&[vec![4], vec![-4]])).unwrap());
    }

    #[test]
    fn order_of_examples() {
        let l = Lattice::from_generators(&m(&[vec![2]]));
        assert_eq!(l.order_of(&int_vector(&[3])).unwrap(), Some(BigInt::from(2)));
        assert_eq!(l.order_of(&int_vector(&[4])).unwrap(), Some(BigInt::one()));
        let l = Lattice::from_generators(&m(&[vec![2], vec![-2]]));
        assert_eq!(l.order_of(&int_vector(&[1, 1])).unwrap(), None);
        assert_eq!(l.order_of(&int_vector(&[3, -3])).unwrap(), Some(BigInt::from(2)));
    }

    #[test]
    fn solve_rational_basic() {
        let x = solve_rational(&m(&[vec![2, 1], vec![1, 3]]), &int_vector(&[1, 2])).unwrap();
        assert_eq!(x[0], BigRational::new(BigInt::from(1), BigInt::from(5)));
        assert_eq!(x[1], BigRational::new(BigInt::from(3), BigInt::from(5)));
    }

    #[test]
    fn rank_of_dependent_columns() {
        assert_eq!(rank(&m(&[vec![1, 2, 3], vec![2, 4, 6]])), 1);
        assert_eq!(rank(&m(&[vec![1, 0, -1], vec![-1, 1, 0], vec![0, -1, 1]])), 2);
    }
}
