//! The sandpile group of a sink and its recurrent representatives.
//!
//! `K(G,s) = Z^{n-1} / Δ_s Z^{n-1}` is realised by the recurrent sandpiles
//! under `η ⊕ ξ = (η + ξ)°`. The recurrent identity is found as a power of
//! the maximal stable sandpile, which is recurrent and whose order divides
//! the group order `κ(s) = det Δ_s`.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::chipfiring::{max_stable, stabilize_with_sink, ChipConfig, Sandpile};
use crate::error::{Error, Result};
use crate::graph::DirectedMultigraph;
use crate::invariants::period_vector;
use crate::linalg::{determinant, lattice_contains, smith_normal_form, Lattice};
use crate::matrix::{IntMatrix, IntVector};

/// Group orders above this are handled algebraically instead of by walking
/// orbits or enumerating recurrents.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 10_000;

/// Structure of `K(G,s)` and the class of `β_s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SandpileGroupDesc {
    pub sink: usize,
    /// `κ(s) = det Δ_s`.
    pub order: BigInt,
    /// Smith invariant factors of `Δ_s` (including ones).
    pub invariant_factors: Vec<BigInt>,
    /// `β_s(v) = d_sv`: what the nonsink vertices receive when the sink fires.
    pub beta: Sandpile,
    /// Order of `β_s` in `K(G,s)`; equals `κ(s)/M`.
    pub order_of_beta: BigInt,
}

impl SandpileGroupDesc {
    /// Whether `β_s` generates the whole group.
    pub fn beta_generates(&self) -> bool {
        self.order_of_beta == self.order
    }
}

/// A sandpile group with its identity precomputed.
#[derive(Clone, Debug)]
pub struct SandpileGroup<'g> {
    graph: &'g DirectedMultigraph,
    sink: usize,
    order: BigInt,
    reduced: IntMatrix,
    identity: Sandpile,
    beta: Sandpile,
    enumeration_bound: u64,
}

impl<'g> SandpileGroup<'g> {
    pub fn new(graph: &'g DirectedMultigraph, sink: usize) -> Result<Self> {
        let reduced = graph.reduced_laplacian(sink)?;
        let order = determinant(&reduced)?;
        debug_assert!(order.is_positive());
        let beta = Sandpile(
            (0..graph.n()).filter(|&v| v != sink).map(|v| graph.multiplicity(sink, v).clone()).collect(),
        );
        let mut group = SandpileGroup {
            graph,
            sink,
            order,
            reduced,
            identity: Sandpile(vec![BigInt::zero(); graph.n() - 1]),
            beta,
            enumeration_bound: DEFAULT_ENUMERATION_BOUND,
        };
        let smax = max_stable(graph).restrict(sink);
        group.identity = group.power(&smax, &group.order.clone());
        debug_assert!(lattice_contains(&group.reduced, &group.identity).unwrap());
        Ok(group)
    }

    pub fn with_enumeration_bound(mut self, bound: u64) -> Self {
        self.enumeration_bound = bound;
        self
    }

    pub fn graph(&self) -> &DirectedMultigraph {
        self.graph
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn order(&self) -> &BigInt {
        &self.order
    }

    pub fn reduced_laplacian(&self) -> &IntMatrix {
        &self.reduced
    }

    /// The recurrent identity `e_s`.
    pub fn identity(&self) -> &Sandpile {
        &self.identity
    }

    pub fn beta(&self) -> &Sandpile {
        &self.beta
    }

    pub fn stabilize(&self, eta: &Sandpile) -> Sandpile {
        stabilize_with_sink(self.graph, self.sink, eta).expect("sandpile length matches").stable
    }

    fn check_len(&self, eta: &Sandpile) -> Result<()> {
        if eta.len() == self.graph.n() - 1 {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.graph.n() - 1, found: eta.len() })
        }
    }

    /// `(η + ξ)°` without checking recurrence.
    pub fn combine(&self, eta: &Sandpile, xi: &Sandpile) -> Sandpile {
        self.stabilize(&Sandpile(eta.iter().zip(xi.iter()).map(|(a, b)| a + b).collect()))
    }

    /// `η ⊕ η ⊕ ... ⊕ η` (`k >= 1` copies) by binary doubling.
    fn power(&self, eta: &Sandpile, k: &BigInt) -> Sandpile {
        debug_assert!(k.is_positive());
        let mut acc: Option<Sandpile> = None;
        let mut base = eta.clone();
        let mut k = k.clone();
        loop {
            if k.is_odd() {
                acc = Some(match acc {
                    Some(a) => self.combine(&a, &base),
                    None => base.clone(),
                });
            }
            k >>= 1u32;
            if k.is_zero() {
                break;
            }
            base = self.combine(&base, &base);
        }
        acc.expect("k >= 1")
    }

    pub fn is_stable(&self, eta: &Sandpile) -> bool {
        (0..self.graph.n())
            .filter(|&v| v != self.sink)
            .zip(eta.iter())
            .all(|(v, x)| x < self.graph.outdegree(v))
    }

    /// For stable `η`: whether `(η + e_s)° = η`.
    pub fn is_recurrent(&self, eta: &Sandpile) -> Result<bool> {
        self.check_len(eta)?;
        if !self.is_stable(eta) {
            return Err(Error::NotStable);
        }
        if eta.iter().any(Signed::is_negative) {
            return Ok(false);
        }
        Ok(&self.combine(eta, &self.identity) == eta)
    }

    /// The recurrent sandpile equivalent to `η`.
    ///
    /// Negative entries are first lifted with a multiple of `κ(s)·1`, which
    /// lies in `Δ_s Z^{n-1}`, so that `η + e_s` is nonnegative.
    pub fn recurrent_rep(&self, eta: &Sandpile) -> Result<Sandpile> {
        self.check_len(eta)?;
        let deficit = eta.iter().map(|x| -x).max().unwrap_or_default();
        let lifted = if deficit.is_positive() {
            let shift = deficit.div_ceil(&self.order) * &self.order;
            Sandpile(eta.iter().map(|x| x + &shift).collect())
        } else {
            eta.clone()
        };
        Ok(self.combine(&lifted, &self.identity))
    }

    /// `η ⊕ ξ` on recurrent sandpiles.
    pub fn add_rec(&self, eta: &Sandpile, xi: &Sandpile) -> Result<Sandpile> {
        for x in [eta, xi] {
            self.check_len(x)?;
            if !self.is_stable(x) || !self.is_recurrent(x)? {
                return Err(Error::NotRecurrent);
            }
        }
        Ok(self.combine(eta, xi))
    }

    /// `γ_s = (e_s + β_s)°`.
    pub fn gamma(&self) -> Sandpile {
        self.combine(&self.identity, &self.beta)
    }

    fn order_fits(&self) -> bool {
        self.order.to_u64().is_some_and(|k| k <= self.enumeration_bound)
    }

    /// Order of a recurrent `η` in `Rec(G,s)`: by repeated addition when the
    /// group is small, otherwise as the least `m` with `m η ∈ Δ_s Z^{n-1}`.
    pub fn element_order(&self, eta: &Sandpile) -> Result<BigInt> {
        self.check_len(eta)?;
        if self.order_fits() {
            let mut x = eta.clone();
            let mut k = BigInt::one();
            while x != self.identity {
                x = self.combine(&x, eta);
                k += 1;
                if k > self.order {
                    return Err(Error::NotRecurrent);
                }
            }
            Ok(k)
        } else {
            Ok(Lattice::from_generators(&self.reduced).order_of(eta)?.expect("full-rank lattice"))
        }
    }

    /// All recurrent sandpiles, found by closing `{e_s}` under adding a grain
    /// at each nonsink vertex and stabilizing.
    pub fn recurrents(&self) -> Result<Vec<Sandpile>> {
        if !self.order_fits() {
            return Err(Error::TooLarge(format!("group of order {} exceeds enumeration bound", self.order)));
        }
        let m = self.graph.n() - 1;
        let mut seen: HashSet<Sandpile> = HashSet::from([self.identity.clone()]);
        let mut out = vec![self.identity.clone()];
        let mut queue = VecDeque::from([self.identity.clone()]);
        while let Some(x) = queue.pop_front() {
            for v in 0..m {
                let mut y = x.clone();
                y.0[v] += 1;
                let y = self.stabilize(&y);
                if seen.insert(y.clone()) {
                    out.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        debug_assert_eq!(BigInt::from(out.len()), self.order);
        Ok(out)
    }

    /// Number of cosets of `⟨γ_s⟩` in `Rec(G,s)`: orbit counting when the
    /// group is small, otherwise `κ(s)/ord(γ_s)`.
    pub fn coset_count(&self) -> Result<BigInt> {
        let gamma = self.gamma();
        if !self.order_fits() {
            return Ok(&self.order / self.element_order(&gamma)?);
        }
        let mut unvisited: HashSet<Sandpile> = self.recurrents()?.into_iter().collect();
        let mut cosets = 0u64;
        while let Some(start) = unvisited.iter().next().cloned() {
            cosets += 1;
            let mut x = start;
            while unvisited.remove(&x) {
                x = self.combine(&x, &gamma);
            }
        }
        Ok(BigInt::from(cosets))
    }

    /// Whether `η ≡ ξ (mod Δ_s Z^{n-1} + Zβ_s)`.
    pub fn congruent_mod_beta(&self, eta: &Sandpile, xi: &Sandpile) -> Result<bool> {
        self.check_len(eta)?;
        self.check_len(xi)?;
        let gens = self.reduced.hconcat(&IntMatrix::from_columns(std::slice::from_ref(&self.beta.0))?)?;
        let diff: IntVector = eta.iter().zip(xi.iter()).map(|(a, b)| a - b).collect();
        lattice_contains(&gens, &diff)
    }

    /// Whether the recurrent representatives of `η` and `ξ` lie in the same
    /// coset of `⟨γ_s⟩`, by walking the `γ_s`-orbit of `ξ`'s representative.
    pub fn same_gamma_coset(&self, eta: &Sandpile, xi: &Sandpile) -> Result<bool> {
        let a = self.recurrent_rep(eta)?;
        let start = self.recurrent_rep(xi)?;
        let gamma = self.gamma();
        let mut x = start.clone();
        loop {
            if x == a {
                return Ok(true);
            }
            x = self.combine(&x, &gamma);
            if x == start {
                return Ok(false);
            }
        }
    }

    pub fn describe(&self) -> Result<SandpileGroupDesc> {
        let invariant_factors = smith_normal_form(&self.reduced).factors;
        debug_assert_eq!(invariant_factors.iter().product::<BigInt>(), self.order);
        let order_of_beta =
            Lattice::from_generators(&self.reduced).order_of(&self.beta)?.expect("full-rank lattice");
        assert_eq!(order_of_beta, period_vector(self.graph)[self.sink], "ord(β_s) must equal π(s)");
        Ok(SandpileGroupDesc {
            sink: self.sink,
            order: self.order.clone(),
            invariant_factors,
            beta: self.beta.clone(),
            order_of_beta,
        })
    }
}

pub fn group_structure(g: &DirectedMultigraph, sink: usize) -> Result<SandpileGroupDesc> {
    SandpileGroup::new(g, sink)?.describe()
}

pub fn identity(g: &DirectedMultigraph, sink: usize) -> Result<Sandpile> {
    Ok(SandpileGroup::new(g, sink)?.identity().clone())
}

pub fn recurrent_rep(g: &DirectedMultigraph, sink: usize, eta: &Sandpile) -> Result<Sandpile> {
    SandpileGroup::new(g, sink)?.recurrent_rep(eta)
}

pub fn is_recurrent(g: &DirectedMultigraph, sink: usize, eta: &Sandpile) -> Result<bool> {
    SandpileGroup::new(g, sink)?.is_recurrent(eta)
}

pub fn add_rec(g: &DirectedMultigraph, sink: usize, eta: &Sandpile, xi: &Sandpile) -> Result<Sandpile> {
    SandpileGroup::new(g, sink)?.add_rec(eta, xi)
}

pub fn gamma(g: &DirectedMultigraph, sink: usize) -> Result<Sandpile> {
    Ok(SandpileGroup::new(g, sink)?.gamma())
}

pub fn coset_count(g: &DirectedMultigraph, sink: usize) -> Result<BigInt> {
    SandpileGroup::new(g, sink)?.coset_count()
}

/// Whether `σ ≡ τ (mod ΔZ^n)` for configurations with equal totals.
pub fn same_class_total(g: &DirectedMultigraph, sigma: &ChipConfig, tau: &ChipConfig) -> Result<bool> {
    let (a, b) = (sigma.total(), tau.total());
    if a != b {
        return Err(Error::UnequalTotals(a.to_string(), b.to_string()));
    }
    if sigma.len() != g.n() || tau.len() != g.n() {
        return Err(Error::DimensionMismatch { expected: g.n(), found: sigma.len().min(tau.len()) });
    }
    let diff: IntVector = sigma.iter().zip(tau.iter()).map(|(x, y)| x - y).collect();
    lattice_contains(&g.laplacian(), &diff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chipfiring::fire;
    use crate::matrix::int_vector;

    fn g(rows: &[Vec<i64>]) -> DirectedMultigraph {
        DirectedMultigraph::from_i64(rows).unwrap()
    }

    fn triangle() -> DirectedMultigraph {
        g(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]])
    }

    fn three_cycle() -> DirectedMultigraph {
        g(&[vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]])
    }

    fn fig1() -> DirectedMultigraph {
        g(&[vec![0, 2], vec![3, 0]])
    }

    fn sp(v: &[i64]) -> Sandpile {
        Sandpile::from_i64(v)
    }

    #[test]
    fn structure_examples() {
        let d = group_structure(&triangle(), 2).unwrap();
        assert_eq!(d.order, BigInt::from(3));
        assert_eq!(d.invariant_factors, int_vector(&[1, 3]));
        assert_eq!(d.beta, sp(&[1, 1]));
        assert_eq!(d.order_of_beta, BigInt::one());

        let d = group_structure(&fig1(), 1).unwrap();
        assert_eq!(d.order, BigInt::from(2));
        assert_eq!(d.invariant_factors, int_vector(&[2]));
        assert_eq!(d.beta, sp(&[3]));
        assert_eq!(d.order_of_beta, BigInt::from(2));
        assert!(d.beta_generates());

        let d = group_structure(&three_cycle(), 0).unwrap();
        assert_eq!(d.order, BigInt::one());
        assert_eq!(d.order_of_beta, BigInt::one());
        assert_eq!(group_structure(&three_cycle(), 5), Err(Error::VertexOutOfRange { vertex: 5, n: 3 }));
    }

    #[test]
    fn identity_examples() {
        assert_eq!(identity(&triangle(), 2).unwrap(), sp(&[1, 1]));
        assert_eq!(identity(&three_cycle(), 0).unwrap(), sp(&[0, 0]));
        // Fig. 1, n = 1, sink 1: stable sandpiles are 0 and 1; the identity
        // is the even one that is idempotent.
        let f = fig1();
        let grp = SandpileGroup::new(&f, 1).unwrap();
        let e = grp.identity().clone();
        assert!(e[0].is_even());
        assert_eq!(grp.combine(&e, &e), e);
        assert_eq!(e, sp(&[0]));
    }

    #[test]
    fn recurrence_examples() {
        let t = triangle();
        assert!(is_recurrent(&t, 2, &sp(&[1, 1])).unwrap());
        assert!(!is_recurrent(&t, 2, &sp(&[0, 0])).unwrap());
        assert!(is_recurrent(&t, 2, &sp(&[1, 0])).unwrap());
        assert_eq!(is_recurrent(&t, 2, &sp(&[2, 0])), Err(Error::NotStable));
    }

    #[test]
    fn recurrent_rep_examples() {
        let t = triangle();
        let grp = SandpileGroup::new(&t, 2).unwrap();
        assert_eq!(grp.recurrent_rep(grp.identity()).unwrap(), sp(&[1, 1]));
        assert_eq!(grp.recurrent_rep(&sp(&[0, 0])).unwrap(), sp(&[1, 1]));
        let eta = sp(&[5, -7]);
        let moved = Sandpile(
            eta.iter().zip(grp.reduced_laplacian().mul_vec(&int_vector(&[2, -3])).unwrap()).map(|(a, b)| a + b).collect(),
        );
        assert_eq!(grp.recurrent_rep(&eta).unwrap(), grp.recurrent_rep(&moved).unwrap());
        assert!(grp.is_recurrent(&grp.recurrent_rep(&eta).unwrap()).unwrap());
    }

    #[test]
    fn add_rec_examples() {
        let t = triangle();
        assert_eq!(add_rec(&t, 2, &sp(&[1, 0]), &sp(&[0, 1])).unwrap(), sp(&[1, 1]));
        assert_eq!(add_rec(&t, 2, &sp(&[1, 0]), &sp(&[1, 1])).unwrap(), sp(&[1, 0]));
        assert_eq!(add_rec(&t, 2, &sp(&[0, 0]), &sp(&[1, 1])), Err(Error::NotRecurrent));
        let grp = SandpileGroup::new(&t, 2).unwrap();
        let smax = max_stable(&t).restrict(2);
        assert!(grp.element_order(&smax).unwrap().is_multiple_of(&BigInt::one()));
        assert!(grp.order().is_multiple_of(&grp.element_order(&smax).unwrap()));
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(&triangle(), 2).unwrap(), sp(&[1, 1]));
        assert_eq!(gamma(&three_cycle(), 0).unwrap(), sp(&[0, 0]));
        let f = fig1();
        let grp = SandpileGroup::new(&f, 1).unwrap();
        assert_eq!(grp.element_order(&grp.gamma()).unwrap(), BigInt::from(2));
    }

    #[test]
    fn coset_examples() {
        assert_eq!(coset_count(&triangle(), 2).unwrap(), BigInt::from(3));
        assert_eq!(coset_count(&fig1(), 0).unwrap(), BigInt::one());
        assert_eq!(coset_count(&three_cycle(), 1).unwrap(), BigInt::one());
        // Algebraic fallback agrees with orbit counting.
        let t = triangle();
        let grp = SandpileGroup::new(&t, 0).unwrap().with_enumeration_bound(1);
        assert_eq!(grp.coset_count().unwrap(), BigInt::from(3));
        assert!(matches!(grp.recurrents(), Err(Error::TooLarge(_))));
    }

    #[test]
    fn same_class_examples() {
        let t = triangle();
        let sigma = ChipConfig::from_i64(&[2, 1, 0]);
        assert!(same_class_total(&t, &sigma, &sigma).unwrap());
        assert!(same_class_total(&t, &sigma, &fire(&t, &sigma, 1).unwrap()).unwrap());
        assert!(!same_class_total(&t, &sigma, &ChipConfig::from_i64(&[1, 1, 1])).unwrap());
        assert!(matches!(
            same_class_total(&t, &sigma, &ChipConfig::from_i64(&[0, 0, 0])),
            Err(Error::UnequalTotals(..))
        ));
    }

    #[test]
    fn single_vertex_group_is_trivial() {
        let one = g(&[vec![2]]);
        let grp = SandpileGroup::new(&one, 0).unwrap();
        assert_eq!(grp.order(), &BigInt::one());
        assert_eq!(grp.identity(), &Sandpile(vec![]));
        assert_eq!(grp.coset_count().unwrap(), BigInt::one());
    }
}
