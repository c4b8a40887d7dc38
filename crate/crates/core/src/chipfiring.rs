//! Chip-firing dynamics and the halting problem.
//!
//! A vertex `v` is active for `σ` when `σ(v) >= d_v`. Firing `v` subtracts
//! column `v` of the Laplacian, which conserves the chip total. Negative
//! entries are holes; a vertex holding a hole is never active.

use std::collections::VecDeque;
use std::ops::Deref;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::DirectedMultigraph;
use crate::invariants::{pham_index, period_vector};
use crate::matrix::{int_vector, IntVector};

/// Firing counts per vertex (an odometer when produced by a legal run).
pub type FiringVector = IntVector;

/// A chip configuration on every vertex, sink included.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChipConfig(pub IntVector);

/// A configuration on the nonsink vertices, in increasing vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sandpile(pub IntVector);

impl ChipConfig {
    pub fn from_i64(values: &[i64]) -> Self {
        ChipConfig(int_vector(values))
    }

    pub fn total(&self) -> BigInt {
        self.0.iter().sum()
    }

    /// Restriction to the nonsink vertices.
    pub fn restrict(&self, sink: usize) -> Sandpile {
        Sandpile(self.0.iter().enumerate().filter(|&(v, _)| v != sink).map(|(_, x)| x.clone()).collect())
    }
}

impl Sandpile {
    pub fn from_i64(values: &[i64]) -> Self {
        Sandpile(int_vector(values))
    }

    pub fn total(&self) -> BigInt {
        self.0.iter().sum()
    }

    /// Extension to all `n = len + 1` vertices whose chip total is `total`;
    /// the sink takes up the difference.
    pub fn extend(&self, sink: usize, total: &BigInt) -> ChipConfig {
        let mut values = self.0.clone();
        values.insert(sink, total - self.total());
        ChipConfig(values)
    }
}

impl Deref for ChipConfig {
    type Target = [BigInt];

    fn deref(&self) -> &[BigInt] {
        &self.0
    }
}

impl Deref for Sandpile {
    type Target = [BigInt];

    fn deref(&self) -> &[BigInt] {
        &self.0
    }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// `σ_max(v) = d_v - 1`, the largest stable configuration.
pub fn max_stable(g: &DirectedMultigraph) -> ChipConfig {
    ChipConfig(g.outdegrees().iter().map(|d| d - 1).collect())
}

pub fn is_active(g: &DirectedMultigraph, sigma: &[BigInt], v: usize) -> bool {
    &sigma[v] >= g.outdegree(v)
}

pub fn is_stable(g: &DirectedMultigraph, sigma: &ChipConfig) -> bool {
    sigma.len() == g.n() && (0..g.n()).all(|v| !is_active(g, sigma, v))
}

/// `σ - Δδ_v`. Legality is not checked.
pub fn fire(g: &DirectedMultigraph, sigma: &ChipConfig, v: usize) -> Result<ChipConfig> {
    check_len(g.n(), sigma.len())?;
    g.check_vertex(v)?;
    let col = g.laplacian_column(v);
    Ok(ChipConfig(sigma.iter().zip(&col).map(|(s, c)| s - c).collect()))
}

/// `σ - Δx` for any integer vector `x`.
pub fn apply_firing_vector(g: &DirectedMultigraph, sigma: &ChipConfig, x: &[BigInt]) -> Result<ChipConfig> {
    check_len(g.n(), sigma.len())?;
    check_len(g.n(), x.len())?;
    let dx = g.laplacian().mul_vec(x)?;
    Ok(ChipConfig(sigma.iter().zip(&dx).map(|(s, d)| s - d).collect()))
}

/// Least-action check: `x >= 0` and `σ - Δx` is stable. By the least action
/// principle such an `x` exists iff `σ` stabilizes.
pub fn verify_halting_certificate(g: &DirectedMultigraph, sigma: &ChipConfig, x: &[BigInt]) -> bool {
    if x.iter().any(Signed::is_negative) {
        return false;
    }
    match apply_firing_vector(g, sigma, x) {
        Ok(out) => is_stable(g, &out),
        Err(_) => false,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HaltStatus {
    Halts,
    Diverges,
    Unknown,
}

/// Outcome of [`HaltingDecider::run`].
///
/// `odometer` counts legal firings performed. When `Halts` it is a
/// least-action certificate and `config` is the stable result; when
/// `Diverges` it dominates `threshold` (the primitive period vector)
/// pointwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HaltingVerdict {
    pub status: HaltStatus,
    pub odometer: FiringVector,
    pub config: ChipConfig,
    pub threshold: IntVector,
    pub steps: u64,
}

impl HaltingVerdict {
    pub fn certificate(&self) -> Option<&FiringVector> {
        (self.status == HaltStatus::Halts).then_some(&self.odometer)
    }

    /// True when every vertex fired at least its period-vector count.
    pub fn reached_threshold(&self) -> bool {
        self.odometer.iter().zip(&self.threshold).all(|(x, p)| x >= p)
    }
}

/// Legal-firing simulation with the period-vector divergence cutoff.
///
/// Among active vertices the least-fired one fires next (lowest index on
/// ties), so in any infinite run every vertex's count grows without bound and
/// the cutoff is eventually met.
#[derive(Clone, Debug)]
pub struct HaltingDecider<'g> {
    graph: &'g DirectedMultigraph,
    period: IntVector,
    step_cap: Option<u64>,
    out_edges: Vec<Vec<(usize, BigInt)>>,
}

impl<'g> HaltingDecider<'g> {
    pub fn new(graph: &'g DirectedMultigraph) -> Self {
        Self::with_period(graph, period_vector(graph))
    }

    /// Reuses a period vector computed elsewhere. It must be the primitive
    /// period vector of `graph`.
    pub fn with_period(graph: &'g DirectedMultigraph, period: IntVector) -> Self {
        assert_eq!(period.len(), graph.n());
        let n = graph.n();
        let out_edges = (0..n)
            .map(|v| {
                (0..n)
                    .filter(|&w| w != v && !graph.multiplicity(v, w).is_zero())
                    .map(|w| (w, graph.multiplicity(v, w).clone()))
                    .collect()
            })
            .collect();
        HaltingDecider { graph, period, step_cap: None, out_edges }
    }

    pub fn step_cap(mut self, cap: Option<u64>) -> Self {
        self.step_cap = cap;
        self
    }

    pub fn period(&self) -> &[BigInt] {
        &self.period
    }

    pub fn run(&self, sigma: &ChipConfig) -> Result<HaltingVerdict> {
        self.run_traced(sigma, |_, _, _| {})
    }

    /// As [`run`](Self::run), calling `observer(step, vertex, config)` after
    /// every firing.
    pub fn run_traced(
        &self,
        sigma: &ChipConfig,
        mut observer: impl FnMut(u64, usize, &ChipConfig),
    ) -> Result<HaltingVerdict> {
        let g = self.graph;
        let n = g.n();
        check_len(n, sigma.len())?;
        let mut config = sigma.clone();
        let mut odometer = vec![BigInt::zero(); n];
        let mut below_threshold = n;
        let mut steps = 0u64;
        let status = loop {
            if below_threshold == 0 {
                break HaltStatus::Diverges;
            }
            let next = (0..n)
                .filter(|&v| is_active(g, &config, v))
                .min_by(|&a, &b| odometer[a].cmp(&odometer[b]).then(a.cmp(&b)));
            let Some(v) = next else {
                break HaltStatus::Halts;
            };
            if self.step_cap.is_some_and(|cap| steps >= cap) {
                break HaltStatus::Unknown;
            }
            config.0[v] -= g.outdegree(v) - g.multiplicity(v, v);
            for (w, m) in &self.out_edges[v] {
                config.0[*w] += m;
            }
            odometer[v] += 1;
            if odometer[v] == self.period[v] {
                below_threshold -= 1;
            }
            steps += 1;
            observer(steps, v, &config);
        };
        Ok(HaltingVerdict { status, odometer, config, threshold: self.period.clone(), steps })
    }
}

/// Decides whether `σ` stabilizes by simulation. With `step_cap = None` the
/// answer is never `Unknown`, but the run may take time exponential in the
/// input size.
pub fn decide_halting(g: &DirectedMultigraph, sigma: &ChipConfig, step_cap: Option<u64>) -> Result<HaltingVerdict> {
    HaltingDecider::new(g).step_cap(step_cap).run(sigma)
}

/// Constant-work decision valid on coEulerian graphs: `σ` stabilizes iff
/// `|σ| <= #E - #V`. The caller is responsible for the coEulerian check.
pub fn decide_halting_coeulerian(g: &DirectedMultigraph, sigma: &ChipConfig) -> bool {
    debug_assert_eq!(sigma.len(), g.n());
    sigma.total() <= g.excess()
}

/// [`decide_halting_coeulerian`] guarded by a Pham index computation.
pub fn decide_halting_coeulerian_checked(g: &DirectedMultigraph, sigma: &ChipConfig) -> Result<bool> {
    check_len(g.n(), sigma.len())?;
    let m = pham_index(g);
    if !m.is_one() {
        return Err(Error::NotCoEulerian(m.to_string()));
    }
    Ok(decide_halting_coeulerian(g, sigma))
}

/// Result of stabilizing a sandpile with a sink.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stabilization {
    pub stable: Sandpile,
    /// Firing counts of the nonsink vertices, in sandpile order.
    pub odometer: FiringVector,
    pub grains_to_sink: BigInt,
}

/// Stabilizes `η` on the nonsink vertices; the sink absorbs grains and never
/// fires. Active vertices are processed from a FIFO worklist, each firing as
/// many times in a row as is legal.
pub fn stabilize_with_sink(g: &DirectedMultigraph, sink: usize, eta: &Sandpile) -> Result<Stabilization> {
    g.check_vertex(sink)?;
    let n = g.n();
    check_len(n - 1, eta.len())?;
    let mut config = eta.extend(sink, &eta.total()).0;
    let mut odometer = vec![BigInt::zero(); n];
    let mut queued = vec![false; n];
    let mut queue = VecDeque::new();
    for v in (0..n).filter(|&v| v != sink && is_active(g, &config, v)) {
        queued[v] = true;
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        queued[v] = false;
        let d = g.outdegree(v);
        if &config[v] < d {
            continue;
        }
        // A nonsink vertex of a strongly connected graph on n >= 2 vertices
        // sends at least one chip elsewhere, so this is positive.
        let net_loss = d - g.multiplicity(v, v);
        let times = (&config[v] - d).div_floor(&net_loss) + 1;
        config[v] -= &times * &net_loss;
        odometer[v] += &times;
        for w in (0..n).filter(|&w| w != v) {
            let m = g.multiplicity(v, w);
            if m.is_zero() {
                continue;
            }
            config[w] += &times * m;
            if w != sink && !queued[w] && is_active(g, &config, w) {
                queued[w] = true;
                queue.push_back(w);
            }
        }
    }
    let grains_to_sink = config[sink].clone();
    let stable = ChipConfig(config).restrict(sink);
    debug_assert_eq!(stable.total() + &grains_to_sink, eta.total());
    odometer.remove(sink);
    Ok(Stabilization { stable, odometer, grains_to_sink })
}
