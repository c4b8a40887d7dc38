//! Independent reference implementations and test corpora.
//!
//! Everything here works on small `i64`/`i128` matrices and avoids the
//! library's linear algebra, so results can be compared against it.

#![allow(dead_code)]

use std::collections::HashSet;

use coeulerian::generate::random_strongly_connected;
use coeulerian::graph::is_strongly_connected;
use coeulerian::{DirectedMultigraph, IntMatrix};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

pub fn to_i64(m: &IntMatrix) -> Vec<Vec<i64>> {
    m.to_rows().iter().map(|r| r.iter().map(|x| x.to_i64().unwrap()).collect()).collect()
}

pub fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0] as i128;
    }
    let mut total = 0i128;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> =
            m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect()).collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        total += sign * m[0][j] as i128 * cofactor_det(&minor);
    }
    total
}

pub fn laplacian_i64(adj: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = adj.len();
    let mut lap = vec![vec![0i64; n]; n];
    for v in 0..n {
        let d: i64 = adj[v].iter().sum();
        lap[v][v] = d - adj[v][v];
        for w in 0..n {
            if w != v {
                lap[w][v] = -adj[v][w];
            }
        }
    }
    lap
}

/// Oriented spanning trees toward `root`, counted with edge multiplicity by
/// choosing one outgoing edge at every other vertex.
pub fn count_spanning_trees(adj: &[Vec<i64>], root: usize) -> i128 {
    let n = adj.len();
    let others: Vec<usize> = (0..n).filter(|&v| v != root).collect();
    let mut parent = vec![usize::MAX; n];
    fn rec(adj: &[Vec<i64>], root: usize, others: &[usize], k: usize, parent: &mut Vec<usize>) -> i128 {
        if k == others.len() {
            // Every vertex must reach the root by following parents.
            for &v in others {
                let mut x = v;
                let mut steps = 0;
                while x != root {
                    x = parent[x];
                    steps += 1;
                    if steps > adj.len() {
                        return 0;
                    }
                }
            }
            return 1;
        }
        let v = others[k];
        let mut total = 0;
        for w in 0..adj.len() {
            if w != v && adj[v][w] > 0 {
                parent[v] = w;
                total += adj[v][w] as i128 * rec(adj, root, others, k + 1, parent);
            }
        }
        total
    }
    rec(adj, root, &others, 0, &mut parent)
}

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Lower-triangular column Hermite form by plain integer column operations.
pub fn reference_hnf(a: &[Vec<i64>]) -> Vec<Vec<i128>> {
    let m = a.len();
    let mut h: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let col_op = |h: &mut Vec<Vec<i128>>, dst: usize, src: usize, q: i128| {
        for row in h.iter_mut() {
            row[dst] -= q * row[src];
        }
    };
    for i in 0..m {
        // Euclid across columns i..m in row i.
        loop {
            let nonzero: Vec<usize> = (i..m).filter(|&j| h[i][j] != 0).collect();
            if nonzero.len() <= 1 {
                break;
            }
            let p = *nonzero.iter().min_by_key(|&&j| h[i][j].abs()).unwrap();
            for &j in &nonzero {
                if j != p {
                    let q = h[i][j].div_euclid(h[i][p]);
                    col_op(&mut h, j, p, q);
                }
            }
        }
        let p = (i..m).find(|&j| h[i][j] != 0).expect("nonsingular");
        for row in h.iter_mut() {
            row.swap(i, p);
        }
        if h[i][i] < 0 {
            for row in h.iter_mut() {
                row[i] = -row[i];
            }
        }
        for j in 0..i {
            let q = h[i][j].div_euclid(h[i][i]);
            col_op(&mut h, j, i, q);
        }
    }
    h
}

/// Order and exponent of `Z^m / AZ^m` for small nonsingular `A`, by
/// enumerating the box `[0, |det A|)^m` and testing membership with the
/// adjugate (`v ∈ AZ^m` iff `adj(A) v ≡ 0 mod det A`).
pub fn brute_cokernel(a: &[Vec<i64>]) -> (i128, i128) {
    let m = a.len();
    let det = cofactor_det(a);
    assert!(det != 0);
    let d = det.abs();
    let adj: Vec<Vec<i128>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let minor: Vec<Vec<i64>> = a
                        .iter()
                        .enumerate()
                        .filter(|&(r, _)| r != j)
                        .map(|(_, row)| row.iter().enumerate().filter(|&(c, _)| c != i).map(|(_, &x)| x).collect())
                        .collect();
                    let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                    sign * cofactor_det(&minor)
                })
                .collect()
        })
        .collect();
    let member = |v: &[i128]| (0..m).all(|i| (0..m).map(|j| adj[i][j] * v[j]).sum::<i128>() % det == 0);
    let mut in_lattice = 0i128;
    let mut exponent = 1i128;
    let mut v = vec![0i128; m];
    loop {
        if member(&v) {
            in_lattice += 1;
        }
        let mut k = 1;
        while !member(&v.iter().map(|x| x * k).collect::<Vec<_>>()) {
            k += 1;
        }
        exponent = exponent / gcd(exponent, k) * k;
        let mut i = 0;
        while i < m && v[i] == d - 1 {
            v[i] = 0;
            i += 1;
        }
        if i == m {
            break;
        }
        v[i] += 1;
    }
    (d.pow(m as u32) / in_lattice, exponent)
}

/// All `k`-subsets of `0..n`.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Index of the lattice spanned by the columns of an `r x k` matrix of rank
/// `r`: the gcd of its `r x r` minors.
pub fn index_by_minors(m: &[Vec<i64>]) -> i128 {
    let r = m.len();
    let k = m[0].len();
    subsets(k, r).iter().fold(0, |g, cols| {
        let minor: Vec<Vec<i64>> = m.iter().map(|row| cols.iter().map(|&c| row[c]).collect()).collect();
        gcd(g, cofactor_det(&minor))
    })
}

/// Decides halting by firing the lowest-index active vertex and watching for
/// a repeated configuration. Entries never drop below `min(σ(v), 0)` and the
/// total is fixed, so the state space is finite.
pub fn halts_by_state_search(adj: &[Vec<i64>], sigma: &[i64]) -> bool {
    let n = adj.len();
    let deg: Vec<i64> = adj.iter().map(|r| r.iter().sum()).collect();
    let mut c = sigma.to_vec();
    let mut seen = HashSet::new();
    loop {
        let Some(v) = (0..n).find(|&v| c[v] >= deg[v]) else {
            return true;
        };
        if !seen.insert(c.clone()) {
            return false;
        }
        c[v] -= deg[v];
        for w in 0..n {
            c[w] += adj[v][w];
        }
    }
}

/// Least action search: is there `0 <= x <= bound` with `σ - Δx` stable?
pub fn least_action_search(adj: &[Vec<i64>], sigma: &[i64], bound: &[i64]) -> Option<Vec<i64>> {
    let n = adj.len();
    let lap = laplacian_i64(adj);
    let deg: Vec<i64> = adj.iter().map(|r| r.iter().sum()).collect();
    let mut x = vec![0i64; n];
    loop {
        if (0..n).all(|v| sigma[v] - (0..n).map(|w| lap[v][w] * x[w]).sum::<i64>() < deg[v]) {
            return Some(x);
        }
        let mut i = 0;
        while i < n && x[i] == bound[i] {
            x[i] = 0;
            i += 1;
        }
        if i == n {
            return None;
        }
        x[i] += 1;
    }
}

fn strongly_connected_i64(adj: &[Vec<i64>]) -> bool {
    let n = adj.len();
    let reach = |forward: bool| {
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in 0..n {
                let m = if forward { adj[v][w] } else { adj[w][v] };
                if m > 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    };
    reach(true) && reach(false)
}

/// All adjacency matrices on `n` vertices with entries in `0..=max`,
/// optionally without loops, that are strongly connected.
pub fn exhaustive_graphs(n: usize, max: i64, loops: bool) -> Vec<DirectedMultigraph> {
    let cells: Vec<(usize, usize)> =
        (0..n).flat_map(|v| (0..n).map(move |w| (v, w))).filter(|&(v, w)| loops || v != w).collect();
    let mut out = Vec::new();
    let mut entries = vec![0i64; cells.len()];
    loop {
        let mut adj = vec![vec![0i64; n]; n];
        for (&(v, w), &x) in cells.iter().zip(&entries) {
            adj[v][w] = x;
        }
        if adj.iter().all(|r| r.iter().any(|&x| x > 0)) && strongly_connected_i64(&adj) {
            let m = IntMatrix::from_i64(&adj);
            debug_assert!(is_strongly_connected(&m));
            out.push(DirectedMultigraph::from_adjacency(m).unwrap());
        }
        let mut i = 0;
        while i < entries.len() && entries[i] == max {
            entries[i] = 0;
            i += 1;
        }
        if i == entries.len() {
            return out;
        }
        entries[i] += 1;
    }
}

/// Every strongly connected multigraph with `n <= 3`, multiplicities `<= 2`
/// (loops included), plus seeded random graphs with `2 <= n <= 5`.
pub fn theorem_corpus(random: usize) -> Vec<DirectedMultigraph> {
    let mut corpus: Vec<DirectedMultigraph> = (1..=3).flat_map(|n| exhaustive_graphs(n, 2, true)).collect();
    corpus.extend(random_graphs(random, 0xC0E1));
    corpus
}

pub fn random_graphs(count: usize, base_seed: u64) -> Vec<DirectedMultigraph> {
    (0..count as u64)
        .map(|i| {
            let n = 2 + (i % 4) as usize;
            let max = 1 + (i / 4 % 3) as u32;
            random_strongly_connected(n, max, base_seed + i)
        })
        .collect()
}

/// Path `0 - 1 - ... - n` with two edges rightward and three leftward.
pub fn fig1(n: usize) -> DirectedMultigraph {
    let mut rows = vec![vec![0i64; n + 1]; n + 1];
    for v in 0..n {
        rows[v][v + 1] = 2;
        rows[v + 1][v] = 3;
    }
    DirectedMultigraph::from_i64(&rows).unwrap()
}

/// Nonnegative vectors of length `n` with entry sum `total`.
pub fn compositions(n: usize, total: i64) -> Vec<Vec<i64>> {
    if n == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|first| {
            compositions(n - 1, total - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Nonnegative rank by enumerating `τ >= 0` with `|τ| = |σ|` and testing
/// `σ - τ ∈ L` on the top `n-1` coordinates with the adjugate of `A`.
pub fn nonneg_rank_by_tau(basis: &[Vec<i64>], sigma: &[i64]) -> bool {
    let n = basis.len();
    let t: i64 = sigma.iter().sum();
    if t < 0 {
        return false;
    }
    let a: Vec<Vec<i64>> = basis[..n - 1].to_vec();
    let m = n - 1;
    let det = cofactor_det(&a);
    let adj: Vec<Vec<i128>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let minor: Vec<Vec<i64>> = a
                        .iter()
                        .enumerate()
                        .filter(|&(r, _)| r != j)
                        .map(|(_, row)| row.iter().enumerate().filter(|&(c, _)| c != i).map(|(_, &x)| x).collect())
                        .collect();
                    if m == 1 {
                        1
                    } else {
                        (if (i + j) % 2 == 0 { 1 } else { -1 }) * cofactor_det(&minor)
                    }
                })
                .collect()
        })
        .collect();
    compositions(n, t).iter().any(|tau| {
        let diff: Vec<i128> = (0..m).map(|i| (sigma[i] - tau[i]) as i128).collect();
        (0..m).all(|i| (0..m).map(|j| adj[i][j] * diff[j]).sum::<i128>() % det == 0)
    })
}
