//! Independent reference computations used by the integration tests. None of
//! these call into the library's linear algebra or path enumeration.
#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::{One, Zero};
use pathhom::DiGraph;

/// Rank of a dense rational matrix by plain Gaussian elimination.
#[allow(clippy::needless_range_loop)]
pub fn dense_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let f = m[r][c].clone() / pivot.clone();
                for k in c..cols {
                    let t = m[rank][k].clone() * f.clone();
                    m[r][k] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Every tuple of `n + 1` vertices with no two consecutive entries equal.
pub fn regular_tuples(vertices: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..vertices).map(|v| vec![v]).collect();
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                let last = *p.last().unwrap();
                (0..vertices).filter(move |&v| v != last).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

fn allowed(g: &DiGraph, p: &[usize]) -> bool {
    p.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

/// `dim Ω_n` from scratch: allowed tuples whose boundary, projected onto the
/// regular tuples that are not allowed, vanishes.
pub fn brute_force_omega_dim(g: &DiGraph, n: usize) -> usize {
    let paths: Vec<Vec<usize>> = regular_tuples(g.vertex_count(), n)
        .into_iter()
        .filter(|p| allowed(g, p))
        .collect();
    if n == 0 {
        return paths.len();
    }
    let bad: Vec<Vec<usize>> = regular_tuples(g.vertex_count(), n - 1)
        .into_iter()
        .filter(|p| !allowed(g, p))
        .collect();
    let mut m = vec![vec![BigRational::zero(); paths.len()]; bad.len()];
    for (j, p) in paths.iter().enumerate() {
        for i in 0..=n {
            let mut q = p.clone();
            q.remove(i);
            if q.windows(2).any(|w| w[0] == w[1]) {
                continue;
            }
            if let Some(r) = bad.iter().position(|b| *b == q) {
                let s = if i % 2 == 0 { BigRational::one() } else { -BigRational::one() };
                m[r][j] += s;
            }
        }
    }
    paths.len() - dense_rank(m)
}

/// Weak components by union-find.
pub fn component_count(g: &DiGraph) -> usize {
    let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for (u, v) in g.edges() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    (0..g.vertex_count()).filter(|&v| find(&mut parent, v) == v).count()
}

/// Orientation `bits` of the cycle on `n` vertices: bit `i` set means the
/// edge between `i` and `i + 1` points backwards.
pub fn oriented_cycle(n: usize, bits: u32) -> DiGraph {
    let edges: Vec<_> = (0..n)
        .map(|i| {
            let j = (i + 1) % n;
            if bits >> i & 1 == 1 {
                (j, i)
            } else {
                (i, j)
            }
        })
        .collect();
    DiGraph::from_indices(n, &edges)
}

/// For a cycle orientation with exactly one source, the lengths of the two
/// directed runs from the source to the sink, shorter first.
pub fn two_run_lengths(n: usize, bits: u32) -> Option<(usize, usize)> {
    let forward = |i: usize| bits >> (i % n) & 1 == 0;
    // vertex i is a source when edge (i-1,i) points back and (i,i+1) forward
    let sources: Vec<usize> = (0..n).filter(|&i| forward(i) && !forward(i + n - 1)).collect();
    if sources.len() != 1 {
        return None;
    }
    let s = sources[0];
    let run = (0..n).take_while(|k| forward(s + k)).count();
    let (a, b) = (run, n - run);
    Some((a.min(b), a.max(b)))
}
