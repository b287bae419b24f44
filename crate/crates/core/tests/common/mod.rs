//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls into the library's geodesic or search code.

#![allow(dead_code)]

use std::collections::HashSet;

use leechlab::Graph;
use rand::Rng;

pub const INF: usize = usize::MAX / 4;

/// All-pairs distances by Floyd–Warshall.
pub fn floyd(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in edges {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Every geodesic as a sorted list of edge indices into `edges`, found by
/// walking all simple paths and keeping those as short as the distance.
pub fn brute_geodesics(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let d = floyd(n, edges);
    let mut adj = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, i));
        adj[v].push((u, i));
    }
    let mut out = Vec::new();
    for s in 0..n {
        let mut visited = vec![false; n];
        let mut trail = Vec::new();
        walk(s, s, &adj, &d, &mut visited, &mut trail, &mut out);
    }
    out
}

fn walk(
    s: usize,
    v: usize,
    adj: &[Vec<(usize, usize)>],
    d: &[Vec<usize>],
    visited: &mut [bool],
    trail: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    visited[v] = true;
    if v > s && trail.len() == d[s][v] {
        let mut p = trail.clone();
        p.sort_unstable();
        out.push(p);
    }
    for &(w, e) in &adj[v] {
        if !visited[w] {
            trail.push(e);
            walk(s, w, adj, d, visited, trail, out);
            trail.pop();
        }
    }
    visited[v] = false;
}

pub fn random_edges(rng: &mut impl Rng, n: usize, p: f64) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Independent verdict: 0 Leech, 1 almost, 2 neither.
pub fn naive_verdict(weights: &[u64]) -> u8 {
    let t = weights.len() as u64;
    let mut sorted = weights.to_vec();
    sorted.sort_unstable();
    if sorted.iter().copied().eq(1..=t) {
        return 0;
    }
    let in_range = sorted.iter().all(|&w| (1..=t).contains(&w));
    let distinct: HashSet<u64> = sorted.iter().copied().collect();
    let max_mult = distinct
        .iter()
        .map(|x| sorted.iter().filter(|&&w| w == *x).count())
        .max()
        .unwrap_or(0);
    if in_range && distinct.len() as u64 + 1 == t && max_mult == 2 {
        1
    } else {
        2
    }
}

pub fn weights(paths: &[Vec<usize>], labels: &[u64]) -> Vec<u64> {
    paths.iter().map(|p| p.iter().map(|&e| labels[e]).sum()).collect()
}

/// Calls `f` on every vector in `[1, hi]^m`.
pub fn for_each_vector(m: usize, hi: u64, mut f: impl FnMut(&[u64])) {
    let mut v = vec![1u64; m];
    loop {
        f(&v);
        let mut i = 0;
        loop {
            if i == m {
                return;
            }
            if v[i] < hi {
                v[i] += 1;
                break;
            }
            v[i] = 1;
            i += 1;
        }
    }
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn pair_bit(n: usize, u: usize, v: usize) -> u32 {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    (a * n + b) as u32
}

/// Smallest adjacency bitmask over all vertex relabelings, tagged with the
/// order so graphs of different sizes never collide.
pub fn canonical(n: usize, edges: &[(usize, usize)], perms: &[Vec<usize>]) -> (usize, u64) {
    let best = perms
        .iter()
        .map(|p| {
            edges
                .iter()
                .fold(0u64, |acc, &(u, v)| acc | 1 << pair_bit(n, p[u], p[v]))
        })
        .min()
        .unwrap_or(0);
    (n, best)
}

pub fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return true;
    }
    let d = floyd(n, edges);
    d[0].iter().all(|&x| x < INF)
}

pub fn edges_of(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().to_vec()
}

/// All simple graphs on `n` labeled vertices, as edge lists.
pub fn all_graphs(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect()
        })
        .collect()
}
