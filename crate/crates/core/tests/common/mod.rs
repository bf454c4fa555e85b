//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use nalgebra::DMatrix;
use proptest::prelude::*;

use inertia_bounds::Graph;

pub fn matrix(g: &Graph) -> DMatrix<f64> {
    let n = g.vertex_count();
    let mut a = DMatrix::zeros(n, n);
    for &(u, v) in g.edges() {
        a[(u, v)] = 1.0;
        a[(v, u)] = 1.0;
    }
    a
}

/// Eigenvalues from nalgebra's symmetric solver, sorted descending.
pub fn reference_eigenvalues(g: &Graph) -> Vec<f64> {
    let mut ev: Vec<f64> = matrix(g).symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(|a, b| b.total_cmp(a));
    ev
}

/// `(A^i)_vv` for `i = 0..=k` by dense matrix powers.
pub fn reference_diagonals(g: &Graph, k: usize) -> Vec<Vec<i64>> {
    let n = g.vertex_count();
    let a = matrix(g);
    let mut p = DMatrix::<f64>::identity(n, n);
    let mut out = vec![Vec::with_capacity(k + 1); n];
    for _ in 0..=k {
        for (v, row) in out.iter_mut().enumerate() {
            row.push(p[(v, v)].round() as i64);
        }
        p = &p * &a;
    }
    out
}

/// All-pairs distances by Floyd-Warshall; `None` across components.
pub fn distance_table(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.vertex_count();
    let mut d = vec![vec![None; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = Some(0);
    }
    for &(u, v) in g.edges() {
        d[u][v] = Some(1);
        d[v][u] = Some(1);
    }
    for w in 0..n {
        for u in 0..n {
            for v in 0..n {
                if let (Some(a), Some(b)) = (d[u][w], d[w][v]) {
                    if d[u][v].is_none_or(|c| a + b < c) {
                        d[u][v] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

fn close(g: &Graph, k: usize) -> Vec<Vec<bool>> {
    let d = distance_table(g);
    d.iter().map(|row| row.iter().map(|x| x.is_some_and(|x| x >= 1 && x <= k)).collect()).collect()
}

/// Largest vertex set pairwise at distance above `k`, by subset enumeration.
pub fn brute_alpha_k(g: &Graph, k: usize) -> usize {
    let n = g.vertex_count();
    assert!(n <= 20);
    let near = close(g, k);
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|u| s >> u & 1 == 0 || (u + 1..n).all(|v| s >> v & 1 == 0 || !near[u][v])))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Fewest colors with distinct colors within distance `k`, by backtracking
/// in vertex order.
pub fn brute_chi_k(g: &Graph, k: usize) -> usize {
    let n = g.vertex_count();
    let near = close(g, k);
    fn place(v: usize, colors: usize, col: &mut Vec<usize>, near: &[Vec<bool>]) -> bool {
        if v == col.len() {
            return true;
        }
        let used = col[..v].iter().copied().max().map_or(0, |m| m + 1);
        for c in 0..colors.min(used + 1) {
            if (0..v).all(|u| !near[u][v] || col[u] != c) {
                col[v] = c;
                if place(v + 1, colors, col, near) {
                    return true;
                }
            }
        }
        false
    }
    (1..=n.max(1)).find(|&c| place(0, c, &mut vec![0; n], &near)).unwrap_or(0)
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut it = bits.iter();
    for u in 0..n {
        for v in u + 1..n {
            if *it.next().unwrap() {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Arbitrary simple graphs on `lo..=hi` vertices.
pub fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |b| graph_from_bits(n, &b)))
}

/// Circulant graph on `n` vertices with the given connection set.
pub fn circulant(n: usize, jumps: &[usize]) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for &j in jumps {
            let v = (u + j) % n;
            if v != u && !edges.contains(&(u.min(v), u.max(v))) {
                edges.push((u.min(v), u.max(v)));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Circulants are vertex-transitive, hence k-partially walk-regular for all k.
pub fn arb_circulant(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n / 2).prop_map(move |pick| {
            let jumps: Vec<usize> = pick.iter().enumerate().filter(|(_, &p)| p).map(|(i, _)| i + 1).collect();
            circulant(n, &jumps)
        })
    })
}
