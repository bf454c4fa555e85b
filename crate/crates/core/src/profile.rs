//! Diagonal entries of adjacency powers (closed-walk counts).

use crate::graph::Graph;

/// Exact values `(A^i)_vv` for `i = 0..=k` at every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalProfile {
    k: usize,
    diag: Vec<Vec<i64>>,
    d_min: i64,
    d_max: i64,
    hull_points: Vec<(i64, i64)>,
}

impl DiagonalProfile {
    /// Counts closed walks up to length `k`. Lengths `<= 3` come straight from
    /// degrees and triangle counts; longer ones from walk-count vectors.
    pub fn new(g: &Graph, k: usize) -> Self {
        let n = g.vertex_count();
        let degrees: Vec<i64> = g.degrees().into_iter().map(|d| d as i64).collect();
        let hull_points: Vec<(i64, i64)> =
            (0..n).map(|v| (degrees[v], 2 * g.triangles_at(v) as i64)).collect();
        let diag = (0..n)
            .map(|v| {
                let mut row = Vec::with_capacity(k + 1);
                for i in 0..=k.min(3) {
                    row.push(match i {
                        0 => 1,
                        1 => 0,
                        2 => degrees[v],
                        _ => hull_points[v].1,
                    });
                }
                if k >= 4 {
                    let mut walks = vec![0i64; n];
                    walks[v] = 1;
                    for i in 1..=k {
                        let next: Vec<i64> = (0..n)
                            .map(|u| g.neighbors(u).iter().map(|&w| walks[w]).sum())
                            .collect();
                        walks = next;
                        if i >= 4 {
                            row.push(walks[v]);
                        }
                    }
                }
                row
            })
            .collect();
        DiagonalProfile {
            k,
            diag,
            d_min: degrees.iter().copied().min().unwrap_or(0),
            d_max: degrees.iter().copied().max().unwrap_or(0),
            hull_points,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.diag.len()
    }

    /// `[(A^0)_vv, ..., (A^k)_vv]`.
    pub fn row(&self, v: usize) -> &[i64] {
        &self.diag[v]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.diag.iter().map(Vec::as_slice)
    }

    pub fn d_min(&self) -> i64 {
        self.d_min
    }

    pub fn d_max(&self) -> i64 {
        self.d_max
    }

    /// Per-vertex `(d(v), 2 t(v))`.
    pub fn hull_points(&self) -> &[(i64, i64)] {
        &self.hull_points
    }

    /// Sum over vertices of `(A^i)_vv`, i.e. `tr A^i`.
    pub fn trace(&self, i: usize) -> i64 {
        self.diag.iter().map(|r| r[i]).sum()
    }

    /// Whether `(A^l)_vv` is vertex-independent for every `l <= k`.
    /// `k` may not exceed the depth this profile was built with.
    pub fn is_walk_regular(&self, k: usize) -> bool {
        assert!(k <= self.k, "profile depth {} < requested {k}", self.k);
        let first = &self.diag[0];
        self.diag.iter().all(|r| r[..=k] == first[..=k])
    }

    /// Diagonal of `p(A)` at `v` for coefficients `a_0..a_deg`.
    pub fn poly_diag(&self, v: usize, coeffs: &[f64]) -> f64 {
        coeffs.iter().zip(&self.diag[v]).map(|(a, &c)| a * c as f64).sum()
    }
}

pub fn is_k_partially_walk_regular(g: &Graph, k: usize) -> bool {
    DiagonalProfile::new(g, k).is_walk_regular(k)
}
