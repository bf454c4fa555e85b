//! Symmetric eigenvalues and their grouping into a distinct spectrum.
//!
//! Eigenvalues come from Householder reduction to tridiagonal form followed
//! by the implicitly shifted QL iteration. Eigenvectors are never formed.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// All eigenvalues, sorted descending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    pub fn from_values(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum { values }
    }

    pub fn of_graph(g: &Graph) -> Result<Self> {
        eigenvalues(&g.adjacency_matrix())
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn spectral_radius(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }
}

/// Distinct eigenvalues `theta_0 > ... > theta_d` with multiplicities and
/// prefix sums `S_t = m_0 + ... + m_{t-1}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistinctSpectrum {
    thetas: Vec<f64>,
    mults: Vec<usize>,
    prefix: Vec<usize>,
}

impl DistinctSpectrum {
    /// Builds from explicit parts; thetas must be strictly decreasing.
    pub fn from_parts(thetas: Vec<f64>, mults: Vec<usize>) -> Result<Self> {
        if thetas.is_empty() || thetas.len() != mults.len() {
            return Err(Error::InvalidArgument("thetas and multiplicities must be nonempty and aligned".into()));
        }
        if thetas.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidArgument("thetas must be strictly decreasing".into()));
        }
        if mults.contains(&0) {
            return Err(Error::InvalidArgument("multiplicities must be positive".into()));
        }
        let mut prefix = Vec::with_capacity(mults.len() + 1);
        prefix.push(0);
        for m in &mults {
            prefix.push(prefix.last().unwrap() + m);
        }
        Ok(DistinctSpectrum { thetas, mults, prefix })
    }

    pub fn of_graph(g: &Graph) -> Result<Self> {
        let s = Spectrum::of_graph(g)?;
        Ok(group_distinct(&s, default_tolerance(&s)))
    }

    pub fn thetas(&self) -> &[f64] {
        &self.thetas
    }

    pub fn mults(&self) -> &[usize] {
        &self.mults
    }

    pub fn prefix(&self) -> &[usize] {
        &self.prefix
    }

    /// Index of the last distinct eigenvalue.
    pub fn d(&self) -> usize {
        self.thetas.len() - 1
    }

    /// Number of distinct eigenvalues, `d + 1`.
    pub fn distinct_count(&self) -> usize {
        self.thetas.len()
    }

    pub fn n(&self) -> usize {
        *self.prefix.last().unwrap()
    }

    /// Total multiplicity of indices `i..j` (half-open).
    pub fn weight(&self, i: usize, j: usize) -> usize {
        self.prefix[j] - self.prefix[i]
    }

    /// Total multiplicity of an arbitrary index set.
    pub fn weight_of(&self, indices: impl IntoIterator<Item = usize>) -> usize {
        indices.into_iter().map(|j| self.mults[j]).sum()
    }

    pub fn positive_count(&self) -> usize {
        self.weight_where(|t| t > 0.0)
    }

    pub fn negative_count(&self) -> usize {
        self.weight_where(|t| t < 0.0)
    }

    pub fn weight_where(&self, pred: impl Fn(f64) -> bool) -> usize {
        self.thetas.iter().zip(&self.mults).filter(|(t, _)| pred(**t)).map(|(_, m)| m).sum()
    }

    /// `sum_j m_j theta_j^power`.
    pub fn power_sum(&self, power: i32) -> f64 {
        self.thetas.iter().zip(&self.mults).map(|(t, &m)| m as f64 * t.powi(power)).sum()
    }

    /// Back to a full eigenvalue list with repetitions.
    pub fn expand(&self) -> Spectrum {
        Spectrum {
            values: self
                .thetas
                .iter()
                .zip(&self.mults)
                .flat_map(|(&t, &m)| std::iter::repeat_n(t, m))
                .collect(),
        }
    }
}

/// `1e-8 * max(1, spectral radius)`.
pub fn default_tolerance(s: &Spectrum) -> f64 {
    1e-8 * s.spectral_radius().max(1.0)
}

/// Merges runs of consecutive eigenvalues closer than `tol` into one distinct
/// value (their mean). Values within `tol` of zero snap to exactly zero.
pub fn group_distinct(s: &Spectrum, tol: f64) -> DistinctSpectrum {
    let mut thetas = Vec::new();
    let mut mults = Vec::new();
    let mut iter = s.values.iter().copied().peekable();
    while let Some(first) = iter.next() {
        let mut sum = first;
        let mut count = 1usize;
        let mut last = first;
        while let Some(&next) = iter.peek() {
            if last - next > tol {
                break;
            }
            sum += next;
            count += 1;
            last = next;
            iter.next();
        }
        let mean = sum / count as f64;
        thetas.push(if mean.abs() <= tol { 0.0 } else { mean });
        mults.push(count);
    }
    DistinctSpectrum::from_parts(thetas, mults).expect("grouping yields strictly decreasing values")
}

/// Eigenvalues of a real symmetric matrix, sorted descending.
pub fn eigenvalues(a: &[Vec<f64>]) -> Result<Spectrum> {
    let n = a.len();
    if a.iter().any(|row| row.len() != n) {
        return Err(Error::Contract("matrix is not square".into()));
    }
    let scale = a.iter().flatten().fold(0.0f64, |m, v| m.max(v.abs())).max(1.0);
    for i in 0..n {
        for j in 0..i {
            if (a[i][j] - a[j][i]).abs() > 1e-12 * scale {
                return Err(Error::Contract(format!("matrix is not symmetric at ({i}, {j})")));
            }
        }
    }
    let (mut diag, mut off) = tridiagonalize(a);
    implicit_ql(&mut diag, &mut off)?;
    Ok(Spectrum::from_values(diag))
}

/// Householder reduction. Returns the diagonal and subdiagonal
/// (`off[i]` couples rows `i` and `i + 1`; the last entry is zero).
fn tridiagonalize(a: &[Vec<f64>]) -> (Vec<f64>, Vec<f64>) {
    let n = a.len();
    let mut m: Vec<Vec<f64>> = a.to_vec();
    let mut off = vec![0.0; n];
    for k in 0..n.saturating_sub(2) {
        let x: Vec<f64> = (k + 1..n).map(|i| m[i][k]).collect();
        let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let alpha = if x[0] > 0.0 { -norm } else { norm };
        let mut v = x;
        v[0] -= alpha;
        let vnorm = v.iter().map(|t| t * t).sum::<f64>().sqrt();
        if vnorm == 0.0 {
            continue;
        }
        v.iter_mut().for_each(|t| *t /= vnorm);
        let size = n - k - 1;
        // p = S v, q = p - (v.p) v, S <- S - 2 (v q' + q v')
        let p: Vec<f64> = (0..size)
            .map(|r| (0..size).map(|c| m[k + 1 + r][k + 1 + c] * v[c]).sum())
            .collect();
        let vp: f64 = v.iter().zip(&p).map(|(a, b)| a * b).sum();
        let q: Vec<f64> = p.iter().zip(&v).map(|(pi, vi)| pi - vp * vi).collect();
        for r in 0..size {
            for c in 0..size {
                m[k + 1 + r][k + 1 + c] -= 2.0 * (v[r] * q[c] + q[r] * v[c]);
            }
        }
        m[k + 1][k] = alpha;
        m[k][k + 1] = alpha;
        for i in k + 2..n {
            m[i][k] = 0.0;
            m[k][i] = 0.0;
        }
    }
    let diag = (0..n).map(|i| m[i][i]).collect();
    for i in 0..n.saturating_sub(1) {
        off[i] = m[i + 1][i];
    }
    (diag, off)
}

/// Implicitly shifted QL on a symmetric tridiagonal matrix, in place.
fn implicit_ql(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > 60 {
                return Err(Error::Contract("QL iteration failed to converge".into()));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}
