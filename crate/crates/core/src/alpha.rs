//! Inertia-type upper bound on the k-independence number.
//!
//! For a polynomial `p` of degree at most `k`, the number of eigenvalues with
//! `p(lambda) >= w(p)` bounds `alpha_k`. The optimizers here minimize that count
//! by certifying a set of distinct eigenvalues where `p <= -1` while every
//! diagonal entry of `p(A)` stays nonnegative.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::feasibility::{feasible, LinearConstraintSystem, Relation, Row, RowLabel};
use crate::polynomial::{Polynomial, PolynomialProfile};
use crate::profile::DiagonalProfile;
use crate::spectra::DistinctSpectrum;

pub const MAX_K: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlphaMethod {
    K1,
    K2TwoPointer,
    FixedKEnum,
    EvaluateOnly,
}

impl fmt::Display for AlphaMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlphaMethod::K1 => "k1",
            AlphaMethod::K2TwoPointer => "k2_two_pointer",
            AlphaMethod::FixedKEnum => "fixed_k_enum",
            AlphaMethod::EvaluateOnly => "evaluate_only",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlphaBoundResult {
    pub value: usize,
    pub witness: Polynomial,
    /// Indices `j` with `p(theta_j)` certified negative.
    pub negative_set: Vec<usize>,
    pub method: AlphaMethod,
}

/// Evaluates the bound for a given polynomial: the smaller of the eigenvalue
/// counts with `p >= w(p)` and with `p <= W(p)`.
pub fn evaluate_bound(
    p: &Polynomial,
    spec: &DistinctSpectrum,
    prof: &DiagonalProfile,
) -> Result<AlphaBoundResult> {
    let pp = PolynomialProfile::new(p, spec, prof)?;
    let vals = &pp.values_on_spectrum;
    let scale = vals
        .iter()
        .fold(pp.big_w.abs().max(pp.small_w.abs()).max(1.0), |m, v| m.max(v.abs()));
    let tol = 1e-9 * scale;
    let below_w: Vec<usize> = (0..vals.len()).filter(|&j| vals[j] < pp.small_w - tol).collect();
    let above_big_w: Vec<usize> = (0..vals.len()).filter(|&j| vals[j] > pp.big_w + tol).collect();
    let n = spec.n();
    let (low, high) = (spec.weight_of(below_w.iter().copied()), spec.weight_of(above_big_w.iter().copied()));
    let negative_set = if low >= high { below_w } else { above_big_w };
    Ok(AlphaBoundResult {
        value: n - low.max(high),
        witness: p.clone(),
        negative_set,
        method: AlphaMethod::EvaluateOnly,
    })
}

/// Closed form for `k = 1`: `p(x) = x` or `p(x) = -x`.
pub fn optimize_k1(spec: &DistinctSpectrum) -> AlphaBoundResult {
    let thetas = spec.thetas();
    let neg: Vec<usize> = (0..thetas.len()).filter(|&j| thetas[j] < 0.0).collect();
    let pos: Vec<usize> = (0..thetas.len()).filter(|&j| thetas[j] > 0.0).collect();
    let (wn, wp) = (spec.weight_of(neg.iter().copied()), spec.weight_of(pos.iter().copied()));
    let (sign, set) = if wn >= wp { (1.0, neg) } else { (-1.0, pos) };
    // Scale so the certified side reaches -1.
    let closest = set.iter().map(|&j| thetas[j].abs()).fold(f64::INFINITY, f64::min);
    let scale = if closest.is_finite() { 1.0 / closest } else { 1.0 };
    AlphaBoundResult {
        value: spec.n() - spec.weight_of(set.iter().copied()),
        witness: Polynomial::new(vec![0.0, sign * scale]),
        negative_set: set,
        method: AlphaMethod::K1,
    }
}

fn product_tol(k: f64) -> f64 {
    1e-9 * k.abs().max(1.0)
}

/// `a_2 > 0`: the block `i..=j` lies strictly between the two roots. Feasible
/// iff some roots `alpha < theta_j`, `beta > theta_i` have `alpha * beta >= kk`
/// with `kk = -d_min`.
pub(crate) fn convex_block_feasible(thetas: &[f64], i: usize, j: usize, kk: f64) -> bool {
    thetas[j] > 0.0 || thetas[i] < 0.0 || thetas[i] * thetas[j] > kk + product_tol(kk)
}

/// `a_2 < 0`: the block `i..=j` is exactly the set of eigenvalues between the
/// roots, which need `alpha < 0 < beta` and `alpha * beta <= kk` with
/// `kk = -d_max`.
pub(crate) fn concave_block_feasible(thetas: &[f64], i: usize, j: usize, kk: f64) -> bool {
    let d = thetas.len() - 1;
    let left_ok = i == 0 || thetas[i - 1] > 0.0;
    let right_ok = j == d || thetas[j + 1] < 0.0;
    left_ok && right_ok && (i == 0 || j == d || thetas[i - 1] * thetas[j + 1] < kk - product_tol(kk))
}

/// Heaviest feasible convex block `[i, e)` via a two-pointer scan.
pub(crate) fn max_interior_weight(spec: &DistinctSpectrum, kk: f64) -> Option<(usize, usize)> {
    let thetas = spec.thetas();
    let len = thetas.len();
    let mut best: Option<(usize, usize)> = None;
    let mut e = 0;
    for i in 0..len {
        e = e.max(i);
        while e < len && convex_block_feasible(thetas, i, e, kk) {
            e += 1;
        }
        if e > i && best.is_none_or(|(bi, be)| spec.weight(i, e) > spec.weight(bi, be)) {
            best = Some((i, e));
        }
    }
    best
}

/// Lightest feasible concave block `[i, j]` (inclusive), via a two-pointer
/// scan over the minimal feasible end for each start.
pub(crate) fn min_interior_weight(spec: &DistinctSpectrum, kk: f64) -> Option<(usize, usize)> {
    let thetas = spec.thetas();
    let len = thetas.len();
    let mut best: Option<(usize, usize)> = None;
    let mut j = 0;
    for i in 0..len {
        if i > 0 && thetas[i - 1] <= 0.0 {
            break;
        }
        j = j.max(i);
        while j < len && !concave_block_feasible(thetas, i, j, kk) {
            j += 1;
        }
        if j == len {
            break;
        }
        if best.is_none_or(|(bi, bj)| spec.weight(i, j + 1) < spec.weight(bi, bj + 1)) {
            best = Some((i, j));
        }
    }
    best
}

fn gap_below(thetas: &[f64], j: usize) -> f64 {
    if j + 1 < thetas.len() { thetas[j] - thetas[j + 1] } else { 1.0 }
}

fn gap_above(thetas: &[f64], i: usize) -> f64 {
    if i > 0 { thetas[i - 1] - thetas[i] } else { 1.0 }
}

/// Rescales `p` so its largest value on `targets` is `-1`.
fn normalize_negative(p: Polynomial, thetas: &[f64], targets: &[usize]) -> Polynomial {
    let worst = targets.iter().map(|&j| p.eval(thetas[j])).fold(f64::NEG_INFINITY, f64::max);
    if worst.is_finite() && worst < 0.0 { p.scaled(-1.0 / worst) } else { p }
}

fn convex_witness(thetas: &[f64], i: usize, e: usize, kk: f64) -> Polynomial {
    let j = e - 1;
    let mut s = 0.5;
    let (mut lo, mut hi) = (thetas[j] - s * gap_below(thetas, j), thetas[i] + s * gap_above(thetas, i));
    for _ in 0..80 {
        if lo * hi >= kk {
            break;
        }
        s *= 0.5;
        lo = thetas[j] - s * gap_below(thetas, j);
        hi = thetas[i] + s * gap_above(thetas, i);
    }
    let p = Polynomial::new(vec![lo * hi, -(lo + hi), 1.0]);
    normalize_negative(p, thetas, &(i..e).collect::<Vec<_>>())
}

fn concave_witness(thetas: &[f64], i: usize, j: usize, kk: f64) -> Polynomial {
    let d = thetas.len() - 1;
    let a_top = thetas[j].min(0.0);
    let b_bot = thetas[i].max(0.0);
    let mut lo = a_top;
    let mut hi = b_bot;
    for m in 1..80 {
        let s = 1.0 - 0.5f64.powi(m);
        lo = if j == d { a_top - 2f64.powi(m) } else { a_top - s * (a_top - thetas[j + 1]) };
        hi = if i == 0 { b_bot + 2f64.powi(m) } else { b_bot + s * (thetas[i - 1] - b_bot) };
        if lo < 0.0 && hi > 0.0 && lo * hi <= kk {
            break;
        }
    }
    let p = Polynomial::new(vec![-lo * hi, lo + hi, -1.0]);
    let outside: Vec<usize> = (0..thetas.len()).filter(|&t| t < i || t > j).collect();
    normalize_negative(p, thetas, &outside)
}

/// Optimal bound for `k = 2` from the two root-interval scans, the `k = 1`
/// answer and the trivial value `n`.
pub fn optimize_k2(spec: &DistinctSpectrum, prof: &DiagonalProfile) -> Result<AlphaBoundResult> {
    if prof.k() < 2 {
        return Err(Error::DegreeMismatch { degree: 2, cap: prof.k() });
    }
    let n = spec.n();
    let thetas = spec.thetas();
    let k1 = optimize_k1(spec);
    let mut best = AlphaBoundResult {
        value: k1.value,
        witness: k1.witness.padded(2),
        negative_set: k1.negative_set,
        method: AlphaMethod::K2TwoPointer,
    };

    let kk_min = -(prof.d_min() as f64);
    if let Some((i, e)) = max_interior_weight(spec, kk_min) {
        let value = n - spec.weight(i, e);
        if value < best.value {
            best = AlphaBoundResult {
                value,
                witness: convex_witness(thetas, i, e, kk_min),
                negative_set: (i..e).collect(),
                method: AlphaMethod::K2TwoPointer,
            };
        }
    }

    let kk_max = -(prof.d_max() as f64);
    if prof.d_max() > 0 {
        if let Some((i, j)) = min_interior_weight(spec, kk_max) {
            let value = spec.weight(i, j + 1);
            if value < best.value {
                best = AlphaBoundResult {
                    value,
                    witness: concave_witness(thetas, i, j, kk_max),
                    negative_set: (0..thetas.len()).filter(|&t| t < i || t > j).collect(),
                    method: AlphaMethod::K2TwoPointer,
                };
            }
        }
    }
    Ok(best)
}

/// Diagonal rows `sum_i a_i (A^i)_vv >= 0` reduced to a sufficient subset.
pub fn prune_diagonal_constraints(prof: &DiagonalProfile, k: usize) -> Vec<Row> {
    let n = prof.vertex_count();
    let diag_row = |v: usize| {
        let coeffs = prof.row(v)[..=k].iter().map(|&c| c as f64).collect();
        Row::new(coeffs, Relation::Ge, 0.0, RowLabel::Diagonal(v))
    };
    match k {
        0 | 1 => vec![Row::new(
            {
                let mut c = vec![0.0; k + 1];
                c[0] = 1.0;
                c
            },
            Relation::Ge,
            0.0,
            RowLabel::Diagonal(0),
        )],
        2 => {
            let vmin = (0..n).find(|&v| prof.row(v)[2] == prof.d_min()).unwrap_or(0);
            let vmax = (0..n).find(|&v| prof.row(v)[2] == prof.d_max()).unwrap_or(0);
            let mut rows = vec![diag_row(vmin)];
            if prof.d_max() != prof.d_min() {
                rows.push(diag_row(vmax));
            }
            rows
        }
        3 => hull_vertices(prof.hull_points())
            .into_iter()
            .map(|pt| diag_row(prof.hull_points().iter().position(|&q| q == pt).unwrap()))
            .collect(),
        _ => full_diagonal_constraints(prof, k),
    }
}

/// One row per distinct diagonal profile vector, without further pruning.
pub fn full_diagonal_constraints(prof: &DiagonalProfile, k: usize) -> Vec<Row> {
    let mut seen: Vec<&[i64]> = Vec::new();
    let mut rows = Vec::new();
    for v in 0..prof.vertex_count() {
        let r = &prof.row(v)[..=k];
        if !seen.contains(&r) {
            seen.push(r);
            rows.push(Row::new(r.iter().map(|&c| c as f64).collect(), Relation::Ge, 0.0, RowLabel::Diagonal(v)));
        }
    }
    rows
}

/// Vertices of the convex hull (monotone chain, collinear points dropped).
pub fn hull_vertices(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let cross = |o: (i64, i64), a: (i64, i64), b: (i64, i64)| {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut hull: Vec<(i64, i64)> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &(i64, i64)>> =
            if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
        for &p in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

/// Coefficient row `(1, theta, ..., theta^k)`.
pub(crate) fn power_row(theta: f64, k: usize) -> Vec<f64> {
    let mut row = Vec::with_capacity(k + 1);
    let mut t = 1.0;
    for _ in 0..=k {
        row.push(t);
        t *= theta;
    }
    row
}

/// Index sets that are unions of at most `max_runs` runs of consecutive
/// indices in `0..len`, each given by its runs `(start, end_exclusive)`.
pub(crate) fn interval_unions(len: usize, max_runs: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(
        from: usize,
        len: usize,
        left: usize,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if left == 0 {
            return;
        }
        for s in from..len {
            for e in s + 1..=len {
                cur.push((s, e));
                out.push(cur.clone());
                rec(e + 1, len, left - 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(0, len, max_runs, &mut Vec::new(), &mut out);
    out
}

/// Generic fixed-`k` optimizer over pruned diagonal rows.
pub fn optimize_fixed_k(spec: &DistinctSpectrum, prof: &DiagonalProfile, k: usize) -> Result<AlphaBoundResult> {
    check_k(prof, k)?;
    optimize_fixed_k_with_rows(spec, k, &prune_diagonal_constraints(prof, k))
}

fn check_k(prof: &DiagonalProfile, k: usize) -> Result<()> {
    if !(1..=MAX_K).contains(&k) {
        return Err(Error::InvalidArgument(format!("k must be in 1..={MAX_K}, got {k}")));
    }
    if prof.k() < k {
        return Err(Error::DegreeMismatch { degree: k, cap: prof.k() });
    }
    Ok(())
}

/// Total multiplicity, run starts and runs of one candidate negative set.
type Candidate = (usize, Vec<usize>, Vec<(usize, usize)>);

/// Fixed-`k` optimizer with caller-supplied diagonal rows. Candidate negative
/// sets are tried heaviest first (ties: lexicographically smallest run
/// starts); the first one whose system is feasible is optimal.
pub fn optimize_fixed_k_with_rows(spec: &DistinctSpectrum, k: usize, diag_rows: &[Row]) -> Result<AlphaBoundResult> {
    if !(1..=MAX_K).contains(&k) {
        return Err(Error::InvalidArgument(format!("k must be in 1..={MAX_K}, got {k}")));
    }
    let thetas = spec.thetas();
    let mut candidates: Vec<Candidate> = interval_unions(thetas.len(), k / 2 + 1)
        .into_iter()
        .map(|runs| {
            let w = runs.iter().map(|&(s, e)| spec.weight(s, e)).sum();
            let starts = runs.iter().map(|r| r.0).collect();
            (w, starts, runs)
        })
        .collect();
    candidates.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));

    let eigen_rows: Vec<Row> = thetas
        .iter()
        .enumerate()
        .map(|(j, &t)| Row::new(power_row(t, k), Relation::Le, -1.0, RowLabel::EigenSign(j)))
        .collect();
    for (weight, _, runs) in candidates {
        let mut sys = LinearConstraintSystem::new(k + 1);
        sys.extend(diag_rows.iter().cloned())?;
        let set: Vec<usize> = runs.iter().flat_map(|&(s, e)| s..e).collect();
        sys.extend(set.iter().map(|&j| eigen_rows[j].clone()))?;
        if let Some(x) = feasible(&sys)? {
            return Ok(AlphaBoundResult {
                value: spec.n() - weight,
                witness: Polynomial::new(x),
                negative_set: set,
                method: AlphaMethod::FixedKEnum,
            });
        }
    }
    Ok(AlphaBoundResult {
        value: spec.n(),
        witness: Polynomial::constant(1.0).padded(k),
        negative_set: Vec::new(),
        method: AlphaMethod::FixedKEnum,
    })
}
