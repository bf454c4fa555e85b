//! Lower bounds on the distance-k chromatic number.
//!
//! The second bound needs `tr p(A) = 0` and a k-partially walk-regular graph;
//! its value is `1 + n_-/n_+` over strict sign counts of `p` on the spectrum.
//! The first bound is `n / mu` for an alpha-bound value `mu`.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::alpha::{power_row, AlphaBoundResult, MAX_K};
use crate::error::{Error, Result};
use crate::feasibility::{feasible, LinearConstraintSystem, Relation, Row, RowLabel};
use crate::polynomial::Polynomial;
use crate::profile::DiagonalProfile;
use crate::spectra::DistinctSpectrum;

/// Values with `|p(theta)| <= ZERO_TOL * max |p(theta)|` count as zero.
pub const ZERO_TOL: f64 = 1e-7;
/// Relative tolerance on `sum_j m_j p(theta_j)`.
pub const TRACE_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChiMethod {
    K1,
    K2Breakpoints,
    FixedKEnum,
    FirstBound,
    EvaluateOnly,
}

impl fmt::Display for ChiMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChiMethod::K1 => "k1",
            ChiMethod::K2Breakpoints => "k2_breakpoints",
            ChiMethod::FixedKEnum => "fixed_k_enum",
            ChiMethod::FirstBound => "first_bound",
            ChiMethod::EvaluateOnly => "evaluate_only",
        })
    }
}

/// The witness is oriented so that `n_minus >= n_plus`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChiBoundResult {
    pub n_plus: usize,
    pub n_minus: usize,
    pub witness: Polynomial,
    pub method: ChiMethod,
}

impl ChiBoundResult {
    /// `1 + n_minus / n_plus`.
    pub fn value(&self) -> Ratio<u64> {
        Ratio::from_integer(1) + Ratio::new(self.n_minus as u64, self.n_plus as u64)
    }
}

/// Larger `n_minus / n_plus` first; ties prefer the smaller `n_plus`.
fn cmp_counts(a: (usize, usize), b: (usize, usize)) -> Ordering {
    (a.1 * b.0).cmp(&(b.1 * a.0)).then_with(|| b.0.cmp(&a.0))
}

/// Orients a count pair so that the minus side is the larger.
fn orient(n_plus: usize, n_minus: usize) -> (usize, usize, bool) {
    if n_plus > n_minus { (n_minus, n_plus, true) } else { (n_plus, n_minus, false) }
}

/// Strict sign counts with multiplicity.
pub fn sign_counts(values: &[f64], spec: &DistinctSpectrum, zero_tol: f64) -> (usize, usize) {
    let cutoff = zero_tol * values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut plus = 0;
    let mut minus = 0;
    for (v, &m) in values.iter().zip(spec.mults()) {
        if *v > cutoff {
            plus += m;
        } else if *v < -cutoff {
            minus += m;
        }
    }
    (plus, minus)
}

pub fn evaluate_second_bound(p: &Polynomial, spec: &DistinctSpectrum) -> Result<ChiBoundResult> {
    evaluate_second_bound_with(p, spec, ZERO_TOL)
}

pub fn evaluate_second_bound_with(p: &Polynomial, spec: &DistinctSpectrum, zero_tol: f64) -> Result<ChiBoundResult> {
    let values: Vec<f64> = spec.thetas().iter().map(|&t| p.eval(t)).collect();
    let abs_sum: f64 = values.iter().zip(spec.mults()).map(|(v, &m)| m as f64 * v.abs()).sum();
    if abs_sum == 0.0 {
        return Err(Error::Undefined("polynomial vanishes on the whole spectrum".into()));
    }
    let trace: f64 = values.iter().zip(spec.mults()).map(|(v, &m)| m as f64 * v).sum();
    if trace.abs() > TRACE_TOL * abs_sum {
        return Err(Error::TraceViolated { residual: trace });
    }
    let (plus, minus) = sign_counts(&values, spec, zero_tol);
    if plus == 0 || minus == 0 {
        return Err(Error::Undefined("one sign class is empty".into()));
    }
    let (n_plus, n_minus, flip) = orient(plus, minus);
    Ok(ChiBoundResult {
        n_plus,
        n_minus,
        witness: if flip { p.negated() } else { p.clone() },
        method: ChiMethod::EvaluateOnly,
    })
}

/// `p(x) = +-x`, the only admissible shape for `k = 1`.
pub fn optimize_second_k1(spec: &DistinctSpectrum) -> Result<ChiBoundResult> {
    let (pos, neg) = (spec.positive_count(), spec.negative_count());
    if pos == 0 || neg == 0 {
        return Err(Error::Undefined("spectrum lacks a positive or a negative eigenvalue".into()));
    }
    let (n_plus, n_minus, flip) = orient(pos, neg);
    Ok(ChiBoundResult {
        n_plus,
        n_minus,
        witness: Polynomial::new(vec![0.0, if flip { -1.0 } else { 1.0 }]),
        method: ChiMethod::K1,
    })
}

/// Breakpoints `a` where `x^2 + a x - c` vanishes at a nonzero eigenvalue.
pub fn breakpoints(spec: &DistinctSpectrum, c: f64) -> Vec<f64> {
    let mut b: Vec<f64> = spec.thetas().iter().filter(|&&t| t != 0.0).map(|&t| (c - t * t) / t).collect();
    b.sort_by(f64::total_cmp);
    b.dedup();
    b
}

/// Scans the one-parameter family `x^2 + a x - 2|E|/n`, which is exactly the
/// trace-zero quadratics with leading coefficient 1.
pub fn optimize_second_k2(spec: &DistinctSpectrum, edge_count: usize, n: usize) -> Result<ChiBoundResult> {
    optimize_second_k2_with(spec, edge_count, n, ZERO_TOL)
}

pub fn optimize_second_k2_with(
    spec: &DistinctSpectrum,
    edge_count: usize,
    n: usize,
    zero_tol: f64,
) -> Result<ChiBoundResult> {
    let c = 2.0 * edge_count as f64 / n as f64;
    let bps = breakpoints(spec, c);
    let mut params = bps.clone();
    params.extend(bps.windows(2).map(|w| 0.5 * (w[0] + w[1])));
    match (bps.first(), bps.last()) {
        (Some(lo), Some(hi)) => params.extend([lo - 1.0, hi + 1.0]),
        _ => params.push(0.0),
    }

    let mut best: Option<ChiBoundResult> = optimize_second_k1(spec).ok().map(|r| ChiBoundResult {
        witness: r.witness.padded(2),
        method: ChiMethod::K2Breakpoints,
        ..r
    });
    for a in params {
        let p = Polynomial::new(vec![-c, a, 1.0]);
        let values: Vec<f64> = spec.thetas().iter().map(|&t| p.eval(t)).collect();
        let (plus, minus) = sign_counts(&values, spec, zero_tol);
        if plus == 0 || minus == 0 {
            continue;
        }
        let (n_plus, n_minus, flip) = orient(plus, minus);
        if best.as_ref().is_none_or(|b| cmp_counts((n_plus, n_minus), (b.n_plus, b.n_minus)).is_gt()) {
            best = Some(ChiBoundResult {
                n_plus,
                n_minus,
                witness: if flip { p.negated() } else { p },
                method: ChiMethod::K2Breakpoints,
            });
        }
    }
    best.ok_or_else(|| Error::Undefined("no trace-zero quadratic has both signs on the spectrum".into()))
}

/// Errors with `Inapplicable` unless the graph is k-partially walk-regular.
pub fn check_applicable(prof: &DiagonalProfile, k: usize) -> Result<()> {
    if prof.k() < k {
        return Err(Error::DegreeMismatch { degree: k, cap: prof.k() });
    }
    if prof.is_walk_regular(k) { Ok(()) } else { Err(Error::Inapplicable { k }) }
}

/// Sign patterns `{-1, 0, +1}` on the distinct eigenvalues realizable by
/// placing at most `k` real roots: at an eigenvalue (simple or double) or
/// inside a gap between consecutive eigenvalues.
pub fn sign_patterns(len: usize, k: usize) -> Vec<Vec<i8>> {
    fn rec(j: usize, len: usize, sign: i8, roots: usize, k: usize, cur: &mut Vec<i8>, out: &mut HashSet<Vec<i8>>) {
        if j == len {
            out.insert(cur.clone());
            return;
        }
        let mut after_value = vec![(sign, sign, roots)];
        if roots < k {
            after_value.push((0, -sign, roots + 1));
        }
        if roots + 2 <= k {
            after_value.push((0, sign, roots + 2));
        }
        for (value, next, used) in after_value {
            cur.push(value);
            rec(j + 1, len, next, used, k, cur, out);
            if j + 1 < len && used < k {
                rec(j + 1, len, -next, used + 1, k, cur, out);
            }
            cur.pop();
        }
    }
    let mut out = HashSet::new();
    for lead in [1i8, -1] {
        rec(0, len, lead, 0, k, &mut Vec::with_capacity(len), &mut out);
    }
    let mut v: Vec<Vec<i8>> = out.into_iter().collect();
    v.sort();
    v
}

/// Best realizable sign pattern under the trace condition, found by testing
/// patterns in decreasing order of `1 + n_-/n_+`.
pub fn optimize_second_fixed_k(spec: &DistinctSpectrum, prof: &DiagonalProfile, k: usize) -> Result<ChiBoundResult> {
    if !(1..=MAX_K).contains(&k) {
        return Err(Error::InvalidArgument(format!("k must be in 1..={MAX_K}, got {k}")));
    }
    check_applicable(prof, k)?;
    let thetas = spec.thetas();
    let mults = spec.mults();

    // Keep one representative per pattern pair {s, -s}, oriented so the
    // minus side is the heavier one.
    let mut seen = HashSet::new();
    let mut candidates: Vec<(usize, usize, Vec<i8>)> = Vec::new();
    for pat in sign_patterns(thetas.len(), k) {
        let plus: usize = pat.iter().zip(mults).filter(|(s, _)| **s > 0).map(|(_, m)| m).sum();
        let minus: usize = pat.iter().zip(mults).filter(|(s, _)| **s < 0).map(|(_, m)| m).sum();
        if plus == 0 || minus == 0 {
            continue;
        }
        let (n_plus, n_minus, flip) = orient(plus, minus);
        let oriented: Vec<i8> = if flip { pat.iter().map(|s| -s).collect() } else { pat };
        if seen.insert(oriented.clone()) {
            candidates.push((n_plus, n_minus, oriented));
        }
    }
    candidates.sort_by(|a, b| cmp_counts((b.0, b.1), (a.0, a.1)).then_with(|| a.2.cmp(&b.2)));

    let mut trace = vec![0.0; k + 1];
    for (&t, &m) in thetas.iter().zip(mults) {
        for (acc, v) in trace.iter_mut().zip(power_row(t, k)) {
            *acc += m as f64 * v;
        }
    }
    for (n_plus, n_minus, pat) in candidates {
        let mut sys = LinearConstraintSystem::new(k + 1);
        sys.push(Row::new(trace.clone(), Relation::Eq, 0.0, RowLabel::Trace))?;
        for (j, &s) in pat.iter().enumerate() {
            let (rel, rhs) = match s {
                1 => (Relation::Ge, 1.0),
                -1 => (Relation::Le, -1.0),
                _ => (Relation::Eq, 0.0),
            };
            sys.push(Row::new(power_row(thetas[j], k), rel, rhs, RowLabel::EigenSign(j)))?;
        }
        if let Some(x) = feasible(&sys)? {
            return Ok(ChiBoundResult { n_plus, n_minus, witness: Polynomial::new(x), method: ChiMethod::FixedKEnum });
        }
    }
    Err(Error::Undefined("no admissible polynomial has both signs on the spectrum".into()))
}

/// `n / mu`.
pub fn first_bound(alpha: &AlphaBoundResult, n: usize) -> Ratio<u64> {
    Ratio::new(n as u64, alpha.value as u64)
}
