use crate::alpha::{evaluate_bound, AlphaBoundResult};
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::profile::DiagonalProfile;
use crate::spectra::DistinctSpectrum;

const MAX_GRID_POINTS: f64 = 1e8;

/// Evaluates the alpha bound at every point of the coefficient grid
/// `{-half_width + i * step}^(k+1)` and keeps the smallest value. Any grid
/// value is a valid bound, so this dominates the true optimum from above.
pub fn grid_search_bound(
    spec: &DistinctSpectrum,
    prof: &DiagonalProfile,
    k: usize,
    half_width: f64,
    step: f64,
) -> Result<AlphaBoundResult> {
    if !(1..=3).contains(&k) {
        return Err(Error::InvalidArgument(format!("grid search supports k in 1..=3, got {k}")));
    }
    if prof.k() < k {
        return Err(Error::DegreeMismatch { degree: k, cap: prof.k() });
    }
    if !(step > 0.0 && half_width >= 0.0) {
        return Err(Error::InvalidArgument("grid needs step > 0 and half_width >= 0".into()));
    }
    let per_axis = (2.0 * half_width / step + 1e-9).floor() as usize + 1;
    if (per_axis as f64).powi(k as i32 + 1) > MAX_GRID_POINTS {
        return Err(Error::Capability(format!("{per_axis}^{} grid points exceed {MAX_GRID_POINTS:e}", k + 1)));
    }

    // Distinct diagonal rows suffice for w(p) and W(p).
    let mut diag_rows: Vec<Vec<f64>> = Vec::new();
    for v in 0..prof.vertex_count() {
        let r: Vec<f64> = prof.row(v)[..=k].iter().map(|&c| c as f64).collect();
        if !diag_rows.contains(&r) {
            diag_rows.push(r);
        }
    }
    let powers: Vec<Vec<f64>> = spec.thetas().iter().map(|&t| crate::alpha::power_row(t, k)).collect();
    let mults = spec.mults();

    let mut best_value = usize::MAX;
    let mut best_point = vec![0.0; k + 1];
    let mut idx = vec![0usize; k + 1];
    let mut point = vec![0.0; k + 1];
    let mut values = vec![0.0; powers.len()];
    let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
    loop {
        for (p, &i) in point.iter_mut().zip(&idx) {
            *p = -half_width + i as f64 * step;
        }
        let (mut w, mut big_w) = (f64::INFINITY, f64::NEG_INFINITY);
        for r in &diag_rows {
            let v = dot(r, &point);
            w = w.min(v);
            big_w = big_w.max(v);
        }
        for (v, row) in values.iter_mut().zip(&powers) {
            *v = dot(row, &point);
        }
        let tol = 1e-9 * values.iter().fold(w.abs().max(big_w.abs()).max(1.0), |m, v| m.max(v.abs()));
        let (mut above, mut below) = (0, 0);
        for (&v, &m) in values.iter().zip(mults) {
            if v >= w - tol {
                above += m;
            }
            if v <= big_w + tol {
                below += m;
            }
        }
        let value = above.min(below);
        if value < best_value {
            best_value = value;
            best_point.copy_from_slice(&point);
        }

        let mut axis = 0;
        while axis <= k {
            idx[axis] += 1;
            if idx[axis] < per_axis {
                break;
            }
            idx[axis] = 0;
            axis += 1;
        }
        if axis > k {
            break;
        }
    }
    let r = evaluate_bound(&Polynomial::new(best_point), spec, prof)?;
    debug_assert_eq!(r.value, best_value);
    Ok(r)
}
