//! Exact reference solver for the small models built in this crate.
//!
//! Continuous variables that share a row with another continuous variable
//! form the LP part (the polynomial coefficients). Rows over the LP part with
//! identical coefficient vectors form a group: they all constrain the same
//! scalar `s = p(theta_j)`, so each assignment of the group's binaries reduces
//! to an interval for `s`. Remaining binaries and lone continuous variables
//! (`y_l`, `t`) are resolved by a small depth-first search whose result only
//! depends on the group binaries' contribution to those rows, so it is
//! memoized. Assignments are then tried best objective first against the LP.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::feasibility::{feasible, LinearConstraintSystem, Relation, Row, RowLabel, MAX_DIM};

use super::{MilpModel, Sense, VarKind};

/// Cap on binaries tied to the LP part; the remaining ones are determined by
/// structural rows.
pub const MAX_BINARIES: usize = 24;

const TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub objective: f64,
    /// One value per model variable.
    pub values: Vec<f64>,
}

struct Group {
    key: Vec<f64>,
    rows: Vec<usize>,
    bins: Vec<usize>,
    /// `(mask over bins, lo, hi)` for every consistent assignment.
    options: Vec<(u32, f64, f64)>,
}

pub fn solve_reference(model: &MilpModel) -> Result<Option<Solution>> {
    model.validate()?;
    let nv = model.vars.len();
    let is_bin: Vec<bool> = model.vars.iter().map(|v| v.kind == VarKind::Binary).collect();

    // Continuous variables outside the objective always go to the LP, even
    // when every row mentions them alone.
    let mut in_lp: Vec<bool> = (0..nv).map(|i| !is_bin[i]).collect();
    for &(i, _) in &model.objective.terms {
        in_lp[i] = false;
    }
    for row in &model.constraints {
        let conts: Vec<usize> = row.terms.iter().map(|t| t.0).filter(|&i| !is_bin[i]).collect();
        if conts.len() >= 2 {
            conts.iter().for_each(|&i| in_lp[i] = true);
        }
    }
    let lp_vars: Vec<usize> = (0..nv).filter(|&i| in_lp[i]).collect();
    let dim = lp_vars.len();
    if dim > MAX_DIM {
        return Err(Error::Capability(format!("{dim} coupled continuous variables exceed {MAX_DIM}")));
    }
    if model.objective.terms.iter().any(|&(i, _)| in_lp[i]) {
        return Err(Error::Capability("objective depends on LP variables".into()));
    }
    let lp_pos: HashMap<usize, usize> = lp_vars.iter().enumerate().map(|(p, &v)| (v, p)).collect();

    let mut plain: Vec<Row> = Vec::new();
    let mut groups: Vec<Group> = Vec::new();
    let mut outer_rows: Vec<usize> = Vec::new();
    for (ri, row) in model.constraints.iter().enumerate() {
        if !row.terms.iter().any(|t| in_lp[t.0]) {
            outer_rows.push(ri);
            continue;
        }
        let mut key = vec![0.0; dim];
        let mut bins = Vec::new();
        for &(i, c) in &row.terms {
            if let Some(&p) = lp_pos.get(&i) {
                key[p] += c;
            } else if is_bin[i] {
                bins.push(i);
            }
        }
        if bins.is_empty() {
            plain.push(Row::new(key, row.relation, row.rhs, RowLabel::Diagonal(ri)));
            continue;
        }
        match groups.iter_mut().find(|g| g.key == key) {
            Some(g) => {
                g.rows.push(ri);
                g.bins.extend(bins);
            }
            None => groups.push(Group { key, rows: vec![ri], bins, options: Vec::new() }),
        }
    }

    let mut owner: HashMap<usize, usize> = HashMap::new();
    for (gi, g) in groups.iter_mut().enumerate() {
        g.bins.sort_unstable();
        g.bins.dedup();
        for &b in &g.bins {
            if owner.insert(b, gi).is_some() {
                return Err(Error::Capability("binary variable couples two spectral groups".into()));
            }
        }
    }
    let group_bins: usize = groups.iter().map(|g| g.bins.len()).sum();
    if group_bins > MAX_BINARIES {
        return Err(Error::Capability(format!(
            "{group_bins} independent binaries exceed the enumeration limit {MAX_BINARIES}"
        )));
    }

    for g in &mut groups {
        for mask in 0..(1u32 << g.bins.len()) {
            let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
            for &ri in &g.rows {
                let row = &model.constraints[ri];
                let fixed: f64 = row
                    .terms
                    .iter()
                    .filter_map(|&(i, c)| g.bins.iter().position(|&b| b == i).map(|p| c * f64::from((mask >> p) & 1)))
                    .sum();
                let rhs = row.rhs - fixed;
                match row.relation {
                    Relation::Ge => lo = lo.max(rhs),
                    Relation::Le => hi = hi.min(rhs),
                    Relation::Eq => {
                        lo = lo.max(rhs);
                        hi = hi.min(rhs);
                    }
                }
            }
            if lo <= hi + 1e-12 {
                g.options.push((mask, lo, hi.max(lo)));
            }
        }
        if g.options.is_empty() {
            return Ok(None);
        }
    }

    let outer_bins: Vec<usize> = (0..nv).filter(|&i| is_bin[i] && !owner.contains_key(&i)).collect();
    let scalars: Vec<usize> = (0..nv).filter(|&i| !is_bin[i] && !in_lp[i]).collect();
    let obj_coef = |i: usize| model.objective.terms.iter().filter(|t| t.0 == i).map(|t| t.1).sum::<f64>();
    let better = |a: f64, b: f64| match model.objective.sense {
        Sense::Minimize => a < b,
        Sense::Maximize => a > b,
    };

    // Objective and outer-row contributions of every group option.
    let opt_obj: Vec<Vec<f64>> = groups
        .iter()
        .map(|g| {
            g.options
                .iter()
                .map(|&(mask, _, _)| g.bins.iter().enumerate().map(|(p, &b)| f64::from((mask >> p) & 1) * obj_coef(b)).sum())
                .collect()
        })
        .collect();
    let opt_sig: Vec<Vec<Vec<f64>>> = groups
        .iter()
        .map(|g| {
            g.options
                .iter()
                .map(|&(mask, _, _)| {
                    outer_rows
                        .iter()
                        .map(|&ri| {
                            model.constraints[ri]
                                .terms
                                .iter()
                                .filter_map(|&(i, c)| g.bins.iter().position(|&b| b == i).map(|p| c * f64::from((mask >> p) & 1)))
                                .sum()
                        })
                        .collect()
                })
                .collect()
        })
        .collect();

    // Enumerate group assignments in mixed radix.
    let radices: Vec<usize> = groups.iter().map(|g| g.options.len()).collect();
    let total: usize = radices.iter().product();
    let mut values = vec![0.0; nv];
    let mut memo: HashMap<Vec<u64>, Option<(f64, Vec<f64>)>> = HashMap::new();
    let mut candidates: Vec<(f64, usize, Vec<u64>)> = Vec::new();
    let mut digits = vec![0usize; groups.len()];
    let mut sig = vec![0.0; outer_rows.len()];
    for combo in 0..total {
        if combo > 0 {
            for (d, r) in digits.iter_mut().zip(&radices) {
                *d += 1;
                if *d < *r {
                    break;
                }
                *d = 0;
            }
        }
        let mut obj = model.objective.constant;
        sig.iter_mut().for_each(|x| *x = 0.0);
        for (gi, &d) in digits.iter().enumerate() {
            obj += opt_obj[gi][d];
            for (x, c) in sig.iter_mut().zip(&opt_sig[gi][d]) {
                *x += c;
            }
        }
        let signature: Vec<u64> = sig.iter().map(|x| x.to_bits()).collect();
        if !memo.contains_key(&signature) {
            for (g, &d) in groups.iter().zip(&digits) {
                let mask = g.options[d].0;
                for (p, &b) in g.bins.iter().enumerate() {
                    values[b] = f64::from((mask >> p) & 1);
                }
            }
            let best = best_outer(model, &outer_rows, &outer_bins, &scalars, &values, &obj_coef, &better)?;
            memo.insert(signature.clone(), best);
        }
        if let Some((outer_obj, _)) = &memo[&signature] {
            candidates.push((obj + outer_obj, combo, signature));
        }
    }

    candidates.sort_by(|a, b| {
        let ord = a.0.total_cmp(&b.0);
        let ord = if model.objective.sense == Sense::Maximize { ord.reverse() } else { ord };
        ord.then(a.1.cmp(&b.1))
    });

    for (obj, combo, signature) in candidates {
        let digits = decode(combo, &radices);
        let mut sys = LinearConstraintSystem::new(dim);
        sys.extend(plain.iter().cloned())?;
        for (gi, (g, &d)) in groups.iter().zip(&digits).enumerate() {
            let (_, lo, hi) = g.options[d];
            if lo == hi {
                sys.push(Row::new(g.key.clone(), Relation::Eq, lo, RowLabel::EigenSign(gi)))?;
                continue;
            }
            if lo.is_finite() {
                sys.push(Row::new(g.key.clone(), Relation::Ge, lo, RowLabel::EigenSign(gi)))?;
            }
            if hi.is_finite() {
                sys.push(Row::new(g.key.clone(), Relation::Le, hi, RowLabel::EigenSign(gi)))?;
            }
        }
        let x = if dim == 0 { Some(Vec::new()) } else { feasible(&sys)? };
        if let Some(x) = x {
            let mut values = vec![0.0; nv];
            for (p, &v) in lp_vars.iter().enumerate() {
                values[v] = x[p];
            }
            for (g, &d) in groups.iter().zip(&digits) {
                for (p, &b) in g.bins.iter().enumerate() {
                    values[b] = f64::from((g.options[d].0 >> p) & 1);
                }
            }
            let (_, outer_values) = memo[&signature].as_ref().expect("candidate has an outer completion");
            for (&i, &v) in outer_bins.iter().chain(&scalars).zip(outer_values) {
                values[i] = v;
            }
            return Ok(Some(Solution { objective: obj, values }));
        }
    }
    Ok(None)
}

fn decode(mut combo: usize, radices: &[usize]) -> Vec<usize> {
    radices
        .iter()
        .map(|&r| {
            let d = combo % r;
            combo /= r;
            d
        })
        .collect()
}

fn scalar_bounds(model: &MilpModel, i: usize) -> (f64, f64) {
    match model.vars[i].kind {
        VarKind::Continuous { lower, upper } => {
            (lower.unwrap_or(f64::NEG_INFINITY), upper.unwrap_or(f64::INFINITY))
        }
        VarKind::Binary => (0.0, 1.0),
    }
}

/// Best completion of the outer binaries and lone continuous variables given
/// fixed group binaries in `values`. Returns the objective contribution and
/// the completion values in the order `outer_bins` then `scalars`.
fn best_outer(
    model: &MilpModel,
    outer_rows: &[usize],
    outer_bins: &[usize],
    scalars: &[usize],
    values: &[f64],
    obj_coef: &dyn Fn(usize) -> f64,
    better: &dyn Fn(f64, f64) -> bool,
) -> Result<Option<(f64, Vec<f64>)>> {
    let nv = values.len();
    let mut state: Vec<Option<f64>> = vec![None; nv];
    for (i, v) in values.iter().enumerate() {
        if model.vars[i].kind == VarKind::Binary && !outer_bins.contains(&i) {
            state[i] = Some(*v);
        }
    }
    let mut best: Option<(f64, Vec<f64>)> = None;
    let mut ranges: Vec<(f64, f64)> = outer_rows.iter().map(|&ri| row_range(model, ri, &state)).collect();
    if !(0..outer_rows.len()).all(|r| range_possible(model, outer_rows[r], ranges[r])) {
        return Ok(best);
    }
    // Coefficients of each outer binary in the outer rows, by local row index.
    let touched: Vec<Vec<(usize, f64)>> = outer_bins
        .iter()
        .map(|&b| {
            outer_rows
                .iter()
                .enumerate()
                .filter_map(|(r, &ri)| {
                    let c: f64 = model.constraints[ri].terms.iter().filter(|t| t.0 == b).map(|t| t.1).sum();
                    (c != 0.0).then_some((r, c))
                })
                .collect()
        })
        .collect();
    // Lone continuous variables of each outer row, by position in `scalars`.
    let mut row_scalars: Vec<Option<(usize, f64)>> = Vec::with_capacity(outer_rows.len());
    for &ri in outer_rows {
        let mut free = model.constraints[ri].terms.iter().filter_map(|&(i, c)| {
            scalars.iter().position(|&s| s == i).map(|p| (p, c))
        });
        row_scalars.push(free.next());
        if free.next().is_some() {
            return Err(Error::Capability("row couples several lone continuous variables".into()));
        }
    }
    let ctx = Dfs { model, outer_rows, outer_bins, scalars, touched, row_scalars, obj_coef, better };
    ctx.run(0, &mut state, &mut ranges, &mut best)?;
    Ok(best)
}

fn row_range(model: &MilpModel, ri: usize, state: &[Option<f64>]) -> (f64, f64) {
    let mut lo = 0.0;
    let mut hi = 0.0;
    for &(i, c) in &model.constraints[ri].terms {
        let (a, b) = match state[i] {
            Some(v) => (v, v),
            None => scalar_bounds(model, i),
        };
        let (x, y) = (c * a, c * b);
        lo += x.min(y);
        hi += x.max(y);
    }
    (lo, hi)
}

fn range_possible(model: &MilpModel, ri: usize, (lo, hi): (f64, f64)) -> bool {
    let rhs = model.constraints[ri].rhs;
    match model.constraints[ri].relation {
        Relation::Ge => hi >= rhs - TOL,
        Relation::Le => lo <= rhs + TOL,
        Relation::Eq => hi >= rhs - TOL && lo <= rhs + TOL,
    }
}

struct Dfs<'a> {
    model: &'a MilpModel,
    outer_rows: &'a [usize],
    outer_bins: &'a [usize],
    scalars: &'a [usize],
    touched: Vec<Vec<(usize, f64)>>,
    row_scalars: Vec<Option<(usize, f64)>>,
    obj_coef: &'a dyn Fn(usize) -> f64,
    better: &'a dyn Fn(f64, f64) -> bool,
}

impl Dfs<'_> {
    /// `ranges` holds the attainable `(min, max)` of every outer row's left
    /// side under the current partial assignment.
    fn run(
        &self,
        depth: usize,
        state: &mut Vec<Option<f64>>,
        ranges: &mut Vec<(f64, f64)>,
        best: &mut Option<(f64, Vec<f64>)>,
    ) -> Result<()> {
        if depth == self.outer_bins.len() {
            return self.leaf(state, ranges, best);
        }
        let touched = &self.touched[depth];
        let saved: Vec<(f64, f64)> = touched.iter().map(|&(r, _)| ranges[r]).collect();
        for v in [0.0, 1.0] {
            state[self.outer_bins[depth]] = Some(v);
            for (&(r, c), &(lo, hi)) in touched.iter().zip(&saved) {
                ranges[r] = (lo - c.min(0.0) + c * v, hi - c.max(0.0) + c * v);
            }
            if touched.iter().all(|&(r, _)| range_possible(self.model, self.outer_rows[r], ranges[r])) {
                self.run(depth + 1, state, ranges, best)?;
            }
        }
        for (&(r, _), &saved) in touched.iter().zip(&saved) {
            ranges[r] = saved;
        }
        state[self.outer_bins[depth]] = None;
        Ok(())
    }

    fn leaf(&self, state: &[Option<f64>], ranges: &[(f64, f64)], best: &mut Option<(f64, Vec<f64>)>) -> Result<()> {
        let Dfs { model, outer_rows, outer_bins, scalars, obj_coef, better, .. } = *self;
        // Every binary is fixed, so each row bounds at most one scalar.
        let mut bounds: Vec<(f64, f64)> = scalars.iter().map(|&s| scalar_bounds(model, s)).collect();
        for (r, &ri) in outer_rows.iter().enumerate() {
            let Some((sp, c)) = self.row_scalars[r] else { continue };
            let row = &model.constraints[ri];
            let (slo, shi) = scalar_bounds(model, scalars[sp]);
            let own = (c * slo).min(c * shi);
            let rest = if own.is_finite() {
                ranges[r].0 - own
            } else {
                row.terms.iter().filter_map(|&(i, a)| state[i].map(|v| a * v)).sum()
            };
            let bound = (row.rhs - rest) / c;
            let slot = &mut bounds[sp];
            let (lower, upper) = match (row.relation, c > 0.0) {
                (Relation::Eq, _) => (true, true),
                (Relation::Ge, true) | (Relation::Le, false) => (true, false),
                _ => (false, true),
            };
            if lower {
                slot.0 = slot.0.max(bound);
            }
            if upper {
                slot.1 = slot.1.min(bound);
            }
        }
        let mut obj = 0.0;
        let mut completion: Vec<f64> = outer_bins.iter().map(|&b| state[b].unwrap()).collect();
        obj += outer_bins.iter().map(|&b| obj_coef(b) * state[b].unwrap()).sum::<f64>();
        for (&s, &(lo, hi)) in scalars.iter().zip(&bounds) {
            if lo > hi + TOL {
                return Ok(());
            }
            let c = obj_coef(s);
            let wants_high = match model.objective.sense {
                Sense::Maximize => c > 0.0,
                Sense::Minimize => c < 0.0,
            };
            let v = if c == 0.0 {
                if lo.is_finite() { lo } else if hi.is_finite() { hi } else { 0.0 }
            } else if wants_high {
                hi
            } else {
                lo
            };
            if !v.is_finite() {
                return Err(Error::Capability("objective is unbounded".into()));
            }
            obj += c * v;
            completion.push(v);
        }
        if best.as_ref().is_none_or(|(b, _)| better(obj, *b)) {
            *best = Some((obj, completion));
        }
        Ok(())
    }
}
