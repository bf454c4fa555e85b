//! Feasibility of small linear systems over polynomial coefficient space.
//!
//! A nonempty polyhedron intersected with a bounding box is a polytope, and a
//! polytope has a vertex where `dim` linearly independent rows are tight. We
//! enumerate those candidate points directly: every equality row is always
//! tight, the remaining tight rows are picked from the inequalities and the
//! box faces.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_DIM: usize = 6;
/// Half-width of the bounding box `[-B, B]^dim`.
pub const BOX_HALF_WIDTH: f64 = 1e6;
/// Allowed violation per unit-normalized row.
pub const SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
}

/// Where a row came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RowLabel {
    /// Sign condition on `p(theta_j)`.
    EigenSign(usize),
    /// Closed-walk condition at a vertex (or a representative after pruning).
    Diagonal(usize),
    Trace,
    Margin,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub coeffs: Vec<f64>,
    pub relation: Relation,
    pub rhs: f64,
    pub label: RowLabel,
}

impl Row {
    pub fn new(coeffs: Vec<f64>, relation: Relation, rhs: f64, label: RowLabel) -> Self {
        Row { coeffs, relation, rhs, label }
    }

    pub fn lhs(&self, x: &[f64]) -> f64 {
        self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum()
    }

    /// Amount by which `x` violates the row (zero when satisfied).
    pub fn violation(&self, x: &[f64]) -> f64 {
        let lhs = self.lhs(x);
        match self.relation {
            Relation::Ge => (self.rhs - lhs).max(0.0),
            Relation::Le => (lhs - self.rhs).max(0.0),
            Relation::Eq => (lhs - self.rhs).abs(),
        }
    }
}

/// Rows over the unknowns `a_0..a_{dim-1}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinearConstraintSystem {
    dim: usize,
    rows: Vec<Row>,
}

impl LinearConstraintSystem {
    pub fn new(dim: usize) -> Self {
        LinearConstraintSystem { dim, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn push(&mut self, row: Row) -> Result<()> {
        if row.coeffs.len() != self.dim {
            return Err(Error::InvalidArgument(format!(
                "row has {} coefficients, system dimension is {}",
                row.coeffs.len(),
                self.dim
            )));
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn extend(&mut self, rows: impl IntoIterator<Item = Row>) -> Result<()> {
        rows.into_iter().try_for_each(|r| self.push(r))
    }

    /// Largest violation of any row, each row scaled to unit norm.
    pub fn max_violation(&self, x: &[f64]) -> f64 {
        self.rows
            .iter()
            .map(|r| {
                let norm = euclid(&r.coeffs);
                if norm == 0.0 { r.violation(x) } else { r.violation(x) / norm }
            })
            .fold(0.0, f64::max)
    }

    pub fn accepts(&self, x: &[f64]) -> bool {
        self.max_violation(x) <= SLACK
    }
}

fn euclid(v: &[f64]) -> f64 {
    v.iter().map(|t| t * t).sum::<f64>().sqrt()
}

#[derive(Clone, Copy)]
struct NormRow {
    coeffs: [f64; MAX_DIM],
    relation: Relation,
    rhs: f64,
}

impl NormRow {
    #[inline]
    fn violation(&self, x: &[f64; MAX_DIM], dim: usize) -> f64 {
        let lhs: f64 = (0..dim).map(|i| self.coeffs[i] * x[i]).sum();
        match self.relation {
            Relation::Ge => self.rhs - lhs,
            Relation::Le => lhs - self.rhs,
            Relation::Eq => (lhs - self.rhs).abs(),
        }
    }
}

/// Returns a point satisfying every row (within slack), or `None`.
pub fn feasible(sys: &LinearConstraintSystem) -> Result<Option<Vec<f64>>> {
    let dim = sys.dim;
    if dim == 0 || dim > MAX_DIM {
        return Err(Error::Capability(format!(
            "feasibility enumeration supports 1..={MAX_DIM} unknowns (got {dim}); use an external LP solver"
        )));
    }

    let mut rows: Vec<NormRow> = Vec::with_capacity(sys.rows.len() + 2 * dim);
    for r in &sys.rows {
        let norm = euclid(&r.coeffs);
        if norm == 0.0 {
            if r.violation(&vec![0.0; dim]) > SLACK {
                return Ok(None);
            }
            continue;
        }
        let mut coeffs = [0.0; MAX_DIM];
        for (c, v) in coeffs.iter_mut().zip(&r.coeffs) {
            *c = v / norm;
        }
        let row = NormRow { coeffs, relation: r.relation, rhs: r.rhs / norm };
        let duplicate = rows.iter().any(|o| {
            o.relation == row.relation && o.rhs == row.rhs && o.coeffs == row.coeffs
        });
        if !duplicate {
            rows.push(row);
        }
    }
    for i in 0..dim {
        let mut coeffs = [0.0; MAX_DIM];
        coeffs[i] = 1.0;
        rows.push(NormRow { coeffs, relation: Relation::Le, rhs: BOX_HALF_WIDTH });
        rows.push(NormRow { coeffs, relation: Relation::Ge, rhs: -BOX_HALF_WIDTH });
    }

    let (equalities, inequalities): (Vec<usize>, Vec<usize>) =
        (0..rows.len()).partition(|&i| rows[i].relation == Relation::Eq);
    let basis_eq = independent_subset(&rows, &equalities, dim);
    let free = dim - basis_eq.len();
    if free > inequalities.len() {
        return Ok(None);
    }

    let mut check_order: Vec<usize> = (0..rows.len()).collect();
    let mut chosen: Vec<usize> = (0..free).collect();
    let mut tight = Vec::with_capacity(dim);
    loop {
        tight.clear();
        tight.extend(basis_eq.iter().copied());
        tight.extend(chosen.iter().map(|&c| inequalities[c]));
        if let Some(x) = solve_tight(&rows, &tight, dim) {
            let mut ok = true;
            for pos in 0..check_order.len() {
                let ri = check_order[pos];
                if rows[ri].violation(&x, dim) > SLACK {
                    check_order[..=pos].rotate_right(1);
                    ok = false;
                    break;
                }
            }
            if ok {
                return Ok(Some(x[..dim].to_vec()));
            }
        }
        if !next_combination(&mut chosen, inequalities.len()) {
            return Ok(None);
        }
    }
}

/// Greedy maximal linearly independent subset of the given rows.
fn independent_subset(rows: &[NormRow], candidates: &[usize], dim: usize) -> Vec<usize> {
    let mut basis: Vec<[f64; MAX_DIM]> = Vec::new();
    let mut picked = Vec::new();
    for &ri in candidates {
        let mut v = rows[ri].coeffs;
        for b in &basis {
            let pivot = (0..dim).max_by(|&i, &j| b[i].abs().total_cmp(&b[j].abs())).unwrap();
            let f = v[pivot] / b[pivot];
            for i in 0..dim {
                v[i] -= f * b[i];
            }
        }
        if v[..dim].iter().any(|t| t.abs() > 1e-10) {
            basis.push(v);
            picked.push(ri);
            if picked.len() == dim {
                break;
            }
        }
    }
    picked
}

/// Solves the square system formed by treating `tight` rows as equalities.
fn solve_tight(rows: &[NormRow], tight: &[usize], dim: usize) -> Option<[f64; MAX_DIM]> {
    let mut m = [[0.0f64; MAX_DIM + 1]; MAX_DIM];
    for (r, &ri) in tight.iter().enumerate() {
        m[r][..dim].copy_from_slice(&rows[ri].coeffs[..dim]);
        m[r][dim] = rows[ri].rhs;
    }
    for col in 0..dim {
        let pivot = (col..dim).max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))?;
        if m[pivot][col].abs() < 1e-12 {
            return None;
        }
        m.swap(col, pivot);
        for r in col + 1..dim {
            let f = m[r][col] / m[col][col];
            if f != 0.0 {
                for c in col..=dim {
                    m[r][c] -= f * m[col][c];
                }
            }
        }
    }
    let mut x = [0.0; MAX_DIM];
    for r in (0..dim).rev() {
        let s: f64 = (r + 1..dim).map(|c| m[r][c] * x[c]).sum();
        x[r] = (m[r][dim] - s) / m[r][r];
    }
    x[..dim].iter().all(|v| v.is_finite()).then_some(x)
}

/// Advances `idx` (strictly increasing, values `< n`) to the next k-subset.
pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(coeffs: &[f64], relation: Relation, rhs: f64) -> Row {
        Row::new(coeffs.to_vec(), relation, rhs, RowLabel::Margin)
    }

    #[test]
    fn single_nonnegativity() {
        let mut s = LinearConstraintSystem::new(1);
        s.push(row(&[1.0], Relation::Ge, 0.0)).unwrap();
        let x = feasible(&s).unwrap().unwrap();
        assert!(s.accepts(&x));
        assert_eq!(x, vec![0.0]);
    }

    #[test]
    fn contradictory_bounds() {
        let mut s = LinearConstraintSystem::new(1);
        s.push(row(&[1.0], Relation::Ge, 1.0)).unwrap();
        s.push(row(&[1.0], Relation::Le, -1.0)).unwrap();
        assert_eq!(feasible(&s).unwrap(), None);
    }

    #[test]
    fn capability_limit() {
        let s = LinearConstraintSystem::new(7);
        assert!(matches!(feasible(&s), Err(Error::Capability(_))));
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let mut s = LinearConstraintSystem::new(2);
        assert!(s.push(row(&[1.0], Relation::Ge, 0.0)).is_err());
    }

    #[test]
    fn equality_rows_respected() {
        let mut s = LinearConstraintSystem::new(3);
        s.push(row(&[1.0, 1.0, 1.0], Relation::Eq, 0.0)).unwrap();
        s.push(row(&[1.0, 0.0, 0.0], Relation::Ge, 1.0)).unwrap();
        s.push(row(&[0.0, 1.0, 0.0], Relation::Ge, 1.0)).unwrap();
        let x = feasible(&s).unwrap().unwrap();
        assert!(s.accepts(&x));
        assert!((x.iter().sum::<f64>()).abs() < 1e-9);
    }

    #[test]
    fn combinations_cover_all_subsets() {
        let mut idx = vec![0, 1];
        let mut count = 1;
        while next_combination(&mut idx, 5) {
            count += 1;
        }
        assert_eq!(count, 10);
    }
}
