//! Mixed-integer models for the alpha and chi bounds, in their per-vertex /
//! fixed-`l` big-M forms and their unified M-free forms.

mod build;
mod lp;
mod solve;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::feasibility::Relation;

pub use build::{build_alpha_model, build_chi_model, AlphaVariant, ChiVariant, MilpParams};
pub use lp::{export, lp_file_name, ExportFormat};
pub use solve::{solve_reference, Solution, MAX_BINARIES};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum VarKind {
    Continuous { lower: Option<f64>, upper: Option<f64> },
    Binary,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Variable {
    pub name: String,
    pub kind: VarKind,
}

/// `sum terms  relation  rhs`, terms indexing `MilpModel::vars`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Constraint {
    pub name: String,
    pub terms: Vec<(usize, f64)>,
    pub relation: Relation,
    pub rhs: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Objective {
    pub sense: Sense,
    pub terms: Vec<(usize, f64)>,
    pub constant: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Formulation {
    AlphaPerVertex { u: usize },
    AlphaUnified,
    ChiFixedEll { ell: usize },
    ChiUnified,
}

impl fmt::Display for Formulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formulation::AlphaPerVertex { u } => write!(f, "alpha_vertex_u{u}"),
            Formulation::AlphaUnified => f.write_str("alpha_unified"),
            Formulation::ChiFixedEll { ell } => write!(f, "chi_fixed_l{ell}"),
            Formulation::ChiUnified => f.write_str("chi_unified"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelMeta {
    pub formulation: Formulation,
    pub k: usize,
    pub epsilon: f64,
    pub big_m: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MilpModel {
    pub vars: Vec<Variable>,
    pub constraints: Vec<Constraint>,
    pub objective: Objective,
    pub meta: ModelMeta,
}

impl MilpModel {
    pub(crate) fn new(meta: ModelMeta, sense: Sense) -> Self {
        MilpModel {
            vars: Vec::new(),
            constraints: Vec::new(),
            objective: Objective { sense, terms: Vec::new(), constant: 0.0 },
            meta,
        }
    }

    pub(crate) fn add_var(&mut self, name: impl Into<String>, kind: VarKind) -> usize {
        self.vars.push(Variable { name: name.into(), kind });
        self.vars.len() - 1
    }

    /// Adds a row, dropping zero coefficients.
    pub(crate) fn add_row(&mut self, name: impl Into<String>, terms: Vec<(usize, f64)>, relation: Relation, rhs: f64) {
        let terms = terms.into_iter().filter(|&(_, c)| c != 0.0).collect();
        self.constraints.push(Constraint { name: name.into(), terms, relation, rhs });
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    pub fn constraint(&self, name: &str) -> Option<&Constraint> {
        self.constraints.iter().find(|c| c.name == name)
    }

    pub fn binary_vars(&self) -> impl Iterator<Item = &Variable> {
        self.vars.iter().filter(|v| v.kind == VarKind::Binary)
    }

    pub fn continuous_vars(&self) -> impl Iterator<Item = &Variable> {
        self.vars.iter().filter(|v| v.kind != VarKind::Binary)
    }

    /// Every term references a declared variable.
    pub fn validate(&self) -> Result<()> {
        let n = self.vars.len();
        let bad = self
            .constraints
            .iter()
            .flat_map(|c| c.terms.iter())
            .chain(self.objective.terms.iter())
            .any(|&(i, _)| i >= n);
        if bad {
            Err(Error::Contract("model references an undeclared variable".into()))
        } else {
            Ok(())
        }
    }

    /// `sum terms` at `values`.
    pub fn row_lhs(terms: &[(usize, f64)], values: &[f64]) -> f64 {
        terms.iter().map(|&(i, c)| c * values[i]).sum()
    }

    pub fn objective_value(&self, values: &[f64]) -> f64 {
        self.objective.constant + Self::row_lhs(&self.objective.terms, values)
    }

    /// Largest violation of any row, bound or integrality at `values`.
    pub fn max_violation(&self, values: &[f64]) -> f64 {
        let rows = self.constraints.iter().map(|c| {
            let lhs = Self::row_lhs(&c.terms, values);
            match c.relation {
                Relation::Ge => (c.rhs - lhs).max(0.0),
                Relation::Le => (lhs - c.rhs).max(0.0),
                Relation::Eq => (lhs - c.rhs).abs(),
            }
        });
        let bounds = self.vars.iter().zip(values).map(|(v, &x)| match v.kind {
            VarKind::Binary => x.min((x - 1.0).abs()),
            VarKind::Continuous { lower, upper } => {
                let lo = lower.map_or(0.0, |l| (l - x).max(0.0));
                let hi = upper.map_or(0.0, |u| (x - u).max(0.0));
                lo.max(hi)
            }
        });
        rows.chain(bounds).fold(0.0, f64::max)
    }
}
