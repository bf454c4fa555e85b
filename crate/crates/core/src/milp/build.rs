use crate::alpha::power_row;
use crate::error::{Error, Result};
use crate::feasibility::Relation;
use crate::profile::DiagonalProfile;
use crate::spectra::DistinctSpectrum;

use super::{Formulation, MilpModel, ModelMeta, Sense, VarKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaVariant {
    /// `(p(A))_uu = 0` at the distinguished vertex `u`.
    PerVertex(usize),
    Unified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChiVariant {
    /// Exactly `l` positive eigenvalues (with multiplicity).
    FixedEll(usize),
    Unified,
}

/// Indicator constants. The big-M forms use `big_m` and `epsilon`; the
/// unified forms have `M` divided out, leaving `unified_epsilon`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MilpParams {
    pub big_m: f64,
    pub epsilon: f64,
    pub unified_epsilon: f64,
}

impl Default for MilpParams {
    fn default() -> Self {
        MilpParams { big_m: 1e3, epsilon: 1e-3, unified_epsilon: 1e-6 }
    }
}

fn coefficient_vars(model: &mut MilpModel, k: usize) -> Vec<usize> {
    (0..=k)
        .map(|i| model.add_var(format!("a{i}"), VarKind::Continuous { lower: None, upper: None }))
        .collect()
}

fn binaries(model: &mut MilpModel, prefix: &str, count: usize) -> Vec<usize> {
    (0..count).map(|j| model.add_var(format!("{prefix}{j}"), VarKind::Binary)).collect()
}

fn poly_terms(a: &[usize], coeffs: &[f64]) -> Vec<(usize, f64)> {
    a.iter().copied().zip(coeffs.iter().copied()).collect()
}

/// Alpha-bound model with degree cap `prof.k()`.
pub fn build_alpha_model(
    spec: &DistinctSpectrum,
    prof: &DiagonalProfile,
    variant: AlphaVariant,
    params: &MilpParams,
) -> Result<MilpModel> {
    let k = prof.k();
    let n = prof.vertex_count();
    let (formulation, big_m, eps) = match variant {
        AlphaVariant::PerVertex(u) if u >= n => {
            return Err(Error::InvalidArgument(format!("vertex {u} out of range for {n} vertices")))
        }
        AlphaVariant::PerVertex(u) => (Formulation::AlphaPerVertex { u }, params.big_m, params.epsilon),
        AlphaVariant::Unified => (Formulation::AlphaUnified, 1.0, params.unified_epsilon),
    };
    let meta = ModelMeta {
        formulation,
        k,
        epsilon: eps,
        big_m: matches!(variant, AlphaVariant::PerVertex(_)).then_some(big_m),
    };
    let mut model = MilpModel::new(meta, Sense::Minimize);
    let a = coefficient_vars(&mut model, k);
    let b = binaries(&mut model, "b", spec.distinct_count());

    for v in 0..n {
        let coeffs: Vec<f64> = prof.row(v).iter().map(|&c| c as f64).collect();
        let terms = poly_terms(&a, &coeffs);
        match variant {
            AlphaVariant::PerVertex(u) if u == v => model.add_row(format!("diag_u{v}"), terms, Relation::Eq, 0.0),
            _ => model.add_row(format!("diag_v{v}"), terms, Relation::Ge, 0.0),
        }
    }
    for (j, &theta) in spec.thetas().iter().enumerate() {
        let mut terms = poly_terms(&a, &power_row(theta, k));
        terms.push((b[j], -big_m));
        model.add_row(format!("neg_{j}"), terms, Relation::Le, -eps);
    }
    model.objective.terms = b.iter().zip(spec.mults()).map(|(&bj, &m)| (bj, m as f64)).collect();
    Ok(model)
}

/// Chi-bound model (second bound) with degree cap `k`.
pub fn build_chi_model(
    spec: &DistinctSpectrum,
    n: usize,
    k: usize,
    variant: ChiVariant,
    params: &MilpParams,
) -> Result<MilpModel> {
    let (formulation, big_m, eps) = match variant {
        ChiVariant::FixedEll(ell) if ell == 0 || ell >= n => {
            return Err(Error::InvalidArgument(format!("l must be in 1..={}, got {ell}", n.saturating_sub(1))))
        }
        ChiVariant::FixedEll(ell) => (Formulation::ChiFixedEll { ell }, params.big_m, params.epsilon),
        ChiVariant::Unified => (Formulation::ChiUnified, 1.0, params.unified_epsilon),
    };
    let meta = ModelMeta {
        formulation,
        k,
        epsilon: eps,
        big_m: matches!(variant, ChiVariant::FixedEll(_)).then_some(big_m),
    };
    let mut model = MilpModel::new(meta, Sense::Maximize);
    let a = coefficient_vars(&mut model, k);
    let len = spec.distinct_count();
    let b = binaries(&mut model, "b", len);
    let c = binaries(&mut model, "c", len);
    let mults: Vec<f64> = spec.mults().iter().map(|&m| m as f64).collect();

    let mut trace = vec![0.0; k + 1];
    for (&theta, &m) in spec.thetas().iter().zip(&mults) {
        for (acc, v) in trace.iter_mut().zip(power_row(theta, k)) {
            *acc += m * v;
        }
    }
    model.add_row("trace", poly_terms(&a, &trace), Relation::Eq, 0.0);

    for (j, &theta) in spec.thetas().iter().enumerate() {
        let p = poly_terms(&a, &power_row(theta, k));
        let with = |extra: (usize, f64)| {
            let mut t = p.clone();
            t.push(extra);
            t
        };
        // b_j = 0 forces p < 0; c_j = 0 forces p <= 0; c_j = 1 forces p > 0.
        model.add_row(format!("neg_{j}"), with((b[j], -big_m)), Relation::Le, -eps);
        model.add_row(format!("pos_{j}"), with((c[j], -big_m)), Relation::Le, 0.0);
        model.add_row(format!("posc_{j}"), with((c[j], -big_m)), Relation::Ge, eps - big_m);
    }
    let card: Vec<(usize, f64)> = c.iter().copied().zip(mults.iter().copied()).collect();
    let nf = n as f64;

    match variant {
        ChiVariant::FixedEll(ell) => {
            model.add_row("card", card, Relation::Eq, ell as f64);
            let l = ell as f64;
            model.objective.constant = 1.0 + nf / l;
            model.objective.terms = b.iter().zip(&mults).map(|(&bj, &m)| (bj, -m / l)).collect();
        }
        ChiVariant::Unified => {
            let y: Vec<usize> = (1..n).map(|l| model.add_var(format!("y{l}"), VarKind::Binary)).collect();
            let t = model.add_var("t", VarKind::Continuous { lower: Some(0.0), upper: Some(nf) });
            model.add_row("select", y.iter().map(|&v| (v, 1.0)).collect(), Relation::Eq, 1.0);
            let mut terms = card;
            terms.extend(y.iter().enumerate().map(|(i, &v)| (v, -((i + 1) as f64))));
            model.add_row("card", terms, Relation::Eq, 0.0);
            for (i, &yl) in y.iter().enumerate() {
                let l = (i + 1) as f64;
                let mut terms = vec![(t, l)];
                terms.extend(b.iter().zip(&mults).map(|(&bj, &m)| (bj, m)));
                terms.push((yl, l * nf));
                model.add_row(format!("lin_l{}", i + 1), terms, Relation::Le, nf + l * nf);
            }
            model.objective.constant = 1.0;
            model.objective.terms = vec![(t, 1.0)];
        }
    }
    Ok(model)
}
