use std::fmt::Write;

use crate::feasibility::Relation;

use super::{MilpModel, Sense, VarKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    /// CPLEX-style LP text.
    LpText,
}

/// `<graph>_<formulation>_k<k>.lp`
pub fn lp_file_name(graph: &str, model: &MilpModel) -> String {
    format!("{graph}_{}_k{}.lp", model.meta.formulation, model.meta.k)
}

fn linear(out: &mut String, model: &MilpModel, terms: &[(usize, f64)]) {
    if terms.is_empty() {
        out.push_str("0 ");
        out.push_str(model.vars.first().map_or("x", |v| v.name.as_str()));
        return;
    }
    for (pos, &(i, c)) in terms.iter().enumerate() {
        let name = &model.vars[i].name;
        match (pos, c < 0.0) {
            (0, false) => write!(out, "{c} {name}"),
            (0, true) => write!(out, "- {} {name}", -c),
            (_, false) => write!(out, " + {c} {name}"),
            (_, true) => write!(out, " - {} {name}", -c),
        }
        .unwrap();
    }
}

/// Serializes a model. Output depends only on the model, so equal models
/// give byte-identical text.
pub fn export(model: &MilpModel, format: ExportFormat) -> String {
    match format {
        ExportFormat::LpText => lp_text(model),
    }
}

fn lp_text(model: &MilpModel) -> String {
    let mut out = String::new();
    let meta = &model.meta;
    writeln!(out, "\\ formulation {} k={} epsilon={}", meta.formulation, meta.k, meta.epsilon).unwrap();
    if let Some(m) = meta.big_m {
        writeln!(out, "\\ big_m={m}").unwrap();
    }
    out.push_str(match model.objective.sense {
        Sense::Minimize => "Minimize\n",
        Sense::Maximize => "Maximize\n",
    });
    out.push_str(" obj: ");
    linear(&mut out, model, &model.objective.terms);
    let c = model.objective.constant;
    if c > 0.0 {
        write!(out, " + {c}").unwrap();
    } else if c < 0.0 {
        write!(out, " - {}", -c).unwrap();
    }
    out.push_str("\nSubject To\n");
    for row in &model.constraints {
        write!(out, " {}: ", row.name).unwrap();
        linear(&mut out, model, &row.terms);
        let rel = match row.relation {
            Relation::Ge => ">=",
            Relation::Le => "<=",
            Relation::Eq => "=",
        };
        writeln!(out, " {rel} {}", row.rhs).unwrap();
    }
    out.push_str("Bounds\n");
    for v in &model.vars {
        if let VarKind::Continuous { lower, upper } = v.kind {
            match (lower, upper) {
                (None, None) => writeln!(out, " {} free", v.name),
                (Some(l), Some(u)) => writeln!(out, " {l} <= {} <= {u}", v.name),
                (Some(l), None) => writeln!(out, " {} >= {l}", v.name),
                (None, Some(u)) => writeln!(out, " -inf <= {} <= {u}", v.name),
            }
            .unwrap();
        }
    }
    out.push_str("Binaries\n");
    let names: Vec<&str> = model.binary_vars().map(|v| v.name.as_str()).collect();
    if !names.is_empty() {
        writeln!(out, " {}", names.join(" ")).unwrap();
    }
    out.push_str("End\n");
    out
}
