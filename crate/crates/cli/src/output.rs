//! JSON documents and text rendering.

use std::collections::BTreeMap;

use serde::Serialize;

use hopfore::decomp::IndecLabel;
use hopfore::exactnum::{Cyclotomic, Matrix};
use hopfore::greenring::Check;
use hopfore::grouprep::AlgebraData;
use hopfore::hopfmod::ExplicitModule;

#[derive(Debug, Serialize, PartialEq, Eq)]
pub struct Component {
    pub label: String,
    pub multiplicity: u32,
    pub dim: usize,
}

/// A decomposition into indecomposables, labels in canonical order.
#[derive(Debug, Serialize)]
pub struct DecompJson {
    pub total_dim: usize,
    pub components: Vec<Component>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eigenvalues_found: Option<Vec<String>>,
}

impl DecompJson {
    pub fn new(
        alg: &AlgebraData,
        m: &BTreeMap<IndecLabel, u32>,
        eigen: Option<&[Cyclotomic]>,
    ) -> Self {
        let components: Vec<Component> = m
            .iter()
            .map(|(l, &k)| Component {
                label: l.display(alg),
                multiplicity: k,
                dim: l.dim(alg),
            })
            .collect();
        DecompJson {
            total_dim: components
                .iter()
                .map(|c| c.dim * c.multiplicity as usize)
                .sum(),
            components,
            eigenvalues_found: eigen.map(|e| e.iter().map(ToString::to_string).collect()),
        }
    }

    /// `{V[4](eps), 2*V[1](eps;2)}`.
    pub fn render(&self) -> String {
        let items: Vec<String> = self
            .components
            .iter()
            .map(|c| {
                if c.multiplicity == 1 {
                    c.label.clone()
                } else {
                    format!("{}*{}", c.multiplicity, c.label)
                }
            })
            .collect();
        format!("{{{}}}", items.join(", "))
    }
}

#[derive(Debug, Serialize)]
pub struct TensorJson {
    pub left: String,
    pub right: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed: Option<DecompJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<DecompJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct RingJson {
    pub ring: String,
    pub basis: String,
    pub expr: String,
    pub value: String,
}

#[derive(Debug, Serialize)]
pub struct FusionRow {
    pub left: String,
    pub right: String,
    pub closed: String,
    pub matrix: String,
    pub agree: bool,
}

#[derive(Debug, Serialize)]
pub struct FusionSummary {
    pub labels: usize,
    pub pairs: usize,
    pub mismatches: usize,
    pub rows: Vec<FusionRow>,
}

/// One identity of a presentation report.
#[derive(Debug, Serialize)]
pub struct ReportRow {
    pub identity_name: String,
    pub relation: String,
    pub status: String,
    pub lhs: String,
    pub rhs: String,
}

impl From<&Check> for ReportRow {
    fn from(c: &Check) -> Self {
        ReportRow {
            identity_name: c.name.clone(),
            relation: c.relation.clone(),
            status: if c.passed { "pass" } else { "fail" }.into(),
            lhs: c.lhs.clone(),
            rhs: c.rhs.clone(),
        }
    }
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect()
}

/// Matrices of an explicit module; entries are literals in Q(w), w = exp(2πi/field_order).
#[derive(Debug, Serialize)]
pub struct ModuleJson {
    pub label: String,
    pub field_order: u32,
    pub dihedral_m: Option<u32>,
    pub dim: usize,
    /// Group generators as element indices, matching `generators`.
    pub group_generators: Vec<usize>,
    pub generators: Vec<Vec<Vec<String>>>,
    pub x_action: Vec<Vec<String>>,
    pub provenance: Vec<String>,
}

impl ModuleJson {
    pub fn new(alg: &AlgebraData, label: &IndecLabel, m: &ExplicitModule) -> Self {
        ModuleJson {
            label: label.display(alg),
            field_order: alg.order(),
            dihedral_m: alg.dihedral_m(),
            dim: m.dim(),
            group_generators: alg.group().generators().to_vec(),
            generators: m.gen_actions().iter().map(matrix_rows).collect(),
            x_action: matrix_rows(m.x_action()),
            provenance: m.provenance().iter().map(ToString::to_string).collect(),
        }
    }
}
