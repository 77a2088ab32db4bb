//! Algebra selection: the dihedral family or a custom JSON description.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use hopfore::exactnum::{Cyclotomic, Matrix};
use hopfore::grouprep::{
    custom_algebra, dihedral_algebra, AlgebraData, CustomAlgebraInput, GroupData,
};

use crate::CliError;

/// Custom algebra file. Scalars are cyclotomic literals in Q(ζ_order).
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub order: u32,
    /// Multiplication table, `table[a][b] = ab`.
    pub table: Vec<Vec<usize>>,
    pub generators: Vec<usize>,
    pub central: usize,
    /// χ(g) for every group element.
    pub chi: Vec<String>,
    pub simples: Vec<SimpleFile>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimpleFile {
    pub name: String,
    /// One matrix per generator, as rows of literals.
    pub matrices: Vec<Vec<Vec<String>>>,
}

fn scalar(src: &str, order: u32) -> Result<Cyclotomic, CliError> {
    Cyclotomic::parse(src, order).map_err(|e| CliError::Usage(format!("bad scalar `{src}`: {e}")))
}

pub fn load_custom(path: &Path) -> Result<AlgebraData, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let file: AlgebraFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let order = file.order;
    let group =
        GroupData::new(file.table, file.generators).map_err(|e| CliError::Usage(e.to_string()))?;
    let chi = file
        .chi
        .iter()
        .map(|c| scalar(c, order))
        .collect::<Result<_, _>>()?;
    let mut simples = Vec::new();
    for s in file.simples {
        let mut mats = Vec::new();
        for rows in s.matrices {
            let cols = rows.first().map_or(0, Vec::len);
            let rows = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|c| scalar(c, order))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            mats.push(
                Matrix::from_rows(order, cols, rows).map_err(|e| CliError::Usage(e.to_string()))?,
            );
        }
        simples.push((s.name, mats));
    }
    custom_algebra(CustomAlgebraInput {
        order,
        group,
        simples,
        central: file.central,
        chi,
    })
    .map_err(|e| CliError::Usage(e.to_string()))
}

/// `--algebra FILE` wins over `--m M`; the default is m = 3.
pub fn select(m: Option<u32>, file: Option<&Path>) -> Result<Arc<AlgebraData>, CliError> {
    let alg = match (file, m) {
        (Some(_), Some(_)) => {
            return Err(CliError::Usage(
                "give either --m or --algebra, not both".into(),
            ))
        }
        (Some(path), None) => load_custom(path)?,
        (None, m) => {
            dihedral_algebra(m.unwrap_or(3)).map_err(|e| CliError::Usage(e.to_string()))?
        }
    };
    Ok(Arc::new(alg))
}

pub fn dihedral(m: u32) -> Result<Arc<AlgebraData>, CliError> {
    select(Some(m), None)
}

#[derive(Debug, Serialize)]
pub struct SimpleSummary {
    pub name: String,
    pub dim: usize,
    pub sigma: String,
    pub omega: String,
    pub orbit_rep: bool,
}

#[derive(Debug, Serialize)]
pub struct AlgebraSummary {
    pub field_order: u32,
    pub group_order: usize,
    pub dihedral_m: Option<u32>,
    pub central: usize,
    pub q: String,
    pub q_order: u32,
    pub s: u32,
    pub chi_simple: String,
    pub simples: Vec<SimpleSummary>,
    pub orbit_reps: Vec<String>,
}

pub fn summary(alg: &AlgebraData) -> AlgebraSummary {
    let reps = alg.orbit_reps();
    AlgebraSummary {
        field_order: alg.order(),
        group_order: alg.group().size(),
        dihedral_m: alg.dihedral_m(),
        central: alg.central(),
        q: alg.q().to_string(),
        q_order: alg.q_order(),
        s: alg.s(),
        chi_simple: alg.name(alg.chi_simple()).to_string(),
        simples: alg
            .simple_ids()
            .map(|i| SimpleSummary {
                name: alg.name(i).to_string(),
                dim: alg.dim(i),
                sigma: alg.name(alg.sigma(i)).to_string(),
                omega: alg.omega(i).to_string(),
                orbit_rep: reps.contains(&i),
            })
            .collect(),
        orbit_reps: reps.iter().map(|&i| alg.name(i).to_string()).collect(),
    }
}

pub fn render_summary(s: &AlgebraSummary) -> String {
    let mut out = String::new();
    let family = s
        .dihedral_m
        .map_or("custom".to_string(), |m| format!("dihedral, m = {m}"));
    out.push_str(&format!("algebra: {family}\n"));
    out.push_str(&format!("field: Q(w), w = exp(2πi/{})\n", s.field_order));
    out.push_str(&format!(
        "|G| = {}, a = g{}, q = {}, |q| = {}, s = {}\n",
        s.group_order, s.central, s.q, s.q_order, s.s
    ));
    out.push_str(&format!("chi = {}\n", s.chi_simple));
    out.push_str("simple\tdim\tsigma\tomega\tI_0\n");
    for r in &s.simples {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\n",
            r.name,
            r.dim,
            r.sigma,
            r.omega,
            if r.orbit_rep { "yes" } else { "" }
        ));
    }
    out.push_str(&format!("I_0 = {{{}}}\n", s.orbit_reps.join(", ")));
    out
}
