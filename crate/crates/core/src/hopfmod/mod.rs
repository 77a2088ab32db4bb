//! Explicit H-modules: matrices for the group generators and for x.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::decomp::IndecLabel;
use crate::exactnum::{Cyclotomic, ExactError, Matrix};
use crate::grouprep::{element_actions, AlgebraData, SimpleId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error("unknown simple label {0}")]
    UnknownLabel(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(
        "β = 0 is not an eigen parameter; V[t](i;0) is V[{ts}](i), use the nilpotent constructor"
    )]
    ZeroBeta { ts: u32 },
    #[error("modules are over different algebras")]
    AlgebraMismatch,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// A finite-dimensional H-module given by matrices.
#[derive(Clone, Debug)]
pub struct ExplicitModule {
    alg: Arc<AlgebraData>,
    dim: usize,
    gen_actions: Vec<Matrix>,
    x_action: Matrix,
    provenance: BTreeSet<Cyclotomic>,
    label_hint: Option<IndecLabel>,
}

impl ExplicitModule {
    /// Assembles a module from raw matrices. No relation is checked here;
    /// run [`validate`] before trusting the result.
    pub fn from_parts(
        alg: Arc<AlgebraData>,
        gen_actions: Vec<Matrix>,
        x_action: Matrix,
        provenance: BTreeSet<Cyclotomic>,
    ) -> Result<Self, HopfError> {
        let dim = x_action.rows();
        let order = alg.order();
        if gen_actions.len() != alg.group().generators().len() {
            return Err(HopfError::InvalidParameter(format!(
                "{} generator matrices for {} generators",
                gen_actions.len(),
                alg.group().generators().len()
            )));
        }
        for m in gen_actions.iter().chain([&x_action]) {
            if m.rows() != dim || m.cols() != dim {
                return Err(HopfError::InvalidParameter(
                    "action matrices must be square of equal size".into(),
                ));
            }
            if m.order() != order {
                return Err(ExactError::OrderMismatch {
                    left: order,
                    right: m.order(),
                }
                .into());
            }
        }
        if let Some(c) = provenance.iter().find(|c| c.order() != order) {
            return Err(ExactError::OrderMismatch {
                left: order,
                right: c.order(),
            }
            .into());
        }
        Ok(ExplicitModule {
            alg,
            dim,
            gen_actions,
            x_action,
            provenance,
            label_hint: None,
        })
    }

    pub fn alg(&self) -> &Arc<AlgebraData> {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gen_actions(&self) -> &[Matrix] {
        &self.gen_actions
    }

    pub fn x_action(&self) -> &Matrix {
        &self.x_action
    }

    pub fn provenance(&self) -> &BTreeSet<Cyclotomic> {
        &self.provenance
    }

    pub fn label_hint(&self) -> Option<&IndecLabel> {
        self.label_hint.as_ref()
    }

    /// Matrices of every group element.
    pub fn element_actions(&self) -> Vec<Matrix> {
        if self.dim == 0 {
            let z = Matrix::zeros(self.alg.order(), 0, 0);
            return vec![z; self.alg.group().size()];
        }
        element_actions(self.alg.group(), &self.gen_actions)
    }

    /// The action of x^s.
    pub fn x_power_s(&self) -> Matrix {
        self.x_action.mat_pow(self.alg.s()).expect("square")
    }
}

fn check_label(alg: &AlgebraData, i: SimpleId) -> Result<(), HopfError> {
    if alg.contains(i) {
        Ok(())
    } else {
        Err(HopfError::UnknownLabel(i.to_string()))
    }
}

/// Generator matrices on ⊕_{j<blocks} x^j V_i, where g acts on block j as
/// χ^j(g)·ρ_i(g).
fn block_generators(alg: &AlgebraData, i: SimpleId, blocks: usize) -> Vec<Matrix> {
    let rep = alg.simple(i);
    let d = rep.dim;
    alg.group()
        .generators()
        .iter()
        .zip(&rep.gen_matrices)
        .map(|(&g, rho)| {
            let mut m = Matrix::zeros(alg.order(), blocks * d, blocks * d);
            for j in 0..blocks {
                let c = alg.chi_pow(g, j as i64);
                for r in 0..d {
                    for k in 0..d {
                        let v = rho.get(r, k);
                        if !v.is_zero() {
                            m.set(j * d + r, j * d + k, &c * v);
                        }
                    }
                }
            }
            m
        })
        .collect()
}

/// x sending block j identically onto block j+1, killing the last block.
fn shift_matrix(order: u32, d: usize, blocks: usize) -> Matrix {
    let mut x = Matrix::zeros(order, blocks * d, blocks * d);
    for j in 0..blocks.saturating_sub(1) {
        for r in 0..d {
            x.set((j + 1) * d + r, j * d + r, Cyclotomic::one(order));
        }
    }
    x
}

/// V_t(i) = M(V_i)/J_t(i), of dimension t·dim V_i.
pub fn module_nilpotent(
    alg: &Arc<AlgebraData>,
    t: u32,
    i: SimpleId,
) -> Result<ExplicitModule, HopfError> {
    check_label(alg, i)?;
    if t == 0 {
        return Err(HopfError::InvalidParameter("t must be positive".into()));
    }
    let d = alg.dim(i);
    let blocks = t as usize;
    let order = alg.order();
    Ok(ExplicitModule {
        alg: alg.clone(),
        dim: blocks * d,
        gen_actions: block_generators(alg, i, blocks),
        x_action: shift_matrix(order, d, blocks),
        provenance: BTreeSet::from([Cyclotomic::zero(order)]),
        label_hint: Some(IndecLabel::Nil { i, t }),
    })
}

/// Coefficients α_0..α_{t−1} with (y − β)^t = y^t − Σ α_l y^l.
pub fn eigen_relation(beta: &Cyclotomic, t: u32) -> Vec<Cyclotomic> {
    let order = beta.order();
    // (y − β)^t, lowest degree first.
    let mut p = vec![Cyclotomic::one(order)];
    for _ in 0..t {
        let mut next = vec![Cyclotomic::zero(order); p.len() + 1];
        for (k, c) in p.iter().enumerate() {
            next[k + 1] = &next[k + 1] + c;
            next[k] = &next[k] - &(c * beta);
        }
        p = next;
    }
    p.truncate(t as usize);
    p.iter().map(|c| -c).collect()
}

/// V_t(i, β) = M(V_i)/(x^s − β)^t M(V_i), of dimension t·s·dim V_i.
pub fn module_eigen(
    alg: &Arc<AlgebraData>,
    t: u32,
    i: SimpleId,
    beta: &Cyclotomic,
) -> Result<ExplicitModule, HopfError> {
    check_label(alg, i)?;
    if t == 0 {
        return Err(HopfError::InvalidParameter("t must be positive".into()));
    }
    if beta.order() != alg.order() {
        return Err(ExactError::OrderMismatch {
            left: alg.order(),
            right: beta.order(),
        }
        .into());
    }
    let s = alg.s();
    if beta.is_zero() {
        return Err(HopfError::ZeroBeta { ts: t * s });
    }
    let d = alg.dim(i);
    let blocks = (t * s) as usize;
    let order = alg.order();
    let mut x = shift_matrix(order, d, blocks);
    let last = blocks - 1;
    for (l, a) in eigen_relation(beta, t).into_iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let target = l * s as usize;
        for r in 0..d {
            x.set(target * d + r, last * d + r, a.clone());
        }
    }
    Ok(ExplicitModule {
        alg: alg.clone(),
        dim: blocks * d,
        gen_actions: block_generators(alg, i, blocks),
        x_action: x,
        provenance: BTreeSet::from([beta.clone()]),
        label_hint: Some(IndecLabel::Eig {
            i: alg.orbit_rep(i),
            t,
            beta: beta.clone(),
        }),
    })
}

/// The module of an indecomposable label.
pub fn build(alg: &Arc<AlgebraData>, label: &IndecLabel) -> Result<ExplicitModule, HopfError> {
    match label {
        IndecLabel::Nil { i, t } => module_nilpotent(alg, *t, *i),
        IndecLabel::Eig { i, t, beta } => module_eigen(alg, *t, *i, beta),
    }
}

fn same_algebra(m: &ExplicitModule, n: &ExplicitModule) -> Result<(), HopfError> {
    if Arc::ptr_eq(&m.alg, &n.alg) || m.alg == n.alg {
        Ok(())
    } else {
        Err(HopfError::AlgebraMismatch)
    }
}

/// M ⊗ N through Δ(g) = g⊗g and Δ(x) = x⊗a + 1⊗x, left factor major.
pub fn tensor(m: &ExplicitModule, n: &ExplicitModule) -> Result<ExplicitModule, HopfError> {
    same_algebra(m, n)?;
    let alg = &m.alg;
    let gen_actions = m
        .gen_actions
        .iter()
        .zip(&n.gen_actions)
        .map(|(a, b)| a.tensor_product(b))
        .collect::<Result<Vec<_>, _>>()?;
    let a_on_n = n.element_actions().swap_remove(alg.central());
    let x = m
        .x_action
        .tensor_product(&a_on_n)?
        .add(&Matrix::identity(alg.order(), m.dim).tensor_product(&n.x_action)?)?;
    let mut units: BTreeSet<Cyclotomic> = alg.simple_ids().map(|i| alg.omega_s(i)).collect();
    units.insert(Cyclotomic::one(alg.order()));
    let mut provenance: BTreeSet<Cyclotomic> = m.provenance.union(&n.provenance).cloned().collect();
    for a in &m.provenance {
        for b in &n.provenance {
            for u in &units {
                provenance.insert(&(u * a) + b);
            }
        }
    }
    Ok(ExplicitModule {
        alg: alg.clone(),
        dim: m.dim * n.dim,
        gen_actions,
        x_action: x,
        provenance,
        label_hint: None,
    })
}

/// M ⊕ N with block-diagonal actions.
pub fn direct_sum(m: &ExplicitModule, n: &ExplicitModule) -> Result<ExplicitModule, HopfError> {
    same_algebra(m, n)?;
    let gen_actions = m
        .gen_actions
        .iter()
        .zip(&n.gen_actions)
        .map(|(a, b)| a.direct_sum(b))
        .collect::<Result<Vec<_>, _>>()?;
    let label_hint = match (m.dim, n.dim) {
        (_, 0) => m.label_hint.clone(),
        (0, _) => n.label_hint.clone(),
        _ => None,
    };
    Ok(ExplicitModule {
        alg: m.alg.clone(),
        dim: m.dim + n.dim,
        gen_actions,
        x_action: m.x_action.direct_sum(&n.x_action)?,
        provenance: m.provenance.union(&n.provenance).cloned().collect(),
        label_hint,
    })
}

/// The zero module.
pub fn zero_module(alg: &Arc<AlgebraData>) -> ExplicitModule {
    let z = Matrix::zeros(alg.order(), 0, 0);
    ExplicitModule {
        alg: alg.clone(),
        dim: 0,
        gen_actions: vec![z.clone(); alg.group().generators().len()],
        x_action: z,
        provenance: BTreeSet::new(),
        label_hint: None,
    }
}

/// Violated defining relations; empty means the matrices define an H-module.
pub fn validate(m: &ExplicitModule) -> Vec<String> {
    let mut report = Vec::new();
    if m.dim == 0 {
        return report;
    }
    let alg = &m.alg;
    let group = alg.group();
    let elems = m.element_actions();
    'outer: for g in 0..group.size() {
        for (pos, &s) in group.generators().iter().enumerate() {
            let lhs = elems[g].mat_mul(&m.gen_actions[pos]).expect("square");
            if lhs != elems[group.mul(g, s)] {
                report.push(format!(
                    "group relation: word of element {g} times generator {pos} differs from element {}",
                    group.mul(g, s)
                ));
                break 'outer;
            }
        }
    }
    for (pos, &g) in group.generators().iter().enumerate() {
        let rho = &m.gen_actions[pos];
        let lhs = m.x_action.mat_mul(rho).expect("square");
        let rhs = rho
            .mat_mul(&m.x_action)
            .expect("square")
            .scale(&alg.chi_inv(g));
        if lhs != rhs {
            report.push(format!(
                "x-commutation: x·g = χ⁻¹(g)·g·x fails for generator {pos}"
            ));
        }
    }
    if let Some(mm) = alg.dihedral_m() {
        let a = &m.gen_actions[0];
        let b = &m.gen_actions[1];
        if !a.mat_pow(2 * mm).expect("square").is_identity() {
            report.push(format!("dihedral relation: a^{} ≠ 1", 2 * mm));
        }
        if !b.mat_pow(2).expect("square").is_identity() {
            report.push("dihedral relation: b^2 ≠ 1".into());
        }
        if !b
            .mat_mul(a)
            .expect("square")
            .mat_pow(2)
            .expect("square")
            .is_identity()
        {
            report.push("dihedral relation: (ba)^2 ≠ 1".into());
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouprep::dihedral_algebra;

    fn d3() -> Arc<AlgebraData> {
        Arc::new(dihedral_algebra(3).unwrap())
    }

    fn c(v: i64) -> Cyclotomic {
        Cyclotomic::from_integer(6, v)
    }

    #[test]
    fn nilpotent_modules() {
        let alg = d3();
        let eps = alg.simple_by_name("eps").unwrap();
        let one = alg.simple_by_name("1").unwrap();
        let v = module_nilpotent(&alg, 1, one).unwrap();
        assert_eq!(v.dim(), 2);
        assert!(v.x_action().is_zero());
        let v = module_nilpotent(&alg, 3, eps).unwrap();
        assert_eq!(v.dim(), 3);
        assert!(v.x_action().mat_pow(3).unwrap().is_zero());
        assert!(!v.x_action().mat_pow(2).unwrap().is_zero());
        assert!(validate(&module_nilpotent(&alg, 4, one).unwrap()).is_empty());
        assert!(matches!(
            module_nilpotent(&alg, 0, eps),
            Err(HopfError::InvalidParameter(_))
        ));
        assert!(matches!(
            module_nilpotent(&alg, 1, SimpleId(9)),
            Err(HopfError::UnknownLabel(_))
        ));
    }

    #[test]
    fn eigen_modules() {
        let alg = d3();
        let eps = alg.simple_by_name("eps").unwrap();
        let beta = c(3);
        let v = module_eigen(&alg, 1, eps, &beta).unwrap();
        assert_eq!(v.dim(), 2);
        assert_eq!(v.x_power_s(), Matrix::scalar(6, 2, &beta));
        let v = module_eigen(&alg, 2, eps, &c(1)).unwrap();
        assert_eq!(v.dim(), 4);
        let n = v.x_power_s().shift(&c(1)).unwrap();
        assert!(!n.is_zero());
        assert!(n.mat_pow(2).unwrap().is_zero());
        assert!(validate(&v).is_empty());
        let one = alg.simple_by_name("1").unwrap();
        assert_eq!(module_eigen(&alg, 1, one, &c(2)).unwrap().dim(), 4);
        assert_eq!(
            module_eigen(&alg, 2, eps, &c(0)).unwrap_err(),
            HopfError::ZeroBeta { ts: 4 }
        );
    }

    #[test]
    fn eigen_relation_coefficients() {
        // (y − 2)^2 = y^2 − (−4 + 4y).
        assert_eq!(eigen_relation(&c(2), 2), vec![c(-4), c(4)]);
        assert_eq!(eigen_relation(&c(5), 1), vec![c(5)]);
    }

    #[test]
    fn tensor_and_sum() {
        let alg = d3();
        let eps = alg.simple_by_name("eps").unwrap();
        let unit = module_nilpotent(&alg, 1, eps).unwrap();
        let m = module_eigen(&alg, 2, alg.simple_by_name("2").unwrap(), &c(-1)).unwrap();
        let u = tensor(&unit, &m).unwrap();
        assert_eq!(u.gen_actions(), m.gen_actions());
        assert_eq!(u.x_action(), m.x_action());

        let beta = Cyclotomic::parse("1+w", 6).unwrap();
        let t = tensor(
            &module_nilpotent(&alg, 2, eps).unwrap(),
            &module_eigen(&alg, 1, eps, &beta).unwrap(),
        )
        .unwrap();
        assert_eq!(t.dim(), 4);
        assert!(validate(&t).is_empty());
        let n = t.x_power_s().shift(&beta).unwrap();
        assert!(n.mat_pow(4).unwrap().is_zero());
        assert!(t.provenance().contains(&beta));

        let s = direct_sum(&t, &m).unwrap();
        assert_eq!(s.dim(), t.dim() + m.dim());
        assert!(validate(&s).is_empty());
        let z = direct_sum(&m, &zero_module(&alg)).unwrap();
        assert_eq!(z.x_action(), m.x_action());
        assert_eq!(z.label_hint(), m.label_hint());
    }

    #[test]
    fn corrupted_x_is_reported() {
        let alg = d3();
        let m = module_nilpotent(&alg, 2, alg.simple_by_name("1").unwrap()).unwrap();
        let mut x = m.x_action().clone();
        x.set(0, 0, c(1));
        let bad =
            ExplicitModule::from_parts(alg, m.gen_actions().to_vec(), x, m.provenance().clone())
                .unwrap();
        let report = validate(&bad);
        assert!(!report.is_empty());
        assert!(report.iter().any(|r| r.starts_with("x-commutation")));
    }

    #[test]
    fn algebra_mismatch() {
        let a = d3();
        let b = Arc::new(dihedral_algebra(5).unwrap());
        let m = module_nilpotent(&a, 1, SimpleId(0)).unwrap();
        let n = module_nilpotent(&b, 1, SimpleId(0)).unwrap();
        assert_eq!(tensor(&m, &n).unwrap_err(), HopfError::AlgebraMismatch);
    }
}
