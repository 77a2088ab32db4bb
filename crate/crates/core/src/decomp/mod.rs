//! Matrix-level decomposition of explicit modules into indecomposables.
//!
//! Eigenvalues of x^s are taken from a finite candidate pool and the pool
//! is verified complete by a dimension count. For each eigenvalue c the
//! operator N (x itself for c = 0, x^s − c otherwise) is nilpotent on the
//! generalized eigenspace, and K_j = N^j(ker N^{j+1}) = ker N ∩ im N^j
//! holds one socle per Jordan chain of length > j. Socle types are read
//! off by character averaging on K_j.

mod label;

use std::collections::{BTreeMap, BTreeSet};

pub use label::IndecLabel;

use crate::exactnum::{dot, Cyclotomic, Matrix, Rational, Subspace};
use crate::grouprep::{AlgebraData, SimpleId};
use crate::hopfmod::ExplicitModule;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecompError {
    #[error("candidate pool accounts for {found} of {dim} dimensions; supply extra candidates")]
    CandidatePoolIncomplete { found: usize, dim: usize },
    #[error("algebra has |q| = {q_order} but |χ| = {s}; the classification needs |q| = |χ|")]
    NotFusionReady { q_order: u32, s: u32 },
    #[error("isotypic multiplicity of {simple} is {value}, not a nonnegative integer")]
    NonIntegerMultiplicity { simple: String, value: String },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("candidate {0} is not in the algebra's field")]
    ForeignCandidate(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompResult {
    pub multiset: BTreeMap<IndecLabel, u32>,
    pub total_dim: usize,
    /// Eigenvalues of x^s with a nonzero generalized eigenspace, ascending.
    pub eigenvalues_found: Vec<Cyclotomic>,
}

/// Multiplicity of each simple kG-module in the span of `basis`, a
/// reduced echelon basis of a kG-stable subspace.
fn isotypic_on(
    alg: &AlgebraData,
    elems: &[Matrix],
    space: &Subspace,
) -> Result<BTreeMap<SimpleId, u32>, DecompError> {
    let order = alg.order();
    let group = alg.group();
    let traces: Vec<Cyclotomic> = elems
        .iter()
        .map(|e| {
            let mut t = Cyclotomic::zero(order);
            for (b, &p) in space.basis().iter().zip(space.pivots()) {
                t = &t + &dot(e.row(p), b, order);
            }
            t
        })
        .collect();
    let inv_size = Rational::new(1, group.size() as i64);
    let mut out = BTreeMap::new();
    for i in alg.simple_ids() {
        let ch = &alg.simple(i).character;
        let mut acc = Cyclotomic::zero(order);
        for (g, tr) in traces.iter().enumerate() {
            if !tr.is_zero() {
                acc = &acc + &(&ch[group.inverse(g)] * tr);
            }
        }
        let acc = acc.scale(&inv_size);
        match acc.as_integer() {
            Some(0) => {}
            Some(v) if v > 0 => {
                out.insert(i, v as u32);
            }
            _ => {
                return Err(DecompError::NonIntegerMultiplicity {
                    simple: alg.name(i).to_string(),
                    value: acc.to_string(),
                })
            }
        }
    }
    Ok(out)
}

/// Multiplicity of each simple kG-module in the restriction of `m` to kG.
pub fn isotypic_multiplicities(m: &ExplicitModule) -> Result<BTreeMap<SimpleId, u32>, DecompError> {
    let full = Subspace::full(m.alg().order(), m.dim());
    isotypic_on(m.alg(), &m.element_actions(), &full)
}

/// Jordan data of N at eigenvalue 0: nullities of N^k up to stabilization
/// and the subspaces K_j = N^j(ker N^{j+1}).
struct ChainData {
    generalized_dim: usize,
    layers: Vec<Subspace>,
}

fn chain_data(n: &Matrix) -> ChainData {
    let order = n.order();
    let dim = n.rows();
    let mut layers = Vec::new();
    let mut prev_power = Matrix::identity(order, dim);
    let mut power = n.clone();
    let mut nullity = 0;
    loop {
        let kernel = power.kernel_basis();
        if kernel.len() == nullity {
            break;
        }
        nullity = kernel.len();
        let images = kernel
            .iter()
            .map(|v| prev_power.apply(v).expect("square"))
            .collect();
        layers.push(Subspace::span(order, dim, images));
        if nullity == dim {
            break;
        }
        prev_power = power;
        power = prev_power.mat_mul(n).expect("square");
    }
    ChainData {
        generalized_dim: nullity,
        layers,
    }
}

fn check_ready(alg: &AlgebraData) -> Result<(), DecompError> {
    if alg.fusion_ready() {
        Ok(())
    } else {
        Err(DecompError::NotFusionReady {
            q_order: alg.q_order(),
            s: alg.s(),
        })
    }
}

fn candidate_pool(
    m: &ExplicitModule,
    extra: &[Cyclotomic],
) -> Result<BTreeSet<Cyclotomic>, DecompError> {
    let order = m.alg().order();
    let mut pool = m.provenance().clone();
    pool.insert(Cyclotomic::zero(order));
    for c in extra {
        if c.order() != order {
            return Err(DecompError::ForeignCandidate(c.to_string()));
        }
        pool.insert(c.clone());
    }
    Ok(pool)
}

/// Splits `m` into indecomposables. `extra` adds eigenvalue candidates for
/// x^s beyond those recorded in the module's provenance.
pub fn decompose(m: &ExplicitModule, extra: &[Cyclotomic]) -> Result<DecompResult, DecompError> {
    let alg = m.alg();
    check_ready(alg)?;
    let dim = m.dim();
    let mut result = DecompResult {
        multiset: BTreeMap::new(),
        total_dim: dim,
        eigenvalues_found: Vec::new(),
    };
    if dim == 0 {
        return Ok(result);
    }
    let pool = candidate_pool(m, extra)?;
    let xs = m.x_power_s();
    let elems = m.element_actions();
    let s = alg.s();
    let mut found = 0;

    for c in &pool {
        let n = if c.is_zero() {
            m.x_action().clone()
        } else {
            xs.shift(c).expect("square")
        };
        let data = chain_data(&n);
        if data.generalized_dim == 0 {
            continue;
        }
        found += data.generalized_dim;
        result.eigenvalues_found.push(c.clone());
        let mut mu = data
            .layers
            .iter()
            .map(|k| isotypic_on(alg, &elems, k))
            .collect::<Result<Vec<_>, _>>()?;
        mu.push(BTreeMap::new());
        for j in 0..data.layers.len() {
            let t = j as u32 + 1;
            if c.is_zero() {
                for (&ty, &here) in &mu[j] {
                    let next = mu[j + 1].get(&ty).copied().unwrap_or(0);
                    let count = here.checked_sub(next).ok_or_else(|| {
                        DecompError::InternalInconsistency(format!(
                            "socle count of {} increases",
                            alg.name(ty)
                        ))
                    })?;
                    if count > 0 {
                        let i = alg.sigma_pow(ty, -(j as i64));
                        *result.multiset.entry(IndecLabel::Nil { i, t }).or_insert(0) += count;
                    }
                }
            } else {
                for rep in alg.orbit_reps() {
                    let orbit = alg.orbit(rep);
                    let total = |layer: &BTreeMap<SimpleId, u32>| -> u32 {
                        orbit
                            .iter()
                            .map(|ty| layer.get(ty).copied().unwrap_or(0))
                            .sum()
                    };
                    let (here, next) = (total(&mu[j]), total(&mu[j + 1]));
                    if here < next || (here - next) % s != 0 {
                        return Err(DecompError::InternalInconsistency(format!(
                            "socle multiplicities of the orbit of {} at β = {c} are not a multiple of s",
                            alg.name(rep)
                        )));
                    }
                    let count = (here - next) / s;
                    if count > 0 {
                        let label = IndecLabel::Eig {
                            i: rep,
                            t,
                            beta: c.clone(),
                        };
                        *result.multiset.entry(label).or_insert(0) += count;
                    }
                }
            }
        }
    }

    if found != dim {
        return Err(DecompError::CandidatePoolIncomplete { found, dim });
    }
    cross_check(m, &result)?;
    Ok(result)
}

fn cross_check(m: &ExplicitModule, result: &DecompResult) -> Result<(), DecompError> {
    let alg = m.alg();
    let total: usize = result
        .multiset
        .iter()
        .map(|(l, &k)| l.dim(alg) * k as usize)
        .sum();
    if total != m.dim() {
        return Err(DecompError::InternalInconsistency(format!(
            "labels account for dimension {total}, module has {}",
            m.dim()
        )));
    }
    let mut expected: BTreeMap<SimpleId, u32> = BTreeMap::new();
    for (label, &k) in &result.multiset {
        for (i, v) in label.kg_restriction(alg) {
            *expected.entry(i).or_insert(0) += v * k;
        }
    }
    if expected != isotypic_multiplicities(m)? {
        return Err(DecompError::InternalInconsistency(
            "kG-types of the labels differ from the module's".into(),
        ));
    }
    Ok(())
}

/// Loewy length of `m`: the longest Jordan chain of x on the x-nilpotent
/// part and of x^s − β on each generalized eigenspace, read from the rank
/// sequences of their powers.
pub fn radical_length(m: &ExplicitModule, extra: &[Cyclotomic]) -> Result<u32, DecompError> {
    check_ready(m.alg())?;
    if m.dim() == 0 {
        return Ok(0);
    }
    let xs = m.x_power_s();
    let mut found = 0;
    let mut longest = 0;
    for c in candidate_pool(m, extra)? {
        let n = if c.is_zero() {
            m.x_action().clone()
        } else {
            xs.shift(&c).expect("square")
        };
        let ranks = rank_sequence(&n);
        found += m.dim() - ranks.last().copied().unwrap_or(m.dim());
        longest = longest.max(ranks.len() as u32 - 1);
    }
    if found != m.dim() {
        return Err(DecompError::CandidatePoolIncomplete {
            found,
            dim: m.dim(),
        });
    }
    Ok(longest)
}

/// Ranks of N^0, N^1, … up to and including the first repeated value's
/// predecessor, so `len − 1` is the nilpotency index on the generalized
/// kernel.
pub fn rank_sequence(n: &Matrix) -> Vec<usize> {
    let mut ranks = vec![n.rows()];
    let mut power = n.clone();
    loop {
        let r = power.rank();
        if r == *ranks.last().expect("nonempty") {
            return ranks;
        }
        ranks.push(r);
        if r == 0 {
            return ranks;
        }
        power = power.mat_mul(n).expect("square");
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::grouprep::dihedral_algebra;
    use crate::hopfmod::{direct_sum, module_eigen, module_nilpotent, tensor};

    fn setup() -> (Arc<AlgebraData>, impl Fn(&str) -> SimpleId) {
        let alg = Arc::new(dihedral_algebra(3).unwrap());
        let a = alg.clone();
        (alg, move |name: &str| a.simple_by_name(name).unwrap())
    }

    fn c(v: i64) -> Cyclotomic {
        Cyclotomic::from_integer(6, v)
    }

    fn nil(i: SimpleId, t: u32) -> IndecLabel {
        IndecLabel::Nil { i, t }
    }

    fn eig(i: SimpleId, t: u32, b: i64) -> IndecLabel {
        IndecLabel::Eig { i, t, beta: c(b) }
    }

    #[test]
    fn isotypic_examples() {
        let (alg, id) = setup();
        let m = module_nilpotent(&alg, 3, id("eps")).unwrap();
        let mult = isotypic_multiplicities(&m).unwrap();
        assert_eq!(mult, [(id("eps"), 2), (id("chi"), 1)].into_iter().collect());
        let v = module_nilpotent(&alg, 1, id("1")).unwrap();
        assert_eq!(
            isotypic_multiplicities(&v).unwrap(),
            [(id("1"), 1)].into_iter().collect()
        );
        let mm = direct_sum(&m, &m).unwrap();
        assert_eq!(
            isotypic_multiplicities(&mm).unwrap(),
            [(id("eps"), 4), (id("chi"), 2)].into_iter().collect()
        );
    }

    #[test]
    fn nilpotent_tensor() {
        let (alg, id) = setup();
        let m = tensor(
            &module_nilpotent(&alg, 2, id("eps")).unwrap(),
            &module_nilpotent(&alg, 3, id("eps")).unwrap(),
        )
        .unwrap();
        let d = decompose(&m, &[]).unwrap();
        let expect = [(nil(id("eps"), 4), 1), (nil(id("chi"), 2), 1)]
            .into_iter()
            .collect();
        assert_eq!(d.multiset, expect);
        assert_eq!(d.total_dim, 6);
    }

    #[test]
    fn opposite_betas_collapse() {
        let (alg, id) = setup();
        let m = tensor(
            &module_eigen(&alg, 1, id("eps"), &c(1)).unwrap(),
            &module_eigen(&alg, 1, id("eps"), &c(-1)).unwrap(),
        )
        .unwrap();
        let d = decompose(&m, &[]).unwrap();
        let expect = [(nil(id("eps"), 2), 1), (nil(id("chi"), 2), 1)]
            .into_iter()
            .collect();
        assert_eq!(d.multiset, expect);
    }

    #[test]
    fn eigen_round_trip_and_square() {
        let (alg, id) = setup();
        let v = module_eigen(&alg, 1, id("eps"), &c(5)).unwrap();
        let d = decompose(&v, &[]).unwrap();
        assert_eq!(
            d.multiset,
            [(eig(id("eps"), 1, 5), 1)].into_iter().collect()
        );
        let w = module_eigen(&alg, 1, id("1"), &c(1)).unwrap();
        let d = decompose(&tensor(&w, &w).unwrap(), &[]).unwrap();
        let expect = [
            (eig(id("eps"), 1, 2), 2),
            (eig(id("lam"), 1, 2), 2),
            (eig(id("1"), 1, 2), 2),
        ]
        .into_iter()
        .collect();
        assert_eq!(d.multiset, expect);
        assert_eq!(d.total_dim, 16);
        assert_eq!(d.eigenvalues_found, vec![c(2)]);
    }

    #[test]
    fn incomplete_pool_is_reported() {
        let (alg, id) = setup();
        let v = module_eigen(&alg, 2, id("lam"), &c(3)).unwrap();
        let stripped = ExplicitModule::from_parts(
            alg.clone(),
            v.gen_actions().to_vec(),
            v.x_action().clone(),
            BTreeSet::new(),
        )
        .unwrap();
        assert_eq!(
            decompose(&stripped, &[]).unwrap_err(),
            DecompError::CandidatePoolIncomplete { found: 0, dim: 4 }
        );
        let d = decompose(&stripped, &[c(3)]).unwrap();
        assert_eq!(
            d.multiset,
            [(eig(id("lam"), 2, 3), 1)].into_iter().collect()
        );
    }

    #[test]
    fn radical_lengths() {
        let (alg, id) = setup();
        for t in 1..5 {
            let m = module_nilpotent(&alg, t, id("1")).unwrap();
            assert_eq!(radical_length(&m, &[]).unwrap(), t);
            let m = module_eigen(&alg, t, id("eps"), &c(-2)).unwrap();
            assert_eq!(radical_length(&m, &[]).unwrap(), t);
        }
    }
}
