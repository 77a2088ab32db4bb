//! Closed-form tensor product decompositions on indecomposable labels.

use std::collections::BTreeMap;

use crate::decomp::IndecLabel;
use crate::exactnum::Cyclotomic;
use crate::grouprep::{AlgebraData, SimpleId};

pub type LabelMultiset<L> = BTreeMap<L, u32>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FusionError {
    #[error("algebra has |q| = {q_order} but |χ| = {s}; the fusion rules need |q| = |χ|")]
    NotFusionReady { q_order: u32, s: u32 },
    #[error("unknown or non-canonical label: {0}")]
    UnknownLabel(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// A simple H-module: x-torsion V_i or x-torsionfree V([i], β).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SimpleLabel {
    Torsion(SimpleId),
    /// `i` is the least label of its σ-orbit and β ≠ 0.
    Free {
        i: SimpleId,
        beta: Cyclotomic,
    },
}

impl SimpleLabel {
    pub fn dim(&self, alg: &AlgebraData) -> usize {
        match self {
            SimpleLabel::Torsion(i) => alg.dim(*i),
            SimpleLabel::Free { i, .. } => alg.s() as usize * alg.dim(*i),
        }
    }

    /// The indecomposable of length one with this label.
    pub fn as_indec(&self) -> IndecLabel {
        match self {
            SimpleLabel::Torsion(i) => IndecLabel::Nil { i: *i, t: 1 },
            SimpleLabel::Free { i, beta } => IndecLabel::Eig {
                i: *i,
                t: 1,
                beta: beta.clone(),
            },
        }
    }

    /// `V[1](name)` or `V[1](name;β)`.
    pub fn display(&self, alg: &AlgebraData) -> String {
        self.as_indec().display(alg)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LabelKind {
    Nil,
    Eig,
}

/// Normal form of V_t(i) or V_t(i, β): β = 0 becomes V_{ts}(i) and a
/// nonzero β replaces i by its orbit representative.
pub fn canonicalize(
    alg: &AlgebraData,
    kind: LabelKind,
    t: u32,
    i: SimpleId,
    beta: Option<&Cyclotomic>,
) -> Result<IndecLabel, FusionError> {
    if t == 0 {
        return Err(FusionError::InvalidParameter("t must be positive".into()));
    }
    if !alg.contains(i) {
        return Err(FusionError::UnknownLabel(i.to_string()));
    }
    match (kind, beta) {
        (LabelKind::Nil, None) => Ok(IndecLabel::Nil { i, t }),
        (LabelKind::Nil, Some(_)) => Err(FusionError::InvalidParameter("V_t(i) takes no β".into())),
        (LabelKind::Eig, None) => Err(FusionError::InvalidParameter("V_t(i, β) needs β".into())),
        (LabelKind::Eig, Some(b)) if b.order() != alg.order() => Err(
            FusionError::InvalidParameter(format!("β = {b} is not in the algebra's field")),
        ),
        (LabelKind::Eig, Some(b)) if b.is_zero() => Ok(IndecLabel::Nil { i, t: t * alg.s() }),
        (LabelKind::Eig, Some(b)) => Ok(IndecLabel::Eig {
            i: alg.orbit_rep(i),
            t,
            beta: b.clone(),
        }),
    }
}

/// V_t(i, β) in normal form; β may be zero.
fn eig_label(alg: &AlgebraData, t: u32, i: SimpleId, beta: &Cyclotomic) -> IndecLabel {
    if beta.is_zero() {
        IndecLabel::Nil { i, t: t * alg.s() }
    } else {
        IndecLabel::Eig {
            i: alg.orbit_rep(i),
            t,
            beta: beta.clone(),
        }
    }
}

fn check_label(alg: &AlgebraData, l: &IndecLabel) -> Result<(), FusionError> {
    if l.is_canonical(alg) && l.beta().is_none_or(|b| b.order() == alg.order()) {
        Ok(())
    } else {
        Err(FusionError::UnknownLabel(format!("{l:?}")))
    }
}

fn check_ready(alg: &AlgebraData) -> Result<(), FusionError> {
    if alg.fusion_ready() {
        Ok(())
    } else {
        Err(FusionError::NotFusionReady {
            q_order: alg.q_order(),
            s: alg.s(),
        })
    }
}

/// Index range for the last summand of the p ≥ p' branch when p + p' > s.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LastRangeStart {
    /// u = p..s−1, the reading consistent with dimensions.
    P,
    /// u = 0..s−1.
    Zero,
    /// u = p'..s−1.
    PPrime,
}

struct Acc<'a> {
    alg: &'a AlgebraData,
    out: LabelMultiset<IndecLabel>,
}

impl Acc<'_> {
    fn add(&mut self, label: IndecLabel, k: u32) {
        if k > 0 {
            *self.out.entry(label).or_insert(0) += k;
        }
    }

    /// N_{i,j}^l copies of `f(l)` for every l.
    fn over_fusion(
        &mut self,
        i: SimpleId,
        j: SimpleId,
        mult: u32,
        f: impl Fn(SimpleId) -> IndecLabel,
    ) {
        for l in self.alg.simple_ids() {
            let n = self.alg.fusion_coeff(i, j, l);
            if n > 0 {
                self.add(f(l), n * mult);
            }
        }
    }
}

/// Closed-form decomposition of L ⊗ R, argument order respected.
pub fn tensor_labels(
    alg: &AlgebraData,
    left: &IndecLabel,
    right: &IndecLabel,
) -> Result<LabelMultiset<IndecLabel>, FusionError> {
    tensor_labels_with(alg, left, right, LastRangeStart::P)
}

/// [`tensor_labels`] with a chosen index range for the one ambiguous
/// summand of the nilpotent-by-nilpotent rule.
pub fn tensor_labels_with(
    alg: &AlgebraData,
    left: &IndecLabel,
    right: &IndecLabel,
    reading: LastRangeStart,
) -> Result<LabelMultiset<IndecLabel>, FusionError> {
    check_ready(alg)?;
    check_label(alg, left)?;
    check_label(alg, right)?;
    let mut acc = Acc {
        alg,
        out: BTreeMap::new(),
    };
    match (left, right) {
        (IndecLabel::Nil { i, t: p }, IndecLabel::Eig { i: j, t, beta }) => {
            nil_eig(&mut acc, *i, *p, *j, *t, beta);
        }
        (IndecLabel::Eig { i: j, t, beta }, IndecLabel::Nil { i, t: p }) => {
            let twisted = &alg.omega_s(*i) * beta;
            nil_eig(&mut acc, *j, *p, *i, *t, &twisted);
        }
        (
            IndecLabel::Eig {
                i,
                t: p,
                beta: alpha,
            },
            IndecLabel::Eig { i: j, t, beta },
        ) => {
            eig_eig(&mut acc, *i, *p, alpha, *j, *t, beta);
        }
        (IndecLabel::Nil { i: a, t: ta }, IndecLabel::Nil { i: b, t: tb }) => {
            let (i, n, j, t) = if ta >= tb {
                (*a, *ta, *b, *tb)
            } else {
                (*b, *tb, *a, *ta)
            };
            nil_nil(&mut acc, i, n, j, t, reading);
        }
    }
    Ok(acc.out)
}

/// V_p(i) ⊗ V_t(j, β); the reversed order reuses this with N_{j,i} = N_{i,j}
/// and β twisted by ω_i^s.
fn nil_eig(acc: &mut Acc<'_>, i: SimpleId, p: u32, j: SimpleId, t: u32, beta: &Cyclotomic) {
    let alg = acc.alg;
    let s = alg.s();
    let (u, r) = (p / s, p % s);
    for m in 1..=t.min(u) {
        let len = 2 * m - 1 + t.abs_diff(u);
        acc.over_fusion(i, j, s - r, |l| eig_label(alg, len, l, beta));
    }
    for m in 1..=t.min(u + 1) {
        let len = 2 * m - 1 + t.abs_diff(u + 1);
        acc.over_fusion(i, j, r, |l| eig_label(alg, len, l, beta));
    }
}

/// V_p(i, α) ⊗ V_t(j, β).
fn eig_eig(
    acc: &mut Acc<'_>,
    i: SimpleId,
    p: u32,
    alpha: &Cyclotomic,
    j: SimpleId,
    t: u32,
    beta: &Cyclotomic,
) {
    let alg = acc.alg;
    let gamma = &(&alg.omega_s(j) * alpha) + beta;
    for u in 1..=p.min(t) {
        let len = 2 * u - 1 + p.abs_diff(t);
        for m in 0..alg.s() {
            acc.over_fusion(i, j, 1, |l| {
                eig_label(alg, len, alg.sigma_pow(l, m as i64), &gamma)
            });
        }
    }
}

/// V_n(i) ⊗ V_t(j) for n ≥ t.
fn nil_nil(acc: &mut Acc<'_>, i: SimpleId, n: u32, j: SimpleId, t: u32, reading: LastRangeStart) {
    let alg = acc.alg;
    let s = alg.s() as i64;
    let (n, t) = (n as i64, t as i64);
    let (r1, p1) = (n / s, n % s);
    let (r, p) = (t / s, t % s);
    let mut terms: Vec<(i64, i64)> = Vec::new();
    let mut block = |ms: std::ops::RangeInclusive<i64>,
                     us: std::ops::RangeInclusive<i64>,
                     len: &dyn Fn(i64, i64) -> i64| {
        for m in ms {
            for u in us.clone() {
                terms.push((len(m, u), u));
            }
        }
    };
    let chain = |m: i64, u: i64| n + t - 1 - 2 * m * s - 2 * u;
    let full = |k: i64| move |m: i64, _u: i64| (r + r1 + k - 2 * m) * s;
    if p + p1 <= s {
        if p <= p1 {
            block(0..=r, 0..=p - 1, &chain);
            block(0..=r - 1, p..=p1 - 1, &full(0));
            block(0..=r - 1, p1..=p + p1 - 1, &chain);
            block(0..=r - 1, p + p1..=s - 1, &full(-1));
        } else {
            block(0..=r, 0..=p1 - 1, &chain);
            block(0..=r, p1..=p - 1, &full(0));
            block(0..=r - 1, p..=p + p1 - 1, &chain);
            block(0..=r - 1, p + p1..=s - 1, &full(-1));
        }
    } else {
        let mbar = p + p1 - s - 1;
        if p <= p1 {
            block(0..=r, 0..=mbar, &full(1));
            block(0..=r, mbar + 1..=p - 1, &chain);
            block(0..=r - 1, p..=p1 - 1, &full(0));
            block(0..=r - 1, p1..=s - 1, &chain);
        } else {
            block(0..=r, 0..=mbar, &full(1));
            block(0..=r, mbar + 1..=p1 - 1, &chain);
            block(0..=r, p1..=p - 1, &full(0));
            let start = match reading {
                LastRangeStart::P => p,
                LastRangeStart::Zero => 0,
                LastRangeStart::PPrime => p1,
            };
            block(0..=r - 1, start..=s - 1, &chain);
        }
    }
    for (len, u) in terms {
        debug_assert!(len > 0, "nonpositive length {len}");
        if len <= 0 {
            continue;
        }
        acc.over_fusion(i, j, 1, |l| IndecLabel::Nil {
            i: alg.sigma_pow(l, u),
            t: len as u32,
        });
    }
}

/// Composition factors: Nil(t, i) has V_{σ^l(i)} for l < t, and
/// Eig(r, [i], β) has r copies of V([i], β).
pub fn comp_factors(
    alg: &AlgebraData,
    label: &IndecLabel,
) -> Result<LabelMultiset<SimpleLabel>, FusionError> {
    check_label(alg, label)?;
    let mut out = BTreeMap::new();
    match label {
        IndecLabel::Nil { i, t } => {
            for l in 0..*t {
                *out.entry(SimpleLabel::Torsion(alg.sigma_pow(*i, l as i64)))
                    .or_insert(0) += 1;
            }
        }
        IndecLabel::Eig { i, t, beta } => {
            out.insert(
                SimpleLabel::Free {
                    i: *i,
                    beta: beta.clone(),
                },
                *t,
            );
        }
    }
    Ok(out)
}

/// Restriction of a simple H-module to kG.
pub fn simple_restriction(
    alg: &AlgebraData,
    label: &SimpleLabel,
) -> Result<LabelMultiset<SimpleId>, FusionError> {
    let indec = label.as_indec();
    check_label(alg, &indec)?;
    Ok(indec.kg_restriction(alg))
}

/// Σ mult·dim of a label multiset.
pub fn multiset_dim(alg: &AlgebraData, m: &LabelMultiset<IndecLabel>) -> usize {
    m.iter().map(|(l, &k)| l.dim(alg) * k as usize).sum()
}
