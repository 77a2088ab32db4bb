use std::collections::BTreeMap;

use crate::exactnum::Cyclotomic;
use crate::grouprep::{AlgebraData, SimpleId};

/// An indecomposable H-module up to isomorphism.
///
/// Field order fixes the sort order: kind, simple label, t, β.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IndecLabel {
    /// V_t(i): x nilpotent with t layers.
    Nil { i: SimpleId, t: u32 },
    /// V_t(i, β) with i the least label of its σ-orbit and β ≠ 0.
    Eig {
        i: SimpleId,
        t: u32,
        beta: Cyclotomic,
    },
}

impl IndecLabel {
    pub fn t(&self) -> u32 {
        match self {
            IndecLabel::Nil { t, .. } | IndecLabel::Eig { t, .. } => *t,
        }
    }

    pub fn simple(&self) -> SimpleId {
        match self {
            IndecLabel::Nil { i, .. } | IndecLabel::Eig { i, .. } => *i,
        }
    }

    pub fn beta(&self) -> Option<&Cyclotomic> {
        match self {
            IndecLabel::Nil { .. } => None,
            IndecLabel::Eig { beta, .. } => Some(beta),
        }
    }

    pub fn is_nil(&self) -> bool {
        matches!(self, IndecLabel::Nil { .. })
    }

    pub fn dim(&self, alg: &AlgebraData) -> usize {
        match self {
            IndecLabel::Nil { i, t } => *t as usize * alg.dim(*i),
            IndecLabel::Eig { i, t, .. } => (*t * alg.s()) as usize * alg.dim(*i),
        }
    }

    /// Whether the label is in normal form for `alg`.
    pub fn is_canonical(&self, alg: &AlgebraData) -> bool {
        match self {
            IndecLabel::Nil { i, t } => *t > 0 && alg.contains(*i),
            IndecLabel::Eig { i, t, beta } => {
                *t > 0 && alg.contains(*i) && alg.orbit_rep(*i) == *i && !beta.is_zero()
            }
        }
    }

    /// Multiplicities of the simple kG-modules in the restriction to kG.
    pub fn kg_restriction(&self, alg: &AlgebraData) -> BTreeMap<SimpleId, u32> {
        let mut out = BTreeMap::new();
        let (i, layers) = match self {
            IndecLabel::Nil { i, t } => (*i, *t),
            IndecLabel::Eig { i, t, .. } => (*i, *t * alg.s()),
        };
        for j in 0..layers {
            *out.entry(alg.sigma_pow(i, j as i64)).or_insert(0) += 1;
        }
        out
    }

    /// `V[t](name)` or `V[t](name;β)`.
    pub fn display(&self, alg: &AlgebraData) -> String {
        match self {
            IndecLabel::Nil { i, t } => format!("V[{t}]({})", alg.name(*i)),
            IndecLabel::Eig { i, t, beta } => format!("V[{t}]({};{beta})", alg.name(*i)),
        }
    }
}
