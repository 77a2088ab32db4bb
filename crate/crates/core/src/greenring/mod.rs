//! Green ring r(H) and Grothendieck ring G_0(H) as free abelian groups on
//! canonical labels, with the polynomial views used for kD_n.

mod poly;
mod verify;

use std::collections::BTreeMap;
use std::fmt;

pub use poly::{
    binomial_power_of_x, f_poly, g_poly, groth_to_x1, groth_to_x2, simple_in_x1, x1_to_groth,
    CharComb, Poly,
};
pub use verify::{verify_presentation, Check, PresentationConfig, Report, Suite};

use crate::decomp::IndecLabel;
use crate::fusion::{comp_factors, tensor_labels, FusionError, LabelMultiset, SimpleLabel};
use crate::grouprep::{AlgebraData, SimpleId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GreenError {
    #[error(transparent)]
    Fusion(#[from] FusionError),
    #[error("label {0} has no coordinates in this basis")]
    UnsupportedLabel(String),
    #[error("this operation needs the dihedral algebra")]
    NotDihedral,
    #[error("coefficient {0} is not an integer")]
    NonIntegralCoefficient(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Labels that index a ring basis.
pub trait RingLabel: Clone + Ord + fmt::Debug {
    /// The class of the simple kG-module V_i.
    fn simple(i: SimpleId) -> Self;
    /// The product of two basis elements.
    fn product(alg: &AlgebraData, a: &Self, b: &Self) -> Result<LabelMultiset<Self>, FusionError>;
    /// Short name used when printing ring elements.
    fn render(&self, alg: &AlgebraData) -> String;
}

fn short_name(alg: &AlgebraData, i: SimpleId) -> Option<String> {
    if i == alg.trivial() {
        Some("1".into())
    } else if alg.dim(i) == 1 {
        Some(alg.name(i).to_string())
    } else {
        None
    }
}

impl RingLabel for IndecLabel {
    fn simple(i: SimpleId) -> Self {
        IndecLabel::Nil { i, t: 1 }
    }

    fn product(alg: &AlgebraData, a: &Self, b: &Self) -> Result<LabelMultiset<Self>, FusionError> {
        tensor_labels(alg, a, b)
    }

    fn render(&self, alg: &AlgebraData) -> String {
        match self {
            IndecLabel::Nil { i, t: 1 } => short_name(alg, *i).unwrap_or_else(|| self.display(alg)),
            _ => self.display(alg),
        }
    }
}

impl RingLabel for SimpleLabel {
    fn simple(i: SimpleId) -> Self {
        SimpleLabel::Torsion(i)
    }

    fn product(alg: &AlgebraData, a: &Self, b: &Self) -> Result<LabelMultiset<Self>, FusionError> {
        let mut out = BTreeMap::new();
        for (l, k) in tensor_labels(alg, &a.as_indec(), &b.as_indec())? {
            for (f, j) in comp_factors(alg, &l)? {
                *out.entry(f).or_insert(0) += k * j;
            }
        }
        Ok(out)
    }

    fn render(&self, alg: &AlgebraData) -> String {
        match self {
            SimpleLabel::Torsion(i) => short_name(alg, *i).unwrap_or_else(|| self.display(alg)),
            SimpleLabel::Free { .. } => self.display(alg),
        }
    }
}

/// An integer combination of basis labels with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RingElement<L: RingLabel> {
    coeffs: BTreeMap<L, i64>,
}

/// Element of the Green ring r(H).
pub type GreenElement = RingElement<IndecLabel>;
/// Element of the Grothendieck ring G_0(H).
pub type GrothElement = RingElement<SimpleLabel>;

impl<L: RingLabel> Default for RingElement<L> {
    fn default() -> Self {
        RingElement {
            coeffs: BTreeMap::new(),
        }
    }
}

impl<L: RingLabel> RingElement<L> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one(alg: &AlgebraData) -> Self {
        Self::from_label(L::simple(alg.trivial()))
    }

    pub fn from_label(label: L) -> Self {
        Self::term(label, 1)
    }

    pub fn term(label: L, coeff: i64) -> Self {
        let mut e = Self::zero();
        e.add_term(label, coeff);
        e
    }

    /// The class of V_i.
    pub fn simple(i: SimpleId) -> Self {
        Self::from_label(L::simple(i))
    }

    pub fn from_multiset(m: &LabelMultiset<L>) -> Self {
        let mut e = Self::zero();
        for (l, &k) in m {
            e.add_term(l.clone(), k as i64);
        }
        e
    }

    pub fn add_term(&mut self, label: L, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.coeffs.entry(label.clone()).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.coeffs.remove(&label);
        }
    }

    pub fn coeffs(&self) -> &BTreeMap<L, i64> {
        &self.coeffs
    }

    pub fn coeff(&self, label: &L) -> i64 {
        self.coeffs.get(label).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut e = self.clone();
        for (l, &k) in &other.coeffs {
            e.add_term(l.clone(), k);
        }
        e
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut e = Self::zero();
        for (l, &c) in &self.coeffs {
            e.add_term(l.clone(), c * k);
        }
        e
    }

    /// Canonical printed form, e.g. `1 + lam - 2*V[1](2)`.
    pub fn display(&self, alg: &AlgebraData) -> String {
        let terms = self.coeffs.iter().map(|(l, &k)| (k, l.render(alg)));
        format_terms(terms)
    }
}

/// Joins `(coefficient, atom)` pairs as `a - 2*b + c`; `0` if empty.
pub(crate) fn format_terms(terms: impl IntoIterator<Item = (i64, String)>) -> String {
    let mut out = String::new();
    for (k, atom) in terms {
        let (sign, mag) = if k < 0 { ("-", -k) } else { ("+", k) };
        if out.is_empty() {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        if atom == "1" {
            out.push_str(&mag.to_string());
        } else if mag == 1 {
            out.push_str(&atom);
        } else {
            out.push_str(&format!("{mag}*{atom}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Product in r(H) or G_0(H), extending the label product bilinearly.
pub fn ring_mul<L: RingLabel>(
    alg: &AlgebraData,
    a: &RingElement<L>,
    b: &RingElement<L>,
) -> Result<RingElement<L>, GreenError> {
    let mut out = RingElement::zero();
    for (la, &ka) in &a.coeffs {
        for (lb, &kb) in &b.coeffs {
            for (l, k) in L::product(alg, la, lb)? {
                out.add_term(l, ka * kb * k as i64);
            }
        }
    }
    Ok(out)
}

/// `a^k`, with `a^0 = 1`.
pub fn ring_pow<L: RingLabel>(
    alg: &AlgebraData,
    a: &RingElement<L>,
    k: u32,
) -> Result<RingElement<L>, GreenError> {
    let mut acc = RingElement::one(alg);
    for _ in 0..k {
        acc = ring_mul(alg, &acc, a)?;
    }
    Ok(acc)
}

/// The epimorphism r(H) → G_0(H) sending a module to its composition factors.
pub fn to_groth(alg: &AlgebraData, a: &GreenElement) -> Result<GrothElement, GreenError> {
    let mut out = GrothElement::zero();
    for (l, &k) in &a.coeffs {
        for (f, j) in comp_factors(alg, l)? {
            out.add_term(f, k * j as i64);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Cyclotomic;
    use crate::grouprep::dihedral_algebra;

    #[test]
    fn groth_products() {
        let alg = dihedral_algebra(3).unwrap();
        let id = |n: &str| alg.simple_by_name(n).unwrap();
        let x = GrothElement::simple(id("1"));
        assert_eq!(
            ring_mul(&alg, &x, &x).unwrap().display(&alg),
            "1 + lam + V[1](2)"
        );
        let chi = GrothElement::simple(id("chi"));
        assert_eq!(
            ring_mul(&alg, &chi, &x).unwrap(),
            GrothElement::simple(id("2"))
        );
    }

    #[test]
    fn green_products() {
        let alg = dihedral_algebra(3).unwrap();
        let id = |n: &str| alg.simple_by_name(n).unwrap();
        let y = GreenElement::from_label(IndecLabel::Nil { i: id("eps"), t: 2 });
        let one_chi = GreenElement::one(&alg).add(&GreenElement::simple(id("chi")));
        assert_eq!(
            ring_mul(&alg, &y, &y).unwrap(),
            ring_mul(&alg, &one_chi, &y).unwrap()
        );
        let g = to_groth(&alg, &y).unwrap();
        assert_eq!(g.display(&alg), "1 + chi");
        let beta = Cyclotomic::from_integer(6, 3);
        let w2 = GreenElement::from_label(IndecLabel::Eig {
            i: id("eps"),
            t: 2,
            beta: beta.clone(),
        });
        let free = SimpleLabel::Free { i: id("eps"), beta };
        assert_eq!(to_groth(&alg, &w2).unwrap(), GrothElement::term(free, 2));
    }

    #[test]
    fn formatting() {
        let terms = vec![
            (-1, "a".to_string()),
            (3, "b".to_string()),
            (-2, "c".to_string()),
        ];
        assert_eq!(format_terms(terms), "-a + 3*b - 2*c");
        assert_eq!(
            format_terms(vec![(2, "1".to_string()), (-1, "chi".to_string())]),
            "2 - chi"
        );
        assert_eq!(format_terms(Vec::new()), "0");
    }
}
