use std::collections::BTreeMap;

use super::{format_terms, ring_mul, GreenError, GrothElement, RingElement, RingLabel};
use crate::fusion::SimpleLabel;
use crate::grouprep::{AlgebraData, SimpleId};

/// An element of the group ring ZĜ of linear characters.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharComb(BTreeMap<SimpleId, i64>);

impl CharComb {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn char(c: SimpleId) -> Self {
        Self::term(c, 1)
    }

    pub fn term(c: SimpleId, k: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(c, k);
        out
    }

    pub fn integer(alg: &AlgebraData, k: i64) -> Self {
        Self::term(alg.trivial(), k)
    }

    pub fn add_term(&mut self, c: SimpleId, k: i64) {
        if k == 0 {
            return;
        }
        let e = self.0.entry(c).or_insert(0);
        *e += k;
        if *e == 0 {
            self.0.remove(&c);
        }
    }

    pub fn terms(&self) -> &BTreeMap<SimpleId, i64> {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&c, &k) in &other.0 {
            out.add_term(c, k);
        }
        out
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (&c, &v) in &self.0 {
            out.add_term(c, v * k);
        }
        out
    }

    /// Product in ZĜ; linear characters multiply through the fusion table.
    pub fn mul(&self, alg: &AlgebraData, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&a, &ka) in &self.0 {
            for (&b, &kb) in &other.0 {
                for l in alg.simple_ids() {
                    let n = alg.fusion_coeff(a, b, l);
                    if n > 0 {
                        out.add_term(l, ka * kb * n as i64);
                    }
                }
            }
        }
        out
    }

    /// The integer k when this is k·1.
    pub fn as_integer(&self, alg: &AlgebraData) -> Option<i64> {
        match self.0.len() {
            0 => Some(0),
            1 => self.0.get(&alg.trivial()).copied(),
            _ => None,
        }
    }

    pub fn to_ring<L: RingLabel>(&self) -> RingElement<L> {
        let mut out = RingElement::zero();
        for (&c, &k) in &self.0 {
            out.add_term(L::simple(c), k);
        }
        out
    }

    pub fn display(&self, alg: &AlgebraData) -> String {
        let terms = self.0.iter().map(|(&c, &k)| {
            let name = if c == alg.trivial() {
                "1".to_string()
            } else {
                alg.name(c).to_string()
            };
            (k, name)
        });
        format_terms(terms)
    }
}

/// A polynomial in named variables with ZĜ coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, CharComb>,
}

impl Poly {
    pub fn zero(vars: &[&str]) -> Self {
        Poly {
            vars: vars.iter().map(|v| v.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, CharComb> {
        &self.terms
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, coeff: &CharComb) {
        assert_eq!(exponents.len(), self.vars.len(), "exponent vector length");
        let entry = self.terms.entry(exponents.clone()).or_default();
        *entry = entry.add(coeff);
        if entry.is_zero() {
            self.terms.remove(&exponents);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Poly {
        let mut out = Poly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            out.add_term(e.clone(), &c.scale(k));
        }
        out
    }

    /// Multiplies every coefficient by `c` ∈ ZĜ.
    pub fn mul_coeff(&self, alg: &AlgebraData, c: &CharComb) -> Poly {
        let mut out = Poly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, v) in &self.terms {
            out.add_term(e.clone(), &v.mul(alg, c));
        }
        out
    }

    /// Substitutes ring elements for the variables.
    pub fn eval<L: RingLabel>(
        &self,
        alg: &AlgebraData,
        values: &[RingElement<L>],
    ) -> Result<RingElement<L>, GreenError> {
        if values.len() != self.vars.len() {
            return Err(GreenError::InvalidParameter(format!(
                "{} values for {} variables",
                values.len(),
                self.vars.len()
            )));
        }
        let mut out = RingElement::zero();
        for (exps, c) in &self.terms {
            let mut term = c.to_ring::<L>();
            for (v, &e) in values.iter().zip(exps) {
                for _ in 0..e {
                    term = ring_mul(alg, &term, v)?;
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Terms by descending total degree, e.g. `x^3 - 3*x + chi + lamchi`.
    pub fn display(&self, alg: &AlgebraData) -> String {
        let mut items: Vec<(&Vec<u32>, &CharComb)> = self.terms.iter().collect();
        items.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then(b.0.cmp(a.0))
        });
        let mut out = String::new();
        for (exps, c) in items {
            let mono: Vec<String> = self
                .vars
                .iter()
                .zip(exps)
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        v.clone()
                    } else {
                        format!("{v}^{e}")
                    }
                })
                .collect();
            let mono = mono.join("*");
            let piece = if mono.is_empty() {
                let s = c.display(alg);
                if out.is_empty() {
                    s
                } else if let Some(rest) = s.strip_prefix('-') {
                    format!(" - {rest}")
                } else {
                    format!(" + {s}")
                }
            } else {
                let (neg, body) = match c.as_integer(alg) {
                    Some(k) if k.abs() == 1 => (k < 0, mono),
                    Some(k) => (k < 0, format!("{}*{mono}", k.abs())),
                    None => (false, format!("({})*{mono}", c.display(alg))),
                };
                match (out.is_empty(), neg) {
                    (true, true) => format!("-{body}"),
                    (true, false) => body,
                    (false, true) => format!(" - {body}"),
                    (false, false) => format!(" + {body}"),
                }
            };
            out.push_str(&piece);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as i128 / (j + 1) as i128;
    }
    acc as i64
}

/// `num / den`, required to be an integer.
fn exact_ratio(num: i64, den: i64) -> Result<i64, GreenError> {
    if den != 0 && num % den == 0 {
        Ok(num / den)
    } else {
        Err(GreenError::NonIntegralCoefficient(format!("{num}/{den}")))
    }
}

pub(super) struct Dihedral {
    pub m: u32,
    pub eps: SimpleId,
    pub lam: SimpleId,
    pub chi: SimpleId,
}

pub(super) fn dihedral(alg: &AlgebraData) -> Result<Dihedral, GreenError> {
    let m = alg.dihedral_m().ok_or(GreenError::NotDihedral)?;
    let find = |n: &str| alg.simple_by_name(n).ok_or(GreenError::NotDihedral);
    Ok(Dihedral {
        m,
        eps: alg.trivial(),
        lam: find("lam")?,
        chi: alg.chi_simple(),
    })
}

/// V_l for 1 ≤ l ≤ m−1.
pub(super) fn rho(alg: &AlgebraData, l: u32) -> SimpleId {
    alg.simple_by_name(&l.to_string())
        .expect("two-dimensional simple")
}

/// l with V_i = V_l two-dimensional, if any.
fn rho_index(alg: &AlgebraData, i: SimpleId) -> Option<u32> {
    (alg.dim(i) == 2)
        .then(|| alg.name(i).parse().ok())
        .flatten()
}

fn x_poly() -> Poly {
    Poly::zero(&["x"])
}

/// [V_l] as a polynomial in x = [V_1] over ZĜ.
pub fn simple_in_x1(alg: &AlgebraData, l: u32) -> Result<Poly, GreenError> {
    let d = dihedral(alg)?;
    if l == 0 || l >= d.m {
        return Err(GreenError::InvalidParameter(format!(
            "l = {l} outside 1..{}",
            d.m - 1
        )));
    }
    let mut p = x_poly();
    let sign = |i: i64| if i % 2 == 0 { 1 } else { -1 };
    let l = l as i64;
    if l % 2 == 1 {
        let r = (l + 1) / 2;
        for i in 0..r {
            let c = exact_ratio((2 * r - 1) * binom(2 * r - 2 - i, i), 2 * r - 1 - 2 * i)?;
            p.add_term(
                vec![(2 * r - 1 - 2 * i) as u32],
                &CharComb::integer(alg, sign(i) * c),
            );
        }
    } else {
        let r = l / 2;
        for i in 0..r {
            let c = exact_ratio(2 * r * binom(2 * r - i, i), 2 * r - i)?;
            p.add_term(
                vec![(2 * r - 2 * i) as u32],
                &CharComb::integer(alg, sign(i) * c),
            );
        }
        let one_lam = CharComb::char(d.eps).add(&CharComb::char(d.lam));
        p.add_term(vec![0], &one_lam.scale(sign(r)));
    }
    Ok(p)
}

/// f(x), with χx = f(x) in G_0(kD_n).
pub fn f_poly(alg: &AlgebraData) -> Result<Poly, GreenError> {
    let d = dihedral(alg)?;
    let m = d.m as i64;
    let sign = |i: i64| if i % 2 == 0 { 1 } else { -1 };
    let mut p = x_poly();
    for i in 0..=(m - 3) / 2 {
        let c = exact_ratio((m - 1) * binom(m - 1 - i, i), m - 1 - i)?;
        p.add_term(
            vec![(m - 1 - 2 * i) as u32],
            &CharComb::integer(alg, sign(i) * c),
        );
    }
    let one_lam = CharComb::char(d.eps).add(&CharComb::char(d.lam));
    p.add_term(vec![0], &one_lam.scale(sign((m - 1) / 2)));
    Ok(p)
}

/// g(x), with x^m = g(x) in G_0(kD_n).
pub fn g_poly(alg: &AlgebraData) -> Result<Poly, GreenError> {
    let d = dihedral(alg)?;
    let m = d.m as i64;
    let sign = |i: i64| if i % 2 == 0 { 1 } else { -1 };
    let mut p = x_poly();
    for i in 1..=(m - 1) / 2 {
        let c = exact_ratio(m * binom(m - 1 - i, i), m - 2 * i)?;
        p.add_term(
            vec![(m - 2 * i) as u32],
            &CharComb::integer(alg, sign(i - 1) * c),
        );
    }
    let one_lam_chi =
        CharComb::char(d.chi).add(&CharComb::char(d.lam).mul(alg, &CharComb::char(d.chi)));
    p.add_term(vec![0], &one_lam_chi);
    Ok(p)
}

/// x^l = [V_1]^{⊗l} decomposed by binomial coefficients, 1 ≤ l ≤ m−1.
pub fn binomial_power_of_x(alg: &AlgebraData, l: u32) -> Result<GrothElement, GreenError> {
    let d = dihedral(alg)?;
    if l == 0 || l >= d.m {
        return Err(GreenError::InvalidParameter(format!(
            "l = {l} outside 1..{}",
            d.m - 1
        )));
    }
    let mut out = GrothElement::zero();
    let l = l as i64;
    if l % 2 == 1 {
        let r = (l + 1) / 2;
        for j in 1..=r {
            out.add_term(
                SimpleLabel::Torsion(rho(alg, (2 * j - 1) as u32)),
                binom(2 * r - 1, r - j),
            );
        }
    } else {
        let r = l / 2;
        let c = binom(2 * r - 1, r - 1);
        out.add_term(SimpleLabel::Torsion(d.eps), c);
        out.add_term(SimpleLabel::Torsion(d.lam), c);
        for j in 1..=r {
            out.add_term(
                SimpleLabel::Torsion(rho(alg, (2 * j) as u32)),
                binom(2 * r, r - j),
            );
        }
    }
    Ok(out)
}

fn kdn_terms(alg: &AlgebraData, a: &GrothElement) -> Result<Vec<(SimpleId, i64)>, GreenError> {
    a.coeffs()
        .iter()
        .map(|(l, &k)| match l {
            SimpleLabel::Torsion(i) => Ok((*i, k)),
            SimpleLabel::Free { .. } => Err(GreenError::UnsupportedLabel(l.display(alg))),
        })
        .collect()
}

/// Coordinates in X_1 = {1, λ, χ, λχ, x, …, x^{m−1}}.
pub fn groth_to_x1(alg: &AlgebraData, a: &GrothElement) -> Result<Poly, GreenError> {
    dihedral(alg)?;
    let mut p = x_poly();
    for (i, k) in kdn_terms(alg, a)? {
        match rho_index(alg, i) {
            Some(l) => p = p.add(&simple_in_x1(alg, l)?.scale(k)),
            None => p.add_term(vec![0], &CharComb::term(i, k)),
        }
    }
    Ok(p)
}

/// Coordinates in X_2 = {1, λ, χ, λχ, x^l, χx^l | 1 ≤ l ≤ (m−1)/2}, as a
/// polynomial of degree ≤ (m−1)/2 whose coefficients lie in Z + Zχ
/// away from the constant term.
pub fn groth_to_x2(alg: &AlgebraData, a: &GrothElement) -> Result<Poly, GreenError> {
    let d = dihedral(alg)?;
    let half = (d.m - 1) / 2;
    let chi = CharComb::char(d.chi);
    let mut p = x_poly();
    for (i, k) in kdn_terms(alg, a)? {
        match rho_index(alg, i) {
            Some(l) if l <= half => p = p.add(&simple_in_x1(alg, l)?.scale(k)),
            Some(l) => p = p.add(&simple_in_x1(alg, d.m - l)?.mul_coeff(alg, &chi).scale(k)),
            None => p.add_term(vec![0], &CharComb::term(i, k)),
        }
    }
    Ok(p)
}

/// Evaluates a polynomial in x at x = [V_1].
pub fn x1_to_groth(alg: &AlgebraData, p: &Poly) -> Result<GrothElement, GreenError> {
    dihedral(alg)?;
    if p.vars() != ["x"] {
        return Err(GreenError::InvalidParameter(
            "expected a polynomial in x".into(),
        ));
    }
    p.eval(alg, &[GrothElement::simple(rho(alg, 1))])
}
