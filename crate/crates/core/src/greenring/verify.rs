use std::collections::BTreeSet;

use rayon::prelude::*;

use super::poly::{dihedral, rho, Dihedral};
use super::{
    binomial_power_of_x, f_poly, g_poly, groth_to_x2, ring_mul, ring_pow, simple_in_x1,
    x1_to_groth, GreenElement, GreenError, GrothElement, RingElement, RingLabel,
};
use crate::decomp::IndecLabel;
use crate::exactnum::{Cyclotomic, Matrix};
use crate::fusion::SimpleLabel;
use crate::grouprep::AlgebraData;

/// Which presentation to verify.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// G_0(kD_n) as ZD̂_n[x]/J.
    GrothKDn,
    /// G_0(H) as G_0(kD_n)[Y]/(U).
    GrothH,
    /// R as G_0(kD_n)[y,z]/(y²−(1+χ)y).
    GreenR,
    /// r(H) as R[Z]/(W).
    GreenH,
    /// Everything above, i.e. r(H) as ZD̂_n[X]/(Q).
    Combined,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::GrothKDn,
        Suite::GrothH,
        Suite::GreenR,
        Suite::GreenH,
        Suite::Combined,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::GrothKDn => "groth_kDn",
            Suite::GrothH => "groth_H",
            Suite::GreenR => "green_R",
            Suite::GreenH => "green_H",
            Suite::Combined => "combined",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }

    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::Combined => vec![Suite::GrothKDn, Suite::GrothH, Suite::GreenR, Suite::GreenH],
            s => vec![s],
        }
    }
}

/// The finite β set and the length bound used for the leading-term laws
/// and truncated bases.
#[derive(Clone, Debug)]
pub struct PresentationConfig {
    pub betas: Vec<Cyclotomic>,
    pub tmax: u32,
}

/// One verified identity, both sides printed in the canonical basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub relation: String,
    pub passed: bool,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

type Job<'a> = Box<dyn Fn() -> Result<Check, GreenError> + Send + Sync + 'a>;

struct Ctx<'a> {
    alg: &'a AlgebraData,
    d: Dihedral,
    half: u32,
}

impl Ctx<'_> {
    fn groth(&self, i: crate::grouprep::SimpleId) -> GrothElement {
        GrothElement::simple(i)
    }

    fn green(&self, i: crate::grouprep::SimpleId) -> GreenElement {
        GreenElement::simple(i)
    }

    fn free(&self, beta: &Cyclotomic) -> GrothElement {
        GrothElement::from_label(SimpleLabel::Free {
            i: self.d.eps,
            beta: beta.clone(),
        })
    }

    fn nil(&self, i: crate::grouprep::SimpleId, t: u32) -> GreenElement {
        GreenElement::from_label(IndecLabel::Nil { i, t })
    }

    fn eig(&self, t: u32, beta: &Cyclotomic) -> GreenElement {
        GreenElement::from_label(IndecLabel::Eig {
            i: self.d.eps,
            t,
            beta: beta.clone(),
        })
    }

    fn mul<L: RingLabel>(
        &self,
        a: &RingElement<L>,
        b: &RingElement<L>,
    ) -> Result<RingElement<L>, GreenError> {
        ring_mul(self.alg, a, b)
    }

    fn pow<L: RingLabel>(&self, a: &RingElement<L>, k: u32) -> Result<RingElement<L>, GreenError> {
        ring_pow(self.alg, a, k)
    }

    fn one_plus_chi<L: RingLabel>(&self) -> RingElement<L> {
        RingElement::<L>::simple(self.d.eps).add(&RingElement::simple(self.d.chi))
    }

    /// X_2 = {1, λ, χ, λχ, x^l, χx^l | 1 ≤ l ≤ (m−1)/2} in the given ring.
    fn x2_basis<L: RingLabel>(&self) -> Result<Vec<RingElement<L>>, GreenError> {
        let d = &self.d;
        let lamchi = self.mul(
            &RingElement::<L>::simple(d.lam),
            &RingElement::simple(d.chi),
        )?;
        let mut out = vec![
            RingElement::simple(d.eps),
            RingElement::simple(d.lam),
            RingElement::simple(d.chi),
            lamchi,
        ];
        let x = RingElement::<L>::simple(rho(self.alg, 1));
        for l in 1..=self.half {
            let xl = self.pow(&x, l)?;
            out.push(self.mul(&RingElement::simple(d.chi), &xl)?);
            out.push(xl);
        }
        Ok(out)
    }

    /// {λ, 1, x, …, x^{(m−1)/2}} times `e`.
    fn x3_block<L: RingLabel>(
        &self,
        e: &RingElement<L>,
    ) -> Result<Vec<RingElement<L>>, GreenError> {
        let x = RingElement::<L>::simple(rho(self.alg, 1));
        let mut out = vec![self.mul(&RingElement::simple(self.d.lam), e)?];
        let mut acc = e.clone();
        for l in 0..=self.half {
            if l > 0 {
                acc = self.mul(&x, &acc)?;
            }
            out.push(acc.clone());
        }
        Ok(out)
    }
}

fn check<L: RingLabel>(
    alg: &AlgebraData,
    name: String,
    relation: &str,
    lhs: &RingElement<L>,
    rhs: &RingElement<L>,
) -> Check {
    Check {
        name,
        relation: relation.into(),
        passed: lhs == rhs,
        lhs: lhs.display(alg),
        rhs: rhs.display(alg),
    }
}

/// Congruence `lhs ≡ lead` modulo the span of labels accepted by `inside`.
fn congruence<L: RingLabel>(
    alg: &AlgebraData,
    name: String,
    relation: &str,
    lhs: &RingElement<L>,
    lead: &RingElement<L>,
    modulus: &str,
    inside: impl Fn(&L) -> bool,
) -> Check {
    let rest = lhs.sub(lead);
    Check {
        name,
        relation: relation.into(),
        passed: rest.coeffs().keys().all(inside),
        lhs: lhs.display(alg),
        rhs: format!("{} mod {modulus}", lead.display(alg)),
    }
}

/// The elements form a Z-basis of the span of `expected` labels: every
/// support label is expected, counts agree and the transition matrix has
/// determinant ±1.
fn unimodular<L: RingLabel>(
    name: String,
    relation: &str,
    elements: &[RingElement<L>],
    expected: impl Fn(&L) -> bool,
    expected_count: usize,
) -> Check {
    let labels: BTreeSet<&L> = elements.iter().flat_map(|e| e.coeffs().keys()).collect();
    let stray = labels.iter().filter(|l| !expected(l)).count();
    let rows: Vec<Vec<Cyclotomic>> = elements
        .iter()
        .map(|e| {
            labels
                .iter()
                .map(|l| Cyclotomic::from_integer(1, e.coeff(l)))
                .collect()
        })
        .collect();
    let square = stray == 0 && elements.len() == expected_count && labels.len() == expected_count;
    let det = if square {
        Matrix::from_rows(1, labels.len(), rows)
            .ok()
            .and_then(|m| m.det().ok())
            .and_then(|d| d.as_integer())
    } else {
        None
    };
    Check {
        name,
        relation: relation.into(),
        passed: matches!(det, Some(1) | Some(-1)),
        lhs: match det {
            Some(d) => format!("det = {d}"),
            None => format!(
                "{} elements over {} labels ({} outside the span)",
                elements.len(),
                labels.len(),
                stray
            ),
        },
        rhs: format!("det = ±1 on {expected_count} labels"),
    }
}

fn groth_kdn_jobs<'a>(c: &'a Ctx<'a>) -> Vec<Job<'a>> {
    const REL: &str = "G_0(kD_n) presentation";
    let alg = c.alg;
    let m = c.d.m;
    let x = c.groth(rho(alg, 1));
    let mut jobs: Vec<Job<'a>> = Vec::new();
    {
        let x = x.clone();
        jobs.push(Box::new(move || {
            Ok(check(
                alg,
                "λx = x".into(),
                REL,
                &c.mul(&c.groth(c.d.lam), &x)?,
                &x,
            ))
        }));
    }
    {
        let x = x.clone();
        jobs.push(Box::new(move || {
            let f = x1_to_groth(alg, &f_poly(alg)?)?;
            Ok(check(
                alg,
                "χx = f(x)".into(),
                REL,
                &c.mul(&c.groth(c.d.chi), &x)?,
                &f,
            ))
        }));
    }
    {
        let x = x.clone();
        jobs.push(Box::new(move || {
            let g = x1_to_groth(alg, &g_poly(alg)?)?;
            Ok(check(alg, "x^m = g(x)".into(), REL, &c.pow(&x, m)?, &g))
        }));
    }
    for l in 1..m {
        let x = x.clone();
        jobs.push(Box::new(move || {
            let rhs = binomial_power_of_x(alg, l)?;
            Ok(check(
                alg,
                format!("x^{l} binomial decomposition"),
                "tensor powers of V_1",
                &c.pow(&x, l)?,
                &rhs,
            ))
        }));
        jobs.push(Box::new(move || {
            let lhs = x1_to_groth(alg, &simple_in_x1(alg, l)?)?;
            Ok(check(
                alg,
                format!("[V_{l}] expansion in x"),
                "X_1 coordinates",
                &lhs,
                &c.groth(rho(alg, l)),
            ))
        }));
    }
    for i in alg.simple_ids() {
        jobs.push(Box::new(move || {
            let e = c.groth(i);
            let p = groth_to_x2(alg, &e)?;
            let chi_span =
                |k: &super::CharComb| k.terms().keys().all(|&j| j == c.d.eps || j == c.d.chi);
            let shape = p
                .terms()
                .iter()
                .all(|(exp, k)| exp[0] == 0 || (exp[0] <= c.half && chi_span(k)));
            let back = x1_to_groth(alg, &p)?;
            let mut out = check(
                alg,
                format!("X_2 re-expression of [{}]", alg.name(i)),
                "X_2 coordinates",
                &back,
                &e,
            );
            out.passed &= shape;
            out.lhs = format!("{} = {}", p.display(alg), out.lhs);
            Ok(out)
        }));
    }
    let count = alg.num_simples();
    jobs.push(Box::new(move || {
        let mut els = vec![c.groth(c.d.eps), c.groth(c.d.lam), c.groth(c.d.chi)];
        els.push(c.mul(&c.groth(c.d.lam), &c.groth(c.d.chi))?);
        let x = c.groth(rho(alg, 1));
        for l in 1..m {
            els.push(c.pow(&x, l)?);
        }
        Ok(unimodular(
            "X_1 is a Z-basis".into(),
            "X_1 basis",
            &els,
            |l| matches!(l, SimpleLabel::Torsion(_)),
            count,
        ))
    }));
    jobs.push(Box::new(move || {
        let els = c.x2_basis::<SimpleLabel>()?;
        Ok(unimodular(
            "X_2 is a Z-basis".into(),
            "X_2 basis",
            &els,
            |l| matches!(l, SimpleLabel::Torsion(_)),
            count,
        ))
    }));
    jobs
}

fn groth_h_jobs<'a>(c: &'a Ctx<'a>, betas: &'a [Cyclotomic]) -> Vec<Job<'a>> {
    const REL: &str = "G_0(H) presentation";
    let alg = c.alg;
    let mut jobs: Vec<Job<'a>> = Vec::new();
    for b in betas {
        jobs.push(Box::new(move || {
            let y = c.free(b);
            Ok(check(
                alg,
                format!("χy_β = y_β (β = {b})"),
                REL,
                &c.mul(&c.groth(c.d.chi), &y)?,
                &y,
            ))
        }));
        jobs.push(Box::new(move || {
            let lhs = c.mul(&c.free(b), &c.free(&-b))?;
            let rhs = c.one_plus_chi::<SimpleLabel>().scale(2);
            Ok(check(
                alg,
                format!("y_β y_-β = 2(1+χ) (β = {b})"),
                REL,
                &lhs,
                &rhs,
            ))
        }));
        for a in betas {
            if (a + b).is_zero() {
                continue;
            }
            jobs.push(Box::new(move || {
                let lhs = c.mul(&c.free(a), &c.free(b))?;
                let rhs = c.free(&(a + b)).scale(2);
                Ok(check(
                    alg,
                    format!("y_α y_β = 2y_(α+β) (α = {a}, β = {b})"),
                    REL,
                    &lhs,
                    &rhs,
                ))
            }));
        }
        let count = alg.orbit_reps().len();
        jobs.push(Box::new(move || {
            let els = c.x3_block(&c.free(b))?;
            let inside = |l: &SimpleLabel| matches!(l, SimpleLabel::Free { beta, .. } if beta == b);
            Ok(unimodular(
                format!("X_3 is a Z-basis at β = {b}"),
                "X_1 ∪ X_3 basis",
                &els,
                inside,
                count,
            ))
        }));
    }
    jobs
}

fn green_r_jobs<'a>(c: &'a Ctx<'a>, tmax: u32) -> Vec<Job<'a>> {
    const REL: &str = "R presentation";
    let alg = c.alg;
    let eps = c.d.eps;
    let chi = c.d.chi;
    let mut jobs: Vec<Job<'a>> = Vec::new();
    jobs.push(Box::new(move || {
        let y = c.nil(eps, 2);
        let rhs = c.mul(&c.one_plus_chi::<IndecLabel>(), &y)?;
        Ok(check(alg, "y² = (1+χ)y".into(), REL, &c.mul(&y, &y)?, &rhs))
    }));
    for t in [2, 3] {
        jobs.push(Box::new(move || {
            let lhs = c.mul(&c.nil(eps, t), &c.nil(eps, 1))?;
            Ok(check(
                alg,
                format!("V_{t}(ε) ⊗ V_1(ε) = V_{t}(ε)"),
                "length-two and length-three products",
                &lhs,
                &c.nil(eps, t),
            ))
        }));
    }
    let tops = 2 * tmax + 2;
    for t in 2..=tops {
        jobs.push(Box::new(move || {
            let lhs = c.mul(&c.nil(eps, 2), &c.nil(eps, t))?;
            let rhs = if t % 2 == 0 {
                c.nil(eps, t).add(&c.nil(chi, t))
            } else {
                c.nil(eps, t + 1).add(&c.nil(chi, t - 1))
            };
            Ok(check(
                alg,
                format!("V_2(ε) ⊗ V_{t}(ε)"),
                "length-two products",
                &lhs,
                &rhs,
            ))
        }));
        if t >= 3 {
            jobs.push(Box::new(move || {
                let lhs = c.mul(&c.nil(eps, 3), &c.nil(eps, t))?;
                let rhs = c
                    .nil(eps, t + 2)
                    .add(&c.nil(eps, t - 2))
                    .add(&c.nil(chi, t));
                Ok(check(
                    alg,
                    format!("V_3(ε) ⊗ V_{t}(ε)"),
                    "length-three products",
                    &lhs,
                    &rhs,
                ))
            }));
        }
    }
    for t in 0..=tmax {
        jobs.push(Box::new(move || {
            let zt = c.pow(&c.nil(eps, 3), t)?;
            let bound = (2 * t).saturating_sub(1);
            let inside = |l: &IndecLabel| matches!(l, IndecLabel::Nil { t, .. } if *t <= bound);
            let name = format!("z^{t} ≡ [V_{}(ε)]", 2 * t + 1);
            Ok(congruence(
                alg,
                name,
                "leading term",
                &zt,
                &c.nil(eps, 2 * t + 1),
                &format!("M_{bound}"),
                inside,
            ))
        }));
        jobs.push(Box::new(move || {
            let yzt = c.mul(&c.nil(eps, 2), &c.pow(&c.nil(eps, 3), t)?)?;
            let bound = 2 * t;
            let inside = |l: &IndecLabel| matches!(l, IndecLabel::Nil { t, .. } if *t <= bound);
            let name = format!("yz^{t} ≡ [V_{}(ε)]", 2 * t + 2);
            Ok(congruence(
                alg,
                name,
                "leading term",
                &yzt,
                &c.nil(eps, 2 * t + 2),
                &format!("M_{bound}"),
                inside,
            ))
        }));
    }
    jobs.push(Box::new(move || {
        let x2 = c.x2_basis::<IndecLabel>()?;
        let y = c.nil(eps, 2);
        let z = c.nil(eps, 3);
        let mut els = Vec::new();
        let mut zt = GreenElement::one(alg);
        for t in 0..=tmax {
            if t > 0 {
                zt = c.mul(&zt, &z)?;
            }
            let yzt = c.mul(&y, &zt)?;
            for r in &x2 {
                els.push(c.mul(r, &zt)?);
                els.push(c.mul(r, &yzt)?);
            }
        }
        let bound = 2 * tmax + 2;
        let inside = |l: &IndecLabel| matches!(l, IndecLabel::Nil { t, .. } if *t <= bound);
        let count = alg.num_simples() * bound as usize;
        Ok(unimodular(
            format!("B_R is a Z-basis of M_{bound}"),
            "B_R basis",
            &els,
            inside,
            count,
        ))
    }));
    jobs
}

fn green_h_jobs<'a>(c: &'a Ctx<'a>, betas: &'a [Cyclotomic], tmax: u32) -> Vec<Job<'a>> {
    const REL: &str = "r(H) presentation";
    let alg = c.alg;
    let eps = c.d.eps;
    let mut jobs: Vec<Job<'a>> = Vec::new();
    for b in betas {
        jobs.push(Box::new(move || {
            let w = c.eig(1, b);
            Ok(check(
                alg,
                format!("χw_β = w_β (β = {b})"),
                REL,
                &c.mul(&c.green(c.d.chi), &w)?,
                &w,
            ))
        }));
        jobs.push(Box::new(move || {
            let lhs = c.mul(&c.eig(1, b), &c.eig(1, &-b))?;
            let rhs = c.mul(&c.one_plus_chi::<IndecLabel>(), &c.nil(eps, 2))?;
            Ok(check(
                alg,
                format!("w_β w_-β = (1+χ)y (β = {b})"),
                REL,
                &lhs,
                &rhs,
            ))
        }));
        jobs.push(Box::new(move || {
            let w = c.eig(1, b);
            Ok(check(
                alg,
                format!("yw_β = 2w_β (β = {b})"),
                REL,
                &c.mul(&c.nil(eps, 2), &w)?,
                &w.scale(2),
            ))
        }));
        for a in betas {
            if (a + b).is_zero() {
                continue;
            }
            jobs.push(Box::new(move || {
                let lhs = c.mul(&c.eig(1, a), &c.eig(1, b))?;
                let rhs = c.eig(1, &(a + b)).scale(2);
                Ok(check(
                    alg,
                    format!("w_α w_β = 2w_(α+β) (α = {a}, β = {b})"),
                    REL,
                    &lhs,
                    &rhs,
                ))
            }));
        }
        for l in 1..=tmax {
            jobs.push(Box::new(move || {
                let lhs = c.mul(&c.pow(&c.nil(eps, 3), l)?, &c.eig(1, b))?;
                let inside = |x: &IndecLabel| matches!(x, IndecLabel::Eig { t, beta, .. } if *t <= l && beta == b);
                let name = format!("z^{l} w_β ≡ [V_{}(ε,β)] (β = {b})", l + 1);
                Ok(congruence(alg, name, "leading term", &lhs, &c.eig(l + 1, b), &format!("P^β_{l}"), inside))
            }));
        }
        jobs.push(Box::new(move || {
            let z = c.nil(eps, 3);
            let mut els = Vec::new();
            let mut zw = c.eig(1, b);
            for l in 0..=tmax {
                if l > 0 {
                    zw = c.mul(&z, &zw)?;
                }
                els.extend(c.x3_block(&zw)?);
            }
            let bound = tmax + 1;
            let inside = |x: &IndecLabel| matches!(x, IndecLabel::Eig { t, beta, .. } if *t <= bound && beta == b);
            let count = alg.orbit_reps().len() * bound as usize;
            Ok(unimodular(format!("B_P is a Z-basis of P^β_{bound} (β = {b})"), "B_P basis", &els, inside, count))
        }));
    }
    jobs
}

/// Checks every defining relation and basis claim of the chosen suite by
/// exact ring computation. Identities run in parallel; the report keeps
/// a fixed order.
pub fn verify_presentation(
    alg: &AlgebraData,
    suite: Suite,
    config: &PresentationConfig,
) -> Result<Report, GreenError> {
    let d = dihedral(alg)?;
    if config
        .betas
        .iter()
        .any(|b| b.is_zero() || b.order() != alg.order())
    {
        return Err(GreenError::InvalidParameter(
            "β values must be nonzero elements of the coefficient field".into(),
        ));
    }
    let half = (d.m - 1) / 2;
    let ctx = Ctx { alg, d, half };
    let mut jobs: Vec<Job<'_>> = Vec::new();
    for part in suite.parts() {
        jobs.extend(match part {
            Suite::GrothKDn => groth_kdn_jobs(&ctx),
            Suite::GrothH => groth_h_jobs(&ctx, &config.betas),
            Suite::GreenR => green_r_jobs(&ctx, config.tmax),
            Suite::GreenH => green_h_jobs(&ctx, &config.betas, config.tmax),
            Suite::Combined => unreachable!("combined expands to its parts"),
        });
    }
    let checks = jobs
        .par_iter()
        .map(|job| job())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Report { checks })
}
