use std::collections::BTreeMap;
use std::fmt;

use crate::exactnum::{Cyclotomic, Matrix};

use super::{GroupData, GroupError};

/// Index of a simple kG-module in [`AlgebraData::simples`]. The index order
/// is the label order used for sorting and for choosing orbit
/// representatives.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleId(pub usize);

impl fmt::Display for SimpleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A simple kG-module as an explicit matrix representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleRep {
    pub name: String,
    pub dim: usize,
    /// One matrix per group generator, in generator order.
    pub gen_matrices: Vec<Matrix>,
    /// Trace of the representing matrix, indexed by group element.
    pub character: Vec<Cyclotomic>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraMode {
    /// H = kD_n(χ, a^m, 0) with n = 2m.
    Dihedral {
        m: u32,
    },
    Custom,
}

/// The data of a Hopf-Ore extension H = kG(χ⁻¹, a, 0) together with the
/// derived tables of kG used by the fusion rules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData {
    order: u32,
    group: GroupData,
    central: usize,
    chi: Vec<Cyclotomic>,
    q: Cyclotomic,
    q_order: u32,
    s: u32,
    simples: Vec<SimpleRep>,
    chi_simple: SimpleId,
    trivial: SimpleId,
    sigma: Vec<SimpleId>,
    omega: Vec<Cyclotomic>,
    /// `fusion[i][j][l] = N_{i,j}^l`.
    fusion: Vec<Vec<Vec<u32>>>,
    orbit_rep: Vec<SimpleId>,
    mode: AlgebraMode,
}

/// Caller-supplied data for [`custom_algebra`].
#[derive(Clone, Debug)]
pub struct CustomAlgebraInput {
    /// Scalars live in Q(ζ_order).
    pub order: u32,
    pub group: GroupData,
    /// `(name, generator matrices)` for each simple module, in label order.
    pub simples: Vec<(String, Vec<Matrix>)>,
    pub central: usize,
    /// Values of the linear character χ, indexed by group element.
    pub chi: Vec<Cyclotomic>,
}

/// Matrices of every group element, obtained by multiplying generator
/// matrices along the breadth-first words of `group`.
pub fn element_actions(group: &GroupData, gens: &[Matrix]) -> Vec<Matrix> {
    let dim = gens.first().map_or(0, Matrix::rows);
    let order = gens.first().map_or(1, Matrix::order);
    let mut out: Vec<Option<Matrix>> = vec![None; group.size()];
    out[group.identity()] = Some(Matrix::identity(order, dim));
    for &g in group.bfs_order() {
        if let Some((p, pos)) = group.parent(g) {
            let prev = out[p].as_ref().expect("parent precedes child in BFS order");
            out[g] = Some(prev.mat_mul(&gens[pos]).expect("square generator matrices"));
        }
    }
    out.into_iter()
        .map(|m| m.expect("every element reached"))
        .collect()
}

fn inner_product(group: &GroupData, a: &[Cyclotomic], b: &[Cyclotomic], order: u32) -> Cyclotomic {
    let mut acc = Cyclotomic::zero(order);
    for g in 0..group.size() {
        acc = &acc + &(&a[g] * &b[group.inverse(g)]);
    }
    acc.scale(&crate::exactnum::Rational::new(1, group.size() as i64))
}

/// Builds the Hopf-Ore datum from a group, its complete list of simple
/// modules, a central element and a linear character.
pub fn custom_algebra(input: CustomAlgebraInput) -> Result<AlgebraData, GroupError> {
    let CustomAlgebraInput {
        order,
        group,
        simples,
        central,
        chi,
    } = input;
    let n = group.size();
    if chi.len() != n {
        return Err(GroupError::NotACharacter(format!(
            "{} values for a group of order {n}",
            chi.len()
        )));
    }
    if let Some(v) = chi.iter().find(|v| v.order() != order) {
        return Err(GroupError::NotACharacter(format!(
            "value {v} is not in Q(z{order})"
        )));
    }
    for g in 0..n {
        if chi[g].is_zero() {
            return Err(GroupError::NotACharacter(format!(
                "χ vanishes at element {g}"
            )));
        }
        for h in 0..n {
            if chi[group.mul(g, h)] != &chi[g] * &chi[h] {
                return Err(GroupError::NotACharacter(format!(
                    "χ is not multiplicative at ({g}, {h})"
                )));
            }
        }
    }
    if central >= n || !group.is_central(central) {
        return Err(GroupError::NotCentral(central));
    }
    let q = chi[central].clone();
    if q.is_one() {
        return Err(GroupError::TrivialQ);
    }

    let mut reps = Vec::with_capacity(simples.len());
    for (name, gens) in simples {
        if gens.len() != group.generators().len() {
            return Err(GroupError::InvalidRepresentation {
                name,
                reason: format!(
                    "{} matrices for {} generators",
                    gens.len(),
                    group.generators().len()
                ),
            });
        }
        let dim = gens[0].rows();
        if dim == 0
            || gens
                .iter()
                .any(|m| m.rows() != dim || m.cols() != dim || m.order() != order)
        {
            return Err(GroupError::InvalidRepresentation {
                name,
                reason: "generator matrices must be nonempty, square, equal-sized and over the algebra's field".into(),
            });
        }
        let elems = element_actions(&group, &gens);
        for g in 0..n {
            for (pos, &s) in group.generators().iter().enumerate() {
                let lhs = elems[g].mat_mul(&gens[pos]).expect("square");
                if lhs != elems[group.mul(g, s)] {
                    return Err(GroupError::InvalidRepresentation {
                        name,
                        reason: format!("relation fails at element {g} times generator {pos}"),
                    });
                }
            }
        }
        let character = elems.iter().map(|m| m.trace().expect("square")).collect();
        reps.push(SimpleRep {
            name,
            dim,
            gen_matrices: gens,
            character,
        });
    }

    for a in &reps {
        if !inner_product(&group, &a.character, &a.character, order).is_one() {
            return Err(GroupError::NotIrreducible(a.name.clone()));
        }
    }
    for (i, a) in reps.iter().enumerate() {
        for b in &reps[i + 1..] {
            if !inner_product(&group, &a.character, &b.character, order).is_zero() {
                return Err(GroupError::IsomorphicSimples(
                    a.name.clone(),
                    b.name.clone(),
                ));
            }
        }
    }
    let total: usize = reps.iter().map(|r| r.dim * r.dim).sum();
    if total != n {
        return Err(GroupError::IncompleteSimpleList {
            sum_of_squares: total,
            group_order: n,
        });
    }

    let chi_simple = reps
        .iter()
        .position(|r| r.dim == 1 && r.character == chi)
        .map(SimpleId)
        .ok_or(GroupError::IncompleteSimpleList {
            sum_of_squares: total,
            group_order: n,
        })?;

    let trivial = reps
        .iter()
        .position(|r| r.dim == 1 && r.character.iter().all(Cyclotomic::is_one))
        .map(SimpleId)
        .ok_or(GroupError::IncompleteSimpleList {
            sum_of_squares: total,
            group_order: n,
        })?;

    let limit = n as u64;
    let s = group
        .generators()
        .iter()
        .map(|&g| chi[g].multiplicative_order(limit).expect("finite group") as u32)
        .fold(1u32, lcm);
    let q_order = q.multiplicative_order(limit).expect("finite group") as u32;

    let k = reps.len();
    let mut fusion = vec![vec![vec![0u32; k]; k]; k];
    for i in 0..k {
        for j in i..k {
            let prod: Vec<Cyclotomic> = (0..n)
                .map(|g| &reps[i].character[g] * &reps[j].character[g])
                .collect();
            for l in 0..k {
                let c = inner_product(&group, &prod, &reps[l].character, order);
                let v = c
                    .as_integer()
                    .filter(|v| *v >= 0)
                    .ok_or_else(|| GroupError::InvalidFusion(format!("N_({i},{j})^{l} = {c}")))?;
                fusion[i][j][l] = v as u32;
                fusion[j][i][l] = v as u32;
            }
        }
    }

    let mut sigma = Vec::with_capacity(k);
    for i in 0..k {
        let row = &fusion[chi_simple.0][i];
        let targets: Vec<usize> = (0..k).filter(|&l| row[l] > 0).collect();
        match targets.as_slice() {
            [l] if row[*l] == 1 => sigma.push(SimpleId(*l)),
            _ => {
                return Err(GroupError::InvalidFusion(format!(
                    "V_χ ⊗ {} is not simple",
                    reps[i].name
                )))
            }
        }
    }

    let mut omega = Vec::with_capacity(k);
    for r in &reps {
        let m = &element_actions(&group, &r.gen_matrices)[central];
        let w = m
            .scalar_value()
            .ok_or_else(|| GroupError::NotIrreducible(r.name.clone()))?;
        omega.push(w);
    }

    let mut orbit_rep = vec![SimpleId(0); k];
    for (i, rep) in orbit_rep.iter_mut().enumerate() {
        let mut best = i;
        let mut cur = sigma[i].0;
        while cur != i {
            best = best.min(cur);
            cur = sigma[cur].0;
        }
        *rep = SimpleId(best);
    }

    Ok(AlgebraData {
        order,
        group,
        central,
        chi,
        q,
        q_order,
        s,
        simples: reps,
        chi_simple,
        trivial,
        sigma,
        omega,
        fusion,
        orbit_rep,
        mode: AlgebraMode::Custom,
    })
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

impl AlgebraData {
    pub(crate) fn set_mode(&mut self, mode: AlgebraMode) {
        self.mode = mode;
    }

    /// Cyclotomic order n of the scalar field Q(ζ_n).
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn group(&self) -> &GroupData {
        &self.group
    }

    /// The central group element `a` of the Hopf datum.
    pub fn central(&self) -> usize {
        self.central
    }

    pub fn chi(&self) -> &[Cyclotomic] {
        &self.chi
    }

    /// χ⁻¹(g).
    pub fn chi_inv(&self, g: usize) -> Cyclotomic {
        self.chi[self.group.inverse(g)].clone()
    }

    /// χ^k(g) for any integer k.
    pub fn chi_pow(&self, g: usize, k: i64) -> Cyclotomic {
        self.chi[g].pow(k).expect("character values are nonzero")
    }

    /// q = χ(a).
    pub fn q(&self) -> &Cyclotomic {
        &self.q
    }

    /// Multiplicative order of q.
    pub fn q_order(&self) -> u32 {
        self.q_order
    }

    /// s = |χ|, the order of χ in the character group.
    pub fn s(&self) -> u32 {
        self.s
    }

    /// Whether |q| = |χ|, the standing hypothesis of the classification and
    /// of the closed-form fusion rules.
    pub fn fusion_ready(&self) -> bool {
        self.q_order == self.s
    }

    pub fn simples(&self) -> &[SimpleRep] {
        &self.simples
    }

    pub fn simple(&self, i: SimpleId) -> &SimpleRep {
        &self.simples[i.0]
    }

    pub fn num_simples(&self) -> usize {
        self.simples.len()
    }

    pub fn simple_ids(&self) -> impl Iterator<Item = SimpleId> {
        (0..self.simples.len()).map(SimpleId)
    }

    pub fn contains(&self, i: SimpleId) -> bool {
        i.0 < self.simples.len()
    }

    pub fn name(&self, i: SimpleId) -> &str {
        &self.simples[i.0].name
    }

    pub fn simple_by_name(&self, name: &str) -> Option<SimpleId> {
        self.simples
            .iter()
            .position(|r| r.name == name)
            .map(SimpleId)
    }

    pub fn dim(&self, i: SimpleId) -> usize {
        self.simples[i.0].dim
    }

    /// The simple module V_χ.
    pub fn chi_simple(&self) -> SimpleId {
        self.chi_simple
    }

    /// The trivial module V_ε.
    pub fn trivial(&self) -> SimpleId {
        self.trivial
    }

    /// σ(i), with V_χ ⊗ V_i ≅ V_σ(i).
    pub fn sigma(&self, i: SimpleId) -> SimpleId {
        self.sigma[i.0]
    }

    /// σ^k(i) for any integer k.
    pub fn sigma_pow(&self, i: SimpleId, k: i64) -> SimpleId {
        let s = self.s as i64;
        let steps = k.rem_euclid(s);
        (0..steps).fold(i, |acc, _| self.sigma(acc))
    }

    /// ω_i, the scalar by which `a` acts on V_i.
    pub fn omega(&self, i: SimpleId) -> &Cyclotomic {
        &self.omega[i.0]
    }

    /// ω_i^s.
    pub fn omega_s(&self, i: SimpleId) -> Cyclotomic {
        self.omega[i.0].pow(self.s as i64).expect("nonzero")
    }

    /// N_{i,j}^l.
    pub fn fusion_coeff(&self, i: SimpleId, j: SimpleId, l: SimpleId) -> u32 {
        self.fusion[i.0][j.0][l.0]
    }

    /// Least label of the σ-orbit of `i`.
    pub fn orbit_rep(&self, i: SimpleId) -> SimpleId {
        self.orbit_rep[i.0]
    }

    /// The orbit representatives I_0 in label order.
    pub fn orbit_reps(&self) -> Vec<SimpleId> {
        self.simple_ids()
            .filter(|&i| self.orbit_rep(i) == i)
            .collect()
    }

    /// The σ-orbit of `i`, starting at `i`.
    pub fn orbit(&self, i: SimpleId) -> Vec<SimpleId> {
        let mut out = vec![i];
        let mut cur = self.sigma(i);
        while cur != i {
            out.push(cur);
            cur = self.sigma(cur);
        }
        out
    }

    pub fn mode(&self) -> &AlgebraMode {
        &self.mode
    }

    /// The dihedral parameter m when this is kD_{2m}(χ, a^m, 0).
    pub fn dihedral_m(&self) -> Option<u32> {
        match self.mode {
            AlgebraMode::Dihedral { m } => Some(m),
            AlgebraMode::Custom => None,
        }
    }

    /// Equality of all mathematical data, ignoring the construction mode.
    pub fn same_structure(&self, other: &AlgebraData) -> bool {
        let mut a = self.clone();
        a.mode = other.mode.clone();
        a == *other
    }

    /// Linear characters among the simples (one-dimensional modules).
    pub fn linear_characters(&self) -> Vec<SimpleId> {
        self.simple_ids().filter(|&i| self.dim(i) == 1).collect()
    }
}

/// N_{i,j}^l for all l with a nonzero coefficient.
pub fn fusion_coeffs(
    alg: &AlgebraData,
    i: SimpleId,
    j: SimpleId,
) -> Result<BTreeMap<SimpleId, u32>, GroupError> {
    for x in [i, j] {
        if !alg.contains(x) {
            return Err(GroupError::UnknownLabel(x.to_string()));
        }
    }
    Ok(alg
        .simple_ids()
        .filter_map(|l| {
            let c = alg.fusion_coeff(i, j, l);
            (c > 0).then_some((l, c))
        })
        .collect())
}
