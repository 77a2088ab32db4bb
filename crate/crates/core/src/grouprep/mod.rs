//! Finite groups, their simple modules and the Hopf-Ore datum built on them.

mod algebra;
mod group;

pub use algebra::{
    custom_algebra, element_actions, fusion_coeffs, AlgebraData, AlgebraMode, CustomAlgebraInput,
    SimpleId, SimpleRep,
};
pub use group::GroupData;

use crate::exactnum::{Cyclotomic, Matrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("generators reach {reached} of {size} elements")]
    NotGenerated { reached: usize, size: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("element {0} is not central")]
    NotCentral(usize),
    #[error("χ(a) = 1")]
    TrivialQ,
    #[error("simple list incomplete: Σ dim² = {sum_of_squares}, |G| = {group_order}")]
    IncompleteSimpleList {
        sum_of_squares: usize,
        group_order: usize,
    },
    #[error("representation {0} is not irreducible")]
    NotIrreducible(String),
    #[error("representations {0} and {1} are isomorphic")]
    IsomorphicSimples(String, String),
    #[error("not a linear character: {0}")]
    NotACharacter(String),
    #[error("invalid representation {name}: {reason}")]
    InvalidRepresentation { name: String, reason: String },
    #[error("inconsistent fusion table: {0}")]
    InvalidFusion(String),
    #[error("unknown simple label {0}")]
    UnknownLabel(String),
}

/// Generator matrices of the simple kD_{2m}-modules in label order
/// ε, λ, χ, λχ, ρ_1, …, ρ_{m−1}, over Q(ζ_{2m}).
pub fn dihedral_simples(m: u32) -> Vec<(String, Vec<Matrix>)> {
    let n = 2 * m;
    let lin = |name: &str, a: i64, b: i64| {
        let one = |v: i64| Matrix::scalar(n, 1, &Cyclotomic::from_integer(n, v));
        (name.to_string(), vec![one(a), one(b)])
    };
    let mut out = vec![
        lin("eps", 1, 1),
        lin("lam", 1, -1),
        lin("chi", -1, 1),
        lin("lamchi", -1, -1),
    ];
    let zero = Cyclotomic::zero(n);
    let one = Cyclotomic::one(n);
    for l in 1..m as i64 {
        let a = Matrix::from_rows(
            n,
            2,
            vec![
                vec![Cyclotomic::root_of_unity(n, l), zero.clone()],
                vec![zero.clone(), Cyclotomic::root_of_unity(n, -l)],
            ],
        )
        .expect("2x2");
        let b = Matrix::from_rows(
            n,
            2,
            vec![
                vec![zero.clone(), one.clone()],
                vec![one.clone(), zero.clone()],
            ],
        )
        .expect("2x2");
        out.push((l.to_string(), vec![a, b]));
    }
    out
}

/// The χ of kD_{2m}(χ, a^m, 0): χ(a) = −1, χ(b) = 1.
pub fn dihedral_chi(group: &GroupData, m: u32) -> Vec<Cyclotomic> {
    let n = 2 * m as usize;
    (0..group.size())
        .map(|g| {
            let k = (g % n) as i64;
            Cyclotomic::from_integer(2 * m, if k % 2 == 0 { 1 } else { -1 })
        })
        .collect()
}

/// H = kD_n(χ, a^m, 0) with n = 2m, m odd.
pub fn dihedral_algebra(m: u32) -> Result<AlgebraData, GroupError> {
    if m <= 1 || m.is_multiple_of(2) {
        return Err(GroupError::InvalidParameter(format!(
            "m must be odd and greater than 1, got {m}"
        )));
    }
    let n = 2 * m as usize;
    let group = GroupData::dihedral(n)?;
    let chi = dihedral_chi(&group, m);
    let central = group.power(1, m as usize);
    let mut alg = custom_algebra(CustomAlgebraInput {
        order: 2 * m,
        simples: dihedral_simples(m),
        group,
        central,
        chi,
    })?;
    alg.set_mode(AlgebraMode::Dihedral { m });
    Ok(alg)
}
