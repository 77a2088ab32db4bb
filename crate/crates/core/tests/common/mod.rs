#![allow(dead_code)]

use std::sync::Arc;

use hopfore::decomp::IndecLabel;
use hopfore::exactnum::{Cyclotomic, Matrix, Rational};
use hopfore::grouprep::{
    custom_algebra, dihedral_algebra, AlgebraData, CustomAlgebraInput, GroupData,
};

pub fn rat(order: u32, n: i64, d: i64) -> Cyclotomic {
    Cyclotomic::from_rational(order, Rational::new(n, d))
}

pub fn grid_betas(order: u32) -> Vec<Cyclotomic> {
    vec![
        rat(order, 1, 1),
        rat(order, -1, 1),
        rat(order, 2, 1),
        rat(order, 1, 2),
    ]
}

/// Nil(t, i) for t ≤ 3 and all i, then Eig(t, [j], β) for t ≤ 2, [j] ∈ I_0.
pub fn grid(m: u32) -> (Arc<AlgebraData>, Vec<IndecLabel>) {
    let alg = Arc::new(dihedral_algebra(m).unwrap());
    let mut labels = Vec::new();
    for i in alg.simple_ids() {
        for t in 1..=3 {
            labels.push(IndecLabel::Nil { i, t });
        }
    }
    for i in alg.orbit_reps() {
        for t in 1..=2 {
            for beta in grid_betas(alg.order()) {
                labels.push(IndecLabel::Eig { i, t, beta });
            }
        }
    }
    (alg, labels)
}

/// C_n with g^k at index k, simples g ↦ ζ_n^k, χ(g) = ζ_n^{chi_exp} and a = g^central.
pub fn cyclic_algebra(n: u32, chi_exp: i64, central: usize) -> Arc<AlgebraData> {
    let group = GroupData::cyclic(n as usize).unwrap();
    let chi = (0..n as i64)
        .map(|k| Cyclotomic::root_of_unity(n, k * chi_exp))
        .collect();
    let simples = (0..n as i64)
        .map(|k| {
            (
                format!("c{k}"),
                vec![Matrix::scalar(n, 1, &Cyclotomic::root_of_unity(n, k))],
            )
        })
        .collect();
    Arc::new(
        custom_algebra(CustomAlgebraInput {
            order: n,
            group,
            simples,
            central,
            chi,
        })
        .unwrap(),
    )
}
