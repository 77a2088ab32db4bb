//! Closed-form fusion against the decomposition oracle away from the
//! dihedral grid, plus ring-level property tests.

mod common;

use std::sync::Arc;

use proptest::prelude::*;
use rayon::prelude::*;

use hopfore::decomp::{decompose, IndecLabel};
use hopfore::exactnum::Cyclotomic;
use hopfore::fusion::{multiset_dim, tensor_labels};
use hopfore::greenring::{ring_mul, GreenElement};
use hopfore::grouprep::AlgebraData;
use hopfore::hopfmod::{build, tensor};

use common::{cyclic_algebra, grid, rat};

fn labels(
    alg: &AlgebraData,
    tmax_nil: u32,
    tmax_eig: u32,
    betas: &[Cyclotomic],
) -> Vec<IndecLabel> {
    let mut out = Vec::new();
    for i in alg.simple_ids() {
        for t in 1..=tmax_nil {
            out.push(IndecLabel::Nil { i, t });
        }
    }
    for i in alg.orbit_reps() {
        for t in 1..=tmax_eig {
            for beta in betas {
                out.push(IndecLabel::Eig {
                    i,
                    t,
                    beta: beta.clone(),
                });
            }
        }
    }
    out
}

fn mismatches(alg: &Arc<AlgebraData>, labels: &[IndecLabel]) -> Vec<String> {
    let pairs: Vec<(usize, usize)> = (0..labels.len())
        .flat_map(|a| (0..labels.len()).map(move |b| (a, b)))
        .collect();
    pairs
        .into_par_iter()
        .filter_map(|(a, b)| {
            let (l, r) = (&labels[a], &labels[b]);
            let closed = tensor_labels(alg, l, r).unwrap();
            let module = tensor(&build(alg, l).unwrap(), &build(alg, r).unwrap()).unwrap();
            let oracle = decompose(&module, &[]).unwrap().multiset;
            (closed != oracle).then(|| format!("{} ⊗ {}", l.display(alg), r.display(alg)))
        })
        .collect()
}

#[test]
fn cyclic_six_with_omega_twist() {
    let alg = cyclic_algebra(6, 3, 1);
    assert_eq!(alg.s(), 2);
    let order = alg.order();
    assert!(
        alg.simple_ids().any(|i| !alg.omega_s(i).is_one()),
        "expected a nontrivial twist"
    );
    let betas = vec![
        rat(order, 1, 1),
        rat(order, -1, 1),
        rat(order, 2, 1),
        Cyclotomic::root_of_unity(order, 1),
    ];
    let bad = mismatches(&alg, &labels(&alg, 3, 2, &betas));
    assert!(
        bad.is_empty(),
        "{} mismatches, first {:?}",
        bad.len(),
        bad.first()
    );
}

#[test]
fn cyclic_four_long_chains() {
    let alg = cyclic_algebra(4, 1, 1);
    assert_eq!(alg.s(), 4);
    let order = alg.order();
    let betas = vec![rat(order, 1, 1), rat(order, -1, 1)];
    let bad = mismatches(&alg, &labels(&alg, 6, 2, &betas));
    assert!(
        bad.is_empty(),
        "{} mismatches, first {:?}",
        bad.len(),
        bad.first()
    );
}

fn green(l: &IndecLabel) -> GreenElement {
    GreenElement::from_label(l.clone())
}

fn small_grid() -> (Arc<AlgebraData>, Vec<IndecLabel>) {
    let (alg, mut labels) = grid(3);
    for i in alg.simple_ids() {
        labels.push(IndecLabel::Nil { i, t: 4 });
    }
    (alg, labels)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn green_ring_associative(a in 0usize..1000, b in 0usize..1000, c in 0usize..1000) {
        let (alg, labels) = small_grid();
        let (x, y, z) = (green(&labels[a % labels.len()]), green(&labels[b % labels.len()]), green(&labels[c % labels.len()]));
        let left = ring_mul(&alg, &ring_mul(&alg, &x, &y).unwrap(), &z).unwrap();
        let right = ring_mul(&alg, &x, &ring_mul(&alg, &y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn green_products_positive_and_commutative(a in 0usize..1000, b in 0usize..1000) {
        let (alg, labels) = small_grid();
        let (x, y) = (green(&labels[a % labels.len()]), green(&labels[b % labels.len()]));
        let xy = ring_mul(&alg, &x, &y).unwrap();
        prop_assert!(xy.coeffs().values().all(|&k| k > 0));
        prop_assert!(xy.coeffs().keys().all(|l| l.is_canonical(&alg)));
        prop_assert_eq!(xy, ring_mul(&alg, &y, &x).unwrap());
    }

    #[test]
    fn fusion_conserves_dimension(a in 0usize..1000, b in 0usize..1000) {
        let (alg, labels) = small_grid();
        let (l, r) = (&labels[a % labels.len()], &labels[b % labels.len()]);
        let got = tensor_labels(&alg, l, r).unwrap();
        prop_assert_eq!(multiset_dim(&alg, &got), l.dim(&alg) * r.dim(&alg));
    }
}
