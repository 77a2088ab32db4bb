//! Acceptance suite. Runs without the libtest harness and prints one
//! PASS/FAIL line per criterion.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use hopfore::decomp::{decompose, radical_length, IndecLabel};
use hopfore::fusion::{multiset_dim, tensor_labels, tensor_labels_with, LastRangeStart};
use hopfore::greenring::{
    binomial_power_of_x, ring_mul, to_groth, verify_presentation, GreenElement, GrothElement,
    PresentationConfig, Suite,
};
use hopfore::grouprep::AlgebraData;
use hopfore::hopfmod::{build, direct_sum, tensor};

use common::{cyclic_algebra, grid, rat};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn pairs(labels: &[IndecLabel]) -> Vec<(usize, usize)> {
    (0..labels.len())
        .flat_map(|a| (0..labels.len()).map(move |b| (a, b)))
        .collect()
}

fn show(alg: &AlgebraData, m: &BTreeMap<IndecLabel, u32>) -> String {
    let items: Vec<String> = m
        .iter()
        .map(|(l, k)| format!("{k}·{}", l.display(alg)))
        .collect();
    format!("{{{}}}", items.join(", "))
}

fn differential(
    alg: &Arc<AlgebraData>,
    left: &IndecLabel,
    right: &IndecLabel,
) -> Result<(), String> {
    let closed = tensor_labels(alg, left, right).map_err(|e| e.to_string())?;
    let module = tensor(&build(alg, left).unwrap(), &build(alg, right).unwrap()).unwrap();
    let oracle = decompose(&module, &[]).map_err(|e| e.to_string())?;
    if closed == oracle.multiset {
        Ok(())
    } else {
        Err(format!(
            "{} ⊗ {}: closed {} oracle {}",
            left.display(alg),
            right.display(alg),
            show(alg, &closed),
            show(alg, &oracle.multiset)
        ))
    }
}

/// Differential fusion suite on the dihedral grids.
fn criterion_1() -> Outcome {
    let mut checked = 0;
    for m in [3, 5] {
        let (alg, labels) = grid(m);
        let failures: Vec<String> = pairs(&labels)
            .into_par_iter()
            .filter_map(|(a, b)| differential(&alg, &labels[a], &labels[b]).err())
            .collect();
        if let Some(f) = failures.first() {
            return Err(format!(
                "m = {m}: {} mismatches, first: {f}",
                failures.len()
            ));
        }
        checked += labels.len() * labels.len();
    }
    Ok(format!("{checked} ordered pairs, zero mismatches"))
}

/// x^l in the Grothendieck ring against the binomial decomposition.
fn criterion_2() -> Outcome {
    let mut checked = 0;
    for m in [3, 5, 7] {
        let alg = Arc::new(hopfore::grouprep::dihedral_algebra(m).unwrap());
        let x = GrothElement::simple(alg.simple_by_name("1").unwrap());
        let mut power = x.clone();
        for l in 1..m {
            if l > 1 {
                power = ring_mul(&alg, &power, &x).map_err(|e| e.to_string())?;
            }
            let expected = binomial_power_of_x(&alg, l).map_err(|e| e.to_string())?;
            if power != expected {
                return Err(format!(
                    "m = {m}, l = {l}: {} vs {}",
                    power.display(&alg),
                    expected.display(&alg)
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} powers match"))
}

/// Presentation identities for m ∈ {3, 5, 7}.
fn criterion_3() -> Outcome {
    let mut total = 0;
    for m in [3, 5, 7] {
        let alg = Arc::new(hopfore::grouprep::dihedral_algebra(m).unwrap());
        let order = alg.order();
        let betas = vec![
            rat(order, 1, 1),
            rat(order, -1, 1),
            rat(order, 2, 1),
            rat(order, -2, 1),
            rat(order, 1, 2),
        ];
        let config = PresentationConfig { betas, tmax: 6 };
        let report =
            verify_presentation(&alg, Suite::Combined, &config).map_err(|e| e.to_string())?;
        if let Some(bad) = report.checks.iter().find(|c| !c.passed) {
            return Err(format!(
                "m = {m}: {} failed: {} vs {}",
                bad.name, bad.lhs, bad.rhs
            ));
        }
        total += report.checks.len();
    }
    Ok(format!("{total} identities hold"))
}

/// Dimension conservation, oracle additivity, round trips, radical lengths.
fn criterion_4() -> Outcome {
    let mut notes = Vec::new();
    for m in [3, 5] {
        let (alg, labels) = grid(m);
        let bad = pairs(&labels).into_par_iter().find_any(|&(a, b)| {
            let got = tensor_labels(&alg, &labels[a], &labels[b]).unwrap();
            multiset_dim(&alg, &got) != labels[a].dim(&alg) * labels[b].dim(&alg)
        });
        if let Some((a, b)) = bad {
            return Err(format!(
                "dimension not conserved for {:?} ⊗ {:?}",
                labels[a], labels[b]
            ));
        }
        for l in &labels {
            let module = build(&alg, l).unwrap();
            let d = decompose(&module, &[]).map_err(|e| e.to_string())?;
            if d.multiset != BTreeMap::from([(l.clone(), 1)]) {
                return Err(format!(
                    "round trip of {} gave {}",
                    l.display(&alg),
                    show(&alg, &d.multiset)
                ));
            }
            let len = radical_length(&module, &[]).map_err(|e| e.to_string())?;
            if len != l.t() {
                return Err(format!("radical length of {} is {len}", l.display(&alg)));
            }
        }
        notes.push(format!("m = {m}: {} labels", labels.len()));
    }
    let (alg, labels) = grid(3);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for case in 0..20 {
        let parts: Vec<&IndecLabel> = (0..rng.gen_range(2..=3))
            .map(|_| labels.choose(&mut rng).unwrap())
            .collect();
        let mut sum = build(&alg, parts[0]).unwrap();
        let mut expected = BTreeMap::new();
        for p in &parts {
            *expected.entry((*p).clone()).or_insert(0) += 1;
        }
        for p in &parts[1..] {
            sum = direct_sum(&sum, &build(&alg, p).unwrap()).unwrap();
        }
        let mut separate: BTreeMap<IndecLabel, u32> = BTreeMap::new();
        for p in &parts {
            for (l, k) in decompose(&build(&alg, p).unwrap(), &[]).unwrap().multiset {
                *separate.entry(l).or_insert(0) += k;
            }
        }
        let joint = decompose(&sum, &[]).map_err(|e| e.to_string())?.multiset;
        if joint != separate || joint != expected {
            return Err(format!(
                "additivity case {case}: {} vs {}",
                show(&alg, &joint),
                show(&alg, &separate)
            ));
        }
    }
    notes.push("20 direct sums additive".into());
    Ok(notes.join("; "))
}

/// to_groth is multiplicative on random Green pairs.
fn criterion_5() -> Outcome {
    let (alg, labels) = grid(3);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for case in 0..50 {
        let a = GreenElement::from_label(labels.choose(&mut rng).unwrap().clone());
        let b = GreenElement::from_label(labels.choose(&mut rng).unwrap().clone());
        let ab = ring_mul(&alg, &a, &b).map_err(|e| e.to_string())?;
        let lhs = to_groth(&alg, &ab).map_err(|e| e.to_string())?;
        let ga = to_groth(&alg, &a).map_err(|e| e.to_string())?;
        let gb = to_groth(&alg, &b).map_err(|e| e.to_string())?;
        let rhs = ring_mul(&alg, &ga, &gb).map_err(|e| e.to_string())?;
        if lhs != rhs {
            return Err(format!(
                "case {case}: {} vs {}",
                lhs.display(&alg),
                rhs.display(&alg)
            ));
        }
    }
    Ok("50 random pairs".into())
}

/// The p ≥ p' last-summand range: only u = p..s−1 conserves dimension
/// and agrees with the oracle.
fn criterion_6() -> Outcome {
    let alg = cyclic_algebra(4, 1, 1);
    let i = alg.simple_ids().next().unwrap();
    let (n, t) = (IndecLabel::Nil { i, t: 10 }, IndecLabel::Nil { i, t: 7 });
    let expected = n.dim(&alg) * t.dim(&alg);
    let dim_of = |reading| multiset_dim(&alg, &tensor_labels_with(&alg, &n, &t, reading).unwrap());
    let (p, zero, pprime) = (
        dim_of(LastRangeStart::P),
        dim_of(LastRangeStart::Zero),
        dim_of(LastRangeStart::PPrime),
    );
    if p != expected {
        return Err(format!(
            "u = p reading has dimension {p}, expected {expected}"
        ));
    }
    if zero == expected && pprime == expected {
        return Err("no alternative reading violates dimension conservation".into());
    }
    differential(&alg, &n, &t)?;
    Ok(format!("V_10 ⊗ V_7 over C_4: u=p gives {p}, u=0 gives {zero}, u=p' gives {pprime}; oracle agrees with u=p"))
}

/// tensor_labels is commutative on the grids.
fn criterion_7() -> Outcome {
    let mut checked = 0;
    for m in [3, 5] {
        let (alg, labels) = grid(m);
        let bad = pairs(&labels).into_par_iter().find_any(|&(a, b)| {
            tensor_labels(&alg, &labels[a], &labels[b]).unwrap()
                != tensor_labels(&alg, &labels[b], &labels[a]).unwrap()
        });
        if let Some((a, b)) = bad {
            return Err(format!(
                "{} and {} do not commute",
                labels[a].display(&alg),
                labels[b].display(&alg)
            ));
        }
        checked += labels.len() * labels.len();
    }
    Ok(format!("{checked} ordered pairs"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("differential fusion grid", criterion_1),
        ("binomial powers of x", criterion_2),
        ("presentation identities", criterion_3),
        ("structural invariants", criterion_4),
        ("Grothendieck compatibility", criterion_5),
        ("last-summand index range", criterion_6),
        ("commutativity", criterion_7),
    ];
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let tag = format!("criterion {}", k + 1);
        if !filter.is_empty()
            && !filter
                .iter()
                .any(|f| tag.contains(f.as_str()) || name.contains(f.as_str()))
        {
            continue;
        }
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("{tag} ({name}): PASS [{secs:.1}s] {msg}"),
            Err(msg) => {
                failed += 1;
                println!("{tag} ({name}): FAIL [{secs:.1}s] {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
