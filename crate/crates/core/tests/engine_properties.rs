//! Cross-cutting engine invariants: soundness duality between verdicts and
//! Dutch books, agreement with independent oracles, and interval behavior
//! of the propagation engine.

mod common;

use common::*;
use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use prevision_core::coherence::{check_coherence, dutch_book, Assessment};
use prevision_core::constituents::enumerate_constituents;
use prevision_core::error::Error;
use prevision_core::formula::{Formula, Valuation};
use prevision_core::propagation::{extension_interval, is_coherent_extension};
use prevision_core::rational::Rational;

/// Every assessment either gets a coherent verdict or a validated Dutch
/// book, never both, never neither.
#[test]
fn soundness_duality_over_mixed_corpus() {
    let mut rng = ChaCha8Rng::seed_from_u64(1001);
    let atoms = ["A", "B", "C"];
    let mut coherent_count = 0;
    let mut incoherent_count = 0;
    for case in 0..60 {
        let assessment = if case % 2 == 0 {
            let entries = rng.gen_range(1..=3);
            random_coherent_assessment(&mut rng, &atoms, entries)
        } else {
            // unconstrained random values over random events; often incoherent
            let mut pairs = Vec::new();
            while pairs.len() < rng.gen_range(2..=3) {
                let event = random_event(&mut rng, &atoms);
                if pairs.iter().all(|(e, _)| *e != event) {
                    pairs.push((event, random_probability(&mut rng, 6)));
                }
            }
            match Assessment::point(pairs) {
                Ok(a) => a,
                Err(_) => continue,
            }
        };
        let verdict = check_coherence(&assessment).unwrap();
        if verdict.coherent {
            coherent_count += 1;
            assert!(verdict.certificate.is_none());
            assert_eq!(dutch_book(&assessment), Err(Error::CoherentAssessment));
        } else {
            incoherent_count += 1;
            let book = verdict.certificate.expect("incoherent verdicts carry a book");
            assert_sure_loss(&book, &assessment);
        }
    }
    assert!(coherent_count >= 10, "corpus degenerate: {coherent_count} coherent");
    assert!(incoherent_count >= 10, "corpus degenerate: {incoherent_count} incoherent");
}

/// A pair p(B|A) = x, p(not B|A) = y is coherent exactly on the line
/// x + y = 1.
#[test]
fn complement_coherence_is_the_unit_sum_line() {
    let grid = [rat(0, 1), rat(1, 4), rat(2, 5), rat(1, 2), rat(3, 5), rat(1, 1)];
    for x in &grid {
        for y in &grid {
            let assessment = Assessment::point(vec![
                (cond("B", "A"), x.clone()),
                (cond("not B", "A"), y.clone()),
            ])
            .unwrap();
            let verdict = check_coherence(&assessment).unwrap();
            assert_eq!(
                verdict.coherent,
                x + y == Rational::one(),
                "x={x} y={y}"
            );
        }
    }
}

/// Conditioning an event on itself admits probability one only.
#[test]
fn self_conditional_forced_to_one() {
    for x in [rat(0, 1), rat(1, 3), rat(99, 100), rat(1, 1)] {
        let direct = Assessment::point(vec![(cond("A", "A"), x.clone())]).unwrap();
        assert_eq!(check_coherence(&direct).unwrap().coherent, x.is_one());
        let negated = Assessment::point(vec![(cond("not A", "not A"), x.clone())]).unwrap();
        assert_eq!(check_coherence(&negated).unwrap().coherent, x.is_one());
    }
}

/// check_coherence agrees with direct convex-hull membership of the value
/// vector among the constituent points (small hand corpus; the random
/// version runs in the acceptance suite).
#[test]
fn hull_membership_matches_verdict_on_known_cases() {
    let cases: Vec<(Assessment, bool)> = vec![
        (
            Assessment::point(vec![
                (uncond("B"), rat(1, 1)),
                (cond("B", "A"), rat(0, 1)),
            ])
            .unwrap(),
            true,
        ),
        (
            Assessment::point(vec![
                (cond("B", "A"), rat(3, 5)),
                (cond("not B", "A"), rat(3, 5)),
            ])
            .unwrap(),
            false,
        ),
        (
            Assessment::point(vec![
                (uncond("A and B"), rat(3, 4)),
                (uncond("A"), rat(1, 2)),
            ])
            .unwrap(),
            false,
        ),
    ];
    for (assessment, expected) in cases {
        let verdict = check_coherence(&assessment).unwrap();
        assert_eq!(verdict.coherent, expected);
        let table = enumerate_constituents(&assessment.events()).unwrap();
        let values: Vec<Rational> = assessment
            .entries()
            .iter()
            .map(|e| e.lower.clone())
            .collect();
        let points = table.q_points(&values);
        assert_eq!(convex_hull_contains(&points, &values), expected);
    }
}

/// Where every antecedent keeps positive mass, coherence coincides with
/// ratio consistency of some rational distribution, checked by brute-force
/// enumeration of small-denominator distributions.
#[test]
fn ratio_consistency_brute_force_agreement() {
    let mut rng = ChaCha8Rng::seed_from_u64(2002);
    let atoms = ["A", "B", "C"];
    let mut witnesses_found = 0;
    for case in 0..30 {
        let assessment = if case % 2 == 0 {
            random_coherent_assessment(&mut rng, &atoms, 2)
        } else {
            let mut pairs = Vec::new();
            while pairs.len() < 2 {
                let event = random_event(&mut rng, &atoms);
                if pairs.iter().all(|(e, _)| *e != event) {
                    pairs.push((event, random_probability(&mut rng, 4)));
                }
            }
            match Assessment::point(pairs) {
                Ok(a) => a,
                Err(_) => continue,
            }
        };
        let verdict = check_coherence(&assessment).unwrap();
        let found = brute_force_ratio_witness(&assessment, 8);
        if found {
            witnesses_found += 1;
            assert!(
                verdict.coherent,
                "brute-force witness exists but engine says incoherent: {assessment:?}"
            );
        }
        if !verdict.coherent {
            assert!(
                !found,
                "engine says incoherent but a ratio-consistent distribution exists"
            );
        }
    }
    assert!(witnesses_found >= 8, "corpus degenerate: {witnesses_found}");
}

/// Searches distributions with denominator up to `max_denom` over the
/// constituents for one that gives every antecedent positive mass and
/// reproduces every assessed value as an exact ratio.
fn brute_force_ratio_witness(assessment: &Assessment, max_denom: u32) -> bool {
    let mut atom_set = std::collections::BTreeSet::new();
    for entry in assessment.entries() {
        atom_set.extend(entry.event.atoms());
    }
    let atoms: Vec<String> = atom_set.into_iter().collect();
    let valuations: Vec<Valuation> = Valuation::enumerate(&atoms).collect();
    if valuations.len() > 8 {
        return false;
    }
    let truth: Vec<(Vec<bool>, Vec<bool>)> = assessment
        .entries()
        .iter()
        .map(|entry| {
            let h: Vec<bool> = valuations
                .iter()
                .map(|v| entry.event.antecedent().eval(v).unwrap())
                .collect();
            let t: Vec<bool> = valuations
                .iter()
                .map(|v| {
                    entry.event.antecedent().eval(v).unwrap()
                        && entry.event.consequent().eval(v).unwrap()
                })
                .collect();
            (h, t)
        })
        .collect();
    for denom in 1..=max_denom {
        let mut counts = vec![0u32; valuations.len()];
        if search_compositions(denom, 0, &mut counts, &|counts: &[u32]| {
            for (entry, (h, t)) in assessment.entries().iter().zip(&truth) {
                let h_mass: u32 = counts
                    .iter()
                    .zip(h)
                    .filter(|(_, &active)| active)
                    .map(|(c, _)| *c)
                    .sum();
                if h_mass == 0 {
                    return false;
                }
                let t_mass: u32 = counts
                    .iter()
                    .zip(t)
                    .filter(|(_, &active)| active)
                    .map(|(c, _)| *c)
                    .sum();
                if rat(t_mass as i64, h_mass as i64) != entry.lower {
                    return false;
                }
            }
            true
        }) {
            return true;
        }
    }
    false
}

fn search_compositions(
    remaining: u32,
    index: usize,
    counts: &mut Vec<u32>,
    accept: &impl Fn(&[u32]) -> bool,
) -> bool {
    if index + 1 == counts.len() {
        counts[index] = remaining;
        let ok = accept(counts);
        counts[index] = 0;
        return ok;
    }
    for take in 0..=remaining {
        counts[index] = take;
        if search_compositions(remaining - take, index + 1, counts, accept) {
            counts[index] = 0;
            return true;
        }
    }
    counts[index] = 0;
    false
}

/// Widening any premise interval can only widen the conclusion interval.
#[test]
fn widening_premises_never_narrows_conclusions() {
    let mut rng = ChaCha8Rng::seed_from_u64(3003);
    let atoms = ["A", "B", "C"];
    for _ in 0..15 {
        let point = random_coherent_assessment(&mut rng, &atoms, 2);
        let conclusion = random_event(&mut rng, &atoms);
        let narrow = extension_interval(&point, &conclusion).unwrap();
        let delta = rat(1, 10);
        let widened = Assessment::new(
            point
                .entries()
                .iter()
                .map(|e| {
                    let lower = (&e.lower - &delta).max(Rational::zero());
                    let upper = (&e.upper + &delta).min(Rational::one());
                    (e.event.clone(), lower, upper)
                })
                .collect(),
        )
        .unwrap();
        let wide = extension_interval(&widened, &conclusion).unwrap();
        assert!(
            wide.lower <= narrow.lower && narrow.upper <= wide.upper,
            "widened premises narrowed [{}, {}] to [{}, {}]",
            narrow.lower,
            narrow.upper,
            wide.lower,
            wide.upper
        );
    }
}

/// If a point assessment is coherent, any interval box containing it
/// entry-wise is g-coherent.
#[test]
fn interval_boxes_around_coherent_points_stay_coherent() {
    let mut rng = ChaCha8Rng::seed_from_u64(4004);
    let atoms = ["A", "B"];
    for _ in 0..15 {
        let point = random_coherent_assessment(&mut rng, &atoms, 2);
        let boxed = Assessment::new(
            point
                .entries()
                .iter()
                .map(|e| {
                    let lower = (&e.lower - random_probability(&mut rng, 8)).max(Rational::zero());
                    let upper = (&e.upper + random_probability(&mut rng, 8)).min(Rational::one());
                    (e.event.clone(), lower, upper)
                })
                .collect(),
        )
        .unwrap();
        assert!(check_coherence(&boxed).unwrap().coherent);
    }
}

/// Spot-check of interval endpoints by grid probing around them.
#[test]
fn endpoints_are_sharp_on_sampled_problems() {
    let mut rng = ChaCha8Rng::seed_from_u64(5005);
    let atoms = ["A", "B", "C"];
    for _ in 0..10 {
        let premises = random_coherent_assessment(&mut rng, &atoms, 2);
        let conclusion = random_event(&mut rng, &atoms);
        let result = extension_interval(&premises, &conclusion).unwrap();
        let width = &result.upper - &result.lower;
        for k in 0..=4 {
            let z = &result.lower + &width * rat(k, 4);
            assert!(
                is_coherent_extension(&premises, &conclusion, &z).unwrap(),
                "z={z} inside [{}, {}] must be coherent",
                result.lower,
                result.upper
            );
        }
        let eps = rat(1, 1000);
        if result.lower > eps {
            let below = &result.lower - &eps;
            assert!(!is_coherent_extension(&premises, &conclusion, &below).unwrap());
        }
        let above = &result.upper + &eps;
        if above <= Rational::one() {
            assert!(!is_coherent_extension(&premises, &conclusion, &above).unwrap());
        }
    }
}

/// The verdict layer trace starts with the full active set and reports a
/// solvable layer per recursion step for coherent assessments.
#[test]
fn layer_traces_shrink_and_end_solvable() {
    let assessment = Assessment::point(vec![
        (uncond("B"), rat(1, 1)),
        (cond("B", "A"), rat(1, 2)),
        (cond("C", "A"), rat(1, 3)),
    ])
    .unwrap();
    let verdict = check_coherence(&assessment).unwrap();
    assert!(verdict.coherent);
    assert!(verdict.layers.len() >= 2, "certainty forces a zero layer");
    let mut previous = usize::MAX;
    for layer in &verdict.layers {
        assert!(layer.solvable);
        assert!(layer.active.len() < previous);
        previous = layer.active.len();
    }
}

/// Formula atoms outside the assessment alphabet are rejected before any
/// enumeration blows up.
#[test]
fn atom_limit_propagates_from_enumeration() {
    let mut conjunction = Formula::atom("y0");
    for i in 1..=16 {
        conjunction = Formula::and(conjunction, Formula::atom(&format!("y{i}")));
    }
    let assessment = Assessment::point(vec![(
        prevision_core::ConditionalEvent::unconditional(conjunction).unwrap(),
        rat(1, 2),
    )])
    .unwrap();
    assert!(matches!(
        check_coherence(&assessment),
        Err(Error::AtomLimitExceeded { .. })
    ));
}
